#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cutwave/graph.hpp"

namespace cutwave {

using NodeId = std::uint32_t;

// How an internal node was split. Leaves keep the default.
enum class SplitKind : std::uint8_t { structural, adapted };

struct TreeNode {
  NodeId id = 0;
  std::uint32_t level = 1;  // root is level 1
  VertexSet members;
  std::optional<NodeId> parent;
  // (left, right); left is the child holding the smallest vertex id.
  std::optional<std::pair<NodeId, NodeId>> children;
  SplitKind kind = SplitKind::structural;

  bool is_leaf() const { return !children.has_value(); }
};

// Binary hierarchy of vertex sets whose root is V = {0..n-1}.
// Children are always created after their parent, so child ids exceed parent ids.
class WaveletTree {
 public:
  WaveletTree() = default;
  explicit WaveletTree(std::size_t n);

  std::size_t num_vertices() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  NodeId root() const { return 0; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  std::span<const TreeNode> nodes() const { return nodes_; }

  // Splits leaf `id` into the two given halves and returns (left, right).
  // Orientation is fixed by the smallest vertex id, regardless of argument order.
  std::pair<NodeId, NodeId> split(NodeId id, VertexSet a, VertexSet b, SplitKind kind);

  std::vector<NodeId> leaves() const;
  std::size_t num_internal() const { return (nodes_.size() - 1) / 2; }

  // Same hierarchy renumbered in pre-order (left subtree first).
  WaveletTree canonicalized() const;

  // Throws ValidationError if the partition invariants fail; with `require_full`,
  // every leaf must also be a singleton.
  void validate(bool require_full = true) const;

  // Rebuilds a tree from explicit nodes (as read from a tree file) and validates it.
  static WaveletTree from_nodes(std::size_t n, std::vector<TreeNode> nodes);

 private:
  std::size_t n_ = 0;
  std::vector<TreeNode> nodes_;
};

struct Transform {
  double average = 0.0;
  std::map<NodeId, double> diffs;  // one per internal node
};

// Size-weighted difference of child sums:
//   (|Xj|/|Xk|) sum_{Xi} W - (|Xi|/|Xk|) sum_{Xj} W.
double difference_coefficient(std::span<const double> w, const VertexSet& xi, const VertexSet& xj);
double difference_from_sums(double sum_i, std::size_t size_i, double sum_j, std::size_t size_j);

// L2 energy carried by a difference coefficient: a^2/|Xi| + a^2/|Xj|.
double coefficient_energy(double a, std::size_t size_i, std::size_t size_j);

// Same energy written through the child means: (mu_i - mu_j)^2 |Xi||Xj| / (|Xi|+|Xj|).
double energy_from_means(double mean_i, double mean_j, std::size_t size_i, std::size_t size_j);

// Energy of the average coefficient, n * a00^2.
inline double average_energy(double average, std::size_t n) {
  return static_cast<double>(n) * average * average;
}

Transform transform(const WaveletTree& t, std::span<const double> w);
Signal inverse(const WaveletTree& t, const Transform& c);

// Per-node coefficient energies, in node id order (0 for leaves).
std::vector<double> node_energies(const WaveletTree& t, const Transform& c);

// ---------------------------------------------------------------------------
// Compression

// A signal-adapted split: its cut edges, each written (left endpoint, right endpoint).
struct StoredCut {
  NodeId node = 0;
  std::vector<Edge> edges;
};

struct KeptCoefficient {
  NodeId node = 0;
  double value = 0.0;
};

struct CompressedSignal {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<StoredCut> cuts;       // ascending node id
  std::optional<double> average;     // present only when a00 was kept
  std::vector<KeptCoefficient> kept; // ascending node id

  std::size_t keep_count() const { return kept.size() + (average ? 1 : 0); }
  std::size_t budget_used() const;
  // ceil(log2 m) bits per stored edge plus 64 bits per kept coefficient.
  std::size_t size_bits() const;
  // size_bits relative to 64 bits per vertex value.
  double size_fraction() const;
};

std::size_t bits_per_edge(std::size_t m);

struct CompressResult {
  CompressedSignal compressed;
  double dropped_energy = 0.0;  // predicted ||W - W'||^2
  double signal_energy = 0.0;   // ||W||^2
  bool keep_clamped = false;    // requested keep exceeded the coefficient count
};

// Keeps the `keep` highest-energy coefficients (a00 counts as one, with energy n*a00^2).
// Ties favour a00, then smaller node ids. `t` must be a canonical (pre-order) full tree.
CompressResult compress(const Graph& g, const WaveletTree& t, std::span<const double> w,
                        std::size_t keep);

// Rebuilds the tree by replaying stored cuts and structural ratio cuts, then inverts
// with dropped coefficients set to zero.
Signal decompress(const CompressedSignal& c, const Graph& g);

// Inverse over a known tree with the dropped coefficients set to zero.
Signal expand(const WaveletTree& t, const CompressedSignal& c);

// Tree the decompressor reconstructs from the graph and stored cuts alone.
WaveletTree replay_tree(const Graph& g, std::span<const StoredCut> cuts);

}  // namespace cutwave
