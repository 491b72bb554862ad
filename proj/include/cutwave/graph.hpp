#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cutwave {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  // Throws ValidationError unless `members` is strictly ascending.
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet from_unsorted(std::vector<Vertex> members);
  static VertexSet range(Vertex n);  // {0, ..., n-1}

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex front() const { return members_.front(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable undirected, unweighted simple graph stored as CSR adjacency.
class Graph {
 public:
  Graph() = default;
  // Validates ids < n, rejects self-loops and duplicate edges.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  // Edges normalized to (min, max), sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {col_idx_.data() + row_ptr_[v], row_ptr_[v + 1] - row_ptr_[v]};
  }
  std::size_t degree(Vertex v) const { return row_ptr_[v + 1] - row_ptr_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const Vertex> col_idx() const { return col_idx_; }

  // Upper bound on the largest Laplacian eigenvalue: max_v deg(v) + max_{u~v} deg(u).
  double laplacian_bound() const;

  // Connected component label per vertex; labels ordered by smallest member.
  std::vector<Vertex> component_labels(std::size_t* count = nullptr) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<Vertex> col_idx_;
};

// Induced subgraph with local ids 0..|s|-1; local id i corresponds to global to_global[i].
struct Subgraph {
  Graph graph;
  VertexSet to_global;

  // Local id of a global vertex; throws if the vertex is not in the subgraph.
  Vertex local_of(Vertex global) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Number of edges with exactly one endpoint in s.
std::size_t cut_size(const Graph& g, const VertexSet& s);

// Complement of s in 0..n-1.
VertexSet complement(const VertexSet& s, std::size_t n);

// Edge-list text: "u v" per line, '#' comments, optional leading "n <count>" header.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

// Signal text: one decimal value per line, '#' comments.
using Signal = std::vector<double>;
Signal parse_signal(std::string_view text);
Signal load_signal(const std::string& path);
std::string format_signal(std::span<const double> w);

// Throws DimensionError on length mismatch, ValidationError on non-finite entries.
void check_signal(const Graph& g, std::span<const double> w);

// Affine map onto [0,1]; a constant signal maps to all zeros.
Signal normalize_signal(std::span<const double> w);

}  // namespace cutwave
