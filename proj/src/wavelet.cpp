#include "cutwave/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "cutwave/basis.hpp"
#include "cutwave/errors.hpp"

namespace cutwave {

// ---------------------------------------------------------------------------
// WaveletTree

WaveletTree::WaveletTree(std::size_t n) : n_(n) {
  TreeNode root;
  root.id = 0;
  root.level = 1;
  root.members = VertexSet::range(static_cast<Vertex>(n));
  nodes_.push_back(std::move(root));
}

std::pair<NodeId, NodeId> WaveletTree::split(NodeId id, VertexSet a, VertexSet b, SplitKind kind) {
  if (id >= nodes_.size()) throw ValidationError("split: unknown node " + std::to_string(id));
  if (!nodes_[id].is_leaf()) throw ValidationError("split: node " + std::to_string(id) + " already split");
  if (a.empty() || b.empty()) throw ValidationError("split: both children must be nonempty");
  if (b.front() < a.front()) std::swap(a, b);

  // Children must partition the parent.
  const auto& parent = nodes_[id].members;
  if (a.size() + b.size() != parent.size()) throw ValidationError("split: children do not partition node");
  std::vector<Vertex> merged;
  merged.reserve(parent.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  if (!std::equal(merged.begin(), merged.end(), parent.begin(), parent.end())) {
    throw ValidationError("split: children do not partition node");
  }

  const auto level = nodes_[id].level + 1;
  const auto left = static_cast<NodeId>(nodes_.size());
  const auto right = left + 1;
  TreeNode l, r;
  l.id = left;
  l.level = level;
  l.members = std::move(a);
  l.parent = id;
  r.id = right;
  r.level = level;
  r.members = std::move(b);
  r.parent = id;
  nodes_.push_back(std::move(l));
  nodes_.push_back(std::move(r));
  nodes_[id].children = {left, right};
  nodes_[id].kind = kind;
  return {left, right};
}

std::vector<NodeId> WaveletTree::leaves() const {
  std::vector<NodeId> out;
  for (const auto& nd : nodes_) {
    if (nd.is_leaf()) out.push_back(nd.id);
  }
  return out;
}

WaveletTree WaveletTree::canonicalized() const {
  WaveletTree out;
  out.n_ = n_;
  out.nodes_.reserve(nodes_.size());
  // Explicit stack of (old id, new parent id) in pre-order, left first.
  struct Item {
    NodeId old_id;
    std::optional<NodeId> new_parent;
    bool is_left;
  };
  std::vector<Item> stack{{0, std::nullopt, true}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const TreeNode& src = nodes_[it.old_id];
    TreeNode dst;
    dst.id = static_cast<NodeId>(out.nodes_.size());
    dst.level = src.level;
    dst.members = src.members;
    dst.parent = it.new_parent;
    dst.kind = src.kind;
    if (it.new_parent) {
      auto& p = out.nodes_[*it.new_parent];
      if (it.is_left) {
        p.children = std::pair<NodeId, NodeId>{dst.id, 0};
      } else {
        p.children->second = dst.id;
      }
    }
    out.nodes_.push_back(std::move(dst));
    if (src.children) {
      const NodeId me = out.nodes_.back().id;
      stack.push_back({src.children->second, me, false});
      stack.push_back({src.children->first, me, true});
    }
  }
  return out;
}

void WaveletTree::validate(bool require_full) const {
  if (nodes_.empty()) throw ValidationError("tree has no root");
  if (nodes_[0].members != VertexSet::range(static_cast<Vertex>(n_))) {
    throw ValidationError("root must contain every vertex");
  }
  if (nodes_[0].parent) throw ValidationError("root has a parent");
  for (const auto& nd : nodes_) {
    if (nd.members.empty()) throw ValidationError("node " + std::to_string(nd.id) + " is empty");
    if (nd.is_leaf()) {
      if (require_full && nd.members.size() != 1) {
        throw ValidationError("leaf " + std::to_string(nd.id) + " is not a singleton");
      }
      continue;
    }
    const auto [l, r] = *nd.children;
    if (l >= nodes_.size() || r >= nodes_.size() || l <= nd.id || r <= nd.id) {
      throw ValidationError("node " + std::to_string(nd.id) + " has invalid children");
    }
    const auto& a = nodes_[l];
    const auto& b = nodes_[r];
    if (a.parent != nd.id || b.parent != nd.id) throw ValidationError("child/parent links disagree");
    if (a.level != nd.level + 1 || b.level != nd.level + 1) throw ValidationError("child level mismatch");
    if (b.members.front() < a.members.front()) {
      throw ValidationError("left child of node " + std::to_string(nd.id) + " must hold the smallest id");
    }
    std::vector<Vertex> merged;
    std::merge(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
               std::back_inserter(merged));
    if (!std::equal(merged.begin(), merged.end(), nd.members.begin(), nd.members.end())) {
      throw ValidationError("children of node " + std::to_string(nd.id) + " do not partition it");
    }
  }
  // Every non-root node must be referenced by exactly its parent.
  std::vector<int> refs(nodes_.size(), 0);
  for (const auto& nd : nodes_) {
    if (nd.children) {
      ++refs[nd.children->first];
      ++refs[nd.children->second];
    }
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (refs[i] != 1) throw ValidationError("node " + std::to_string(i) + " is not reachable exactly once");
  }
}

WaveletTree WaveletTree::from_nodes(std::size_t n, std::vector<TreeNode> nodes) {
  WaveletTree t;
  t.n_ = n;
  t.nodes_ = std::move(nodes);
  for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
    if (t.nodes_[i].id != i) throw ValidationError("node ids must be 0..count-1 in order");
  }
  t.validate(false);
  return t;
}

// ---------------------------------------------------------------------------
// Coefficients

double difference_from_sums(double sum_i, std::size_t size_i, double sum_j, std::size_t size_j) {
  const double ni = static_cast<double>(size_i);
  const double nj = static_cast<double>(size_j);
  return (nj * sum_i - ni * sum_j) / (ni + nj);
}

double difference_coefficient(std::span<const double> w, const VertexSet& xi, const VertexSet& xj) {
  if (xi.empty() || xj.empty()) throw DimensionError("difference_coefficient: empty side");
  double si = 0.0, sj = 0.0;
  for (Vertex v : xi) si += w[v];
  for (Vertex v : xj) sj += w[v];
  return difference_from_sums(si, xi.size(), sj, xj.size());
}

double coefficient_energy(double a, std::size_t size_i, std::size_t size_j) {
  if (size_i == 0 || size_j == 0) throw DimensionError("coefficient_energy: sizes must be >= 1");
  return a * a / static_cast<double>(size_i) + a * a / static_cast<double>(size_j);
}

double energy_from_means(double mean_i, double mean_j, std::size_t size_i, std::size_t size_j) {
  const double d = mean_i - mean_j;
  const double ni = static_cast<double>(size_i);
  const double nj = static_cast<double>(size_j);
  return d * d * ni * nj / (ni + nj);
}

Transform transform(const WaveletTree& t, std::span<const double> w) {
  if (w.size() != t.num_vertices()) throw DimensionError("transform: signal length != tree size");
  const auto nodes = t.nodes();
  std::vector<double> sums(nodes.size(), 0.0);
  Transform out;
  // Children have larger ids than parents: a reverse sweep is bottom-up.
  for (std::size_t k = nodes.size(); k-- > 0;) {
    const auto& nd = nodes[k];
    if (nd.is_leaf()) {
      for (Vertex v : nd.members) sums[k] += w[v];
      continue;
    }
    const auto [l, r] = *nd.children;
    sums[k] = sums[l] + sums[r];
    out.diffs[nd.id] = difference_from_sums(sums[l], nodes[l].members.size(), sums[r], nodes[r].members.size());
  }
  out.average = w.empty() ? 0.0 : sums[0] / static_cast<double>(w.size());
  return out;
}

Signal inverse(const WaveletTree& t, const Transform& c) {
  const auto nodes = t.nodes();
  std::vector<double> offset(nodes.size(), 0.0);
  Signal out(t.num_vertices(), 0.0);
  if (nodes.empty()) return out;
  offset[0] = c.average;
  for (const auto& nd : nodes) {
    if (nd.is_leaf()) {
      for (Vertex v : nd.members) out[v] = offset[nd.id];
      continue;
    }
    auto it = c.diffs.find(nd.id);
    if (it == c.diffs.end()) throw DimensionError("inverse: missing coefficient for node " + std::to_string(nd.id));
    const auto [l, r] = *nd.children;
    offset[l] = offset[nd.id] + it->second / static_cast<double>(nodes[l].members.size());
    offset[r] = offset[nd.id] - it->second / static_cast<double>(nodes[r].members.size());
  }
  return out;
}

std::vector<double> node_energies(const WaveletTree& t, const Transform& c) {
  std::vector<double> e(t.size(), 0.0);
  for (const auto& [id, a] : c.diffs) {
    const auto& nd = t.node(id);
    e[id] = coefficient_energy(a, t.node(nd.children->first).members.size(),
                               t.node(nd.children->second).members.size());
  }
  return e;
}

// ---------------------------------------------------------------------------
// Compression

std::size_t bits_per_edge(std::size_t m) {
  std::size_t bits = 1;
  while ((std::size_t{1} << bits) < m) ++bits;
  return bits;
}

std::size_t CompressedSignal::budget_used() const {
  std::size_t total = 0;
  for (const auto& c : cuts) total += c.edges.size();
  return total;
}

std::size_t CompressedSignal::size_bits() const {
  return budget_used() * bits_per_edge(m) + 64 * keep_count();
}

double CompressedSignal::size_fraction() const {
  return n == 0 ? 0.0 : static_cast<double>(size_bits()) / (64.0 * static_cast<double>(n));
}

CompressResult compress(const Graph& g, const WaveletTree& t, std::span<const double> w, std::size_t keep) {
  check_signal(g, w);
  if (t.num_vertices() != g.num_vertices()) throw DimensionError("compress: tree/graph size mismatch");
  const Transform tr = transform(t, w);
  const std::vector<double> energy = node_energies(t, tr);

  // Candidate coefficients; index -1 stands for the average.
  struct Cand {
    std::int64_t node;
    double energy;
  };
  std::vector<Cand> cands;
  cands.push_back({-1, average_energy(tr.average, g.num_vertices())});
  for (const auto& [id, a] : tr.diffs) cands.push_back({static_cast<std::int64_t>(id), energy[id]});
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.energy != b.energy) return a.energy > b.energy;
    return a.node < b.node;
  });

  CompressResult res;
  if (keep > cands.size()) {
    res.keep_clamped = true;
    keep = cands.size();
  }
  CompressedSignal& cs = res.compressed;
  cs.n = g.num_vertices();
  cs.m = g.num_edges();
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Cand& c = cands[i];
    res.signal_energy += c.energy;
    if (i >= keep) {
      res.dropped_energy += c.energy;
      continue;
    }
    if (c.node < 0) {
      cs.average = tr.average;
    } else {
      cs.kept.push_back({static_cast<NodeId>(c.node), tr.diffs.at(static_cast<NodeId>(c.node))});
    }
  }
  std::sort(cs.kept.begin(), cs.kept.end(),
            [](const KeptCoefficient& a, const KeptCoefficient& b) { return a.node < b.node; });

  for (const auto& nd : t.nodes()) {
    if (nd.is_leaf() || nd.kind != SplitKind::adapted) continue;
    const auto& left = t.node(nd.children->first).members;
    StoredCut sc{nd.id, {}};
    for (Vertex u : left) {
      for (Vertex v : g.neighbors(u)) {
        if (!left.contains(v) && nd.members.contains(v)) sc.edges.emplace_back(u, v);
      }
    }
    cs.cuts.push_back(std::move(sc));
  }
  return res;
}

namespace {

// Splits `members` after deleting the stored cut edges. Every resulting component must
// touch a cut edge, whose orientation says which side it belongs to.
std::pair<VertexSet, VertexSet> replay_adapted(const Graph& g, const VertexSet& members, const StoredCut& cut) {
  if (cut.edges.empty()) throw FormatError("stored cut for node " + std::to_string(cut.node) + " has no edges");
  const Subgraph sub = induced_subgraph(g, members);
  const std::size_t n = members.size();

  std::vector<Edge> removed;
  std::vector<std::pair<Vertex, char>> anchors;  // (local vertex, side)
  for (const auto& [u, v] : cut.edges) {
    if (!g.has_edge(u, v)) {
      throw FormatError("stored cut edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not in the graph");
    }
    if (!members.contains(u) || !members.contains(v)) {
      throw FormatError("stored cut edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is outside node " + std::to_string(cut.node));
    }
    const Vertex lu = sub.local_of(u);
    const Vertex lv = sub.local_of(v);
    removed.emplace_back(std::min(lu, lv), std::max(lu, lv));
    anchors.emplace_back(lu, 1);
    anchors.emplace_back(lv, 2);
  }
  std::sort(removed.begin(), removed.end());

  std::vector<Edge> kept_edges;
  for (const auto& e : sub.graph.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept_edges.push_back(e);
  }
  const Graph rest(n, std::move(kept_edges));
  std::size_t ncomp = 0;
  const auto label = rest.component_labels(&ncomp);
  std::vector<char> comp_side(ncomp, 0);
  for (const auto& [lv, side] : anchors) {
    char& s = comp_side[label[lv]];
    if (s != 0 && s != side) {
      throw FormatError("stored cut for node " + std::to_string(cut.node) + " is not a bipartition");
    }
    s = side;
  }
  std::vector<Vertex> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    const char s = comp_side[label[i]];
    if (s == 0) throw FormatError("stored cut for node " + std::to_string(cut.node) + " leaves a component unassigned");
    (s == 1 ? a : b).push_back(sub.to_global[i]);
  }
  if (a.empty() || b.empty()) throw FormatError("stored cut for node " + std::to_string(cut.node) + " is one-sided");
  return {VertexSet(std::move(a)), VertexSet(std::move(b))};
}

}  // namespace

WaveletTree replay_tree(const Graph& g, std::span<const StoredCut> cuts) {
  std::map<NodeId, const StoredCut*> by_node;
  for (const auto& c : cuts) {
    if (!by_node.emplace(c.node, &c).second) {
      throw FormatError("duplicate stored cut for node " + std::to_string(c.node));
    }
  }
  WaveletTree t(g.num_vertices());
  // Depth-first, left first: the visit counter is the node's canonical (pre-order) id.
  std::vector<NodeId> stack{0};
  NodeId preorder = 0;
  std::size_t used = 0;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const NodeId canon_id = preorder++;
    const VertexSet members = t.node(id).members;
    if (members.size() < 2) continue;
    std::pair<NodeId, NodeId> kids;
    if (auto it = by_node.find(canon_id); it != by_node.end()) {
      auto [a, b] = replay_adapted(g, members, *it->second);
      kids = t.split(id, std::move(a), std::move(b), SplitKind::adapted);
      ++used;
    } else {
      CutResult rc = ratio_cut(g, members);
      kids = t.split(id, std::move(rc.left), std::move(rc.right), SplitKind::structural);
    }
    stack.push_back(kids.second);
    stack.push_back(kids.first);
  }
  if (used != by_node.size()) throw FormatError("stored cut refers to a node that is not internal");
  return t.canonicalized();
}

Signal decompress(const CompressedSignal& c, const Graph& g) {
  if (c.n != g.num_vertices() || c.m != g.num_edges()) {
    throw FormatError("compressed signal was built for n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) +
                      " but graph has n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()));
  }
  return expand(replay_tree(g, c.cuts), c);
}

Signal expand(const WaveletTree& t, const CompressedSignal& c) {
  if (c.n != t.num_vertices()) throw FormatError("compressed signal and tree disagree on n");
  Transform tr;
  tr.average = c.average.value_or(0.0);
  for (const auto& nd : t.nodes()) {
    if (!nd.is_leaf()) tr.diffs[nd.id] = 0.0;
  }
  for (const auto& k : c.kept) {
    auto it = tr.diffs.find(k.node);
    if (it == tr.diffs.end()) throw FormatError("kept coefficient for node " + std::to_string(k.node) + " does not exist");
    it->second = k.value;
  }
  return inverse(t, tr);
}

}  // namespace cutwave
