#include <algorithm>
#include <numeric>

#include "cutwave/cut.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/wavelet.hpp"

namespace cutwave {

Region make_region(const Graph& g, std::span<const double> w, const VertexSet& s) {
  check_signal(g, w);
  Region r{induced_subgraph(g, s), {}};
  r.w.reserve(s.size());
  for (Vertex v : s) r.w.push_back(w[v]);
  return r;
}

CutResult make_cut(const Region& r, std::span<const char> first_side, double beta) {
  const auto& to_global = r.sub.to_global;
  const std::size_t n = r.size();
  // Orient so that the side holding local id 0 (smallest global id) is left.
  const char left_flag = first_side[0];
  std::vector<Vertex> left, right;
  double sum_l = 0.0, sum_r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (first_side[i] == left_flag) {
      left.push_back(to_global[i]);
      sum_l += r.w[i];
    } else {
      right.push_back(to_global[i]);
      sum_r += r.w[i];
    }
  }
  CutResult out;
  for (const auto& [u, v] : r.sub.graph.edges()) {
    if (first_side[u] == first_side[v]) continue;
    if (first_side[u] == left_flag) {
      out.cut_edges.emplace_back(to_global[u], to_global[v]);
    } else {
      out.cut_edges.emplace_back(to_global[v], to_global[u]);
    }
  }
  if (!left.empty() && !right.empty()) {
    out.energy = energy_from_means(sum_l / static_cast<double>(left.size()),
                                   sum_r / static_cast<double>(right.size()), left.size(), right.size());
  }
  out.left = VertexSet(std::move(left));
  out.right = VertexSet(std::move(right));
  out.beta = beta;
  return out;
}

std::optional<CutResult> sweep(std::span<const double> x, const Region& r, std::size_t q) {
  const std::size_t n = r.size();
  if (x.size() != n) throw DimensionError("sweep: |x| must equal |s|");
  if (n < 2) return std::nullopt;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  // Local ids follow global id order, so the id tie-break is the local index.
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });

  double mean = 0.0;
  for (double v : r.w) mean += v;
  mean /= static_cast<double>(n);
  double total = 0.0;
  for (double v : r.w) total += v - mean;

  const Graph& sg = r.sub.graph;
  std::vector<char> in_prefix(n, 0);
  std::ptrdiff_t cut = 0;
  double prefix_sum = 0.0;
  std::size_t best_k = 0;
  double best_energy = -1.0;
  for (std::size_t k = 1; k < n; ++k) {
    const Vertex v = order[k - 1];
    for (Vertex u : sg.neighbors(v)) cut += in_prefix[u] ? -1 : 1;
    in_prefix[v] = 1;
    prefix_sum += r.w[v] - mean;
    if (static_cast<std::size_t>(cut) > q) continue;
    const double mi = prefix_sum / static_cast<double>(k);
    const double mj = (total - prefix_sum) / static_cast<double>(n - k);
    const double e = energy_from_means(mi, mj, k, n - k);
    if (e > best_energy) {
      best_energy = e;
      best_k = k;
    }
  }
  if (best_k == 0) return std::nullopt;
  std::vector<char> side(n, 0);
  for (std::size_t i = 0; i < best_k; ++i) side[order[i]] = 1;
  return make_cut(r, side);
}

std::optional<CutResult> sweep(std::span<const double> x, const Graph& g, std::span<const double> w,
                               const VertexSet& s, std::size_t q) {
  return sweep(x, make_region(g, w, s), q);
}

}  // namespace cutwave
