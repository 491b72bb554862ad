#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cutwave/graph.hpp"

namespace cutwave {

// Bipartition of a vertex set. `left` holds the smallest vertex id; every cut edge is
// written (left endpoint, right endpoint) in global ids.
struct CutResult {
  VertexSet left;
  VertexSet right;
  std::vector<Edge> cut_edges;
  double energy = 0.0;  // energy_from_means on (left, right)
  double beta = 0.0;
};

// A vertex set together with its induced subgraph and the restricted signal.
struct Region {
  Subgraph sub;
  std::vector<double> w;  // local signal, w[i] = W(sub.to_global[i])

  std::size_t size() const { return w.size(); }
};

Region make_region(const Graph& g, std::span<const double> w, const VertexSet& s);

// Builds a CutResult from a per-local-vertex side flag (1 = first side).
CutResult make_cut(const Region& r, std::span<const char> first_side, double beta = 0.0);

// Sorts vertices by ascending x (ties by id) and returns the highest-energy prefix cut
// whose cut size is at most q, or nothing if no prefix fits.
std::optional<CutResult> sweep(std::span<const double> x, const Region& r, std::size_t q);
std::optional<CutResult> sweep(std::span<const double> x, const Graph& g, std::span<const double> w,
                               const VertexSet& s, std::size_t q);

}  // namespace cutwave
