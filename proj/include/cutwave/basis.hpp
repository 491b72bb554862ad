#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cutwave/cut.hpp"
#include "cutwave/fast_cut.hpp"
#include "cutwave/graph.hpp"
#include "cutwave/spectral_cut.hpp"
#include "cutwave/wavelet.hpp"

namespace cutwave {

enum class CutAlgorithm { swt, fswt };

struct BasisConfig {
  std::size_t q = 0;  // total edge budget for signal-adapted cuts
  CutAlgorithm algo = CutAlgorithm::fswt;
  SwtParams swt;
  FswtParams fswt;
  bool parallel = true;  // compute leaf candidates concurrently
};

// Greedy construction: repeatedly commits the highest-energy candidate cut that fits the
// remaining budget, then refines every remaining leaf with ratio cuts. Disconnected leaves
// are split along components first, at no cost. Returns a canonical (pre-order) full tree.
WaveletTree build_basis(const Graph& g, std::span<const double> w, const BasisConfig& cfg);

// Signal-independent split of s. A disconnected induced subgraph loses the component
// holding its smallest vertex; otherwise the Fiedler prefix minimizing
// cut / (|Xi| |Xj|) is taken. Energy is filled from `w` when it is non-empty.
CutResult ratio_cut(const Graph& g, const VertexSet& s, std::span<const double> w = {});
CutResult ratio_cut(const Region& r);

// Second-smallest Laplacian eigenvector of a connected graph with n >= 2 vertices;
// unit norm, first nonzero entry positive.
std::vector<double> fiedler_vector(const Graph& g);

// Sum of |cut_edges| over adapted nodes, recomputed from the graph.
std::size_t adapted_cut_cost(const Graph& g, const WaveletTree& t);

}  // namespace cutwave
