#pragma once

#include <span>
#include <string>
#include <vector>

#include "cutwave/graph.hpp"

namespace cutwave {

enum class LayoutMode { laplacian, wavelet };

struct Layout {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::string> notes;  // written as '#' header lines
  bool degenerate = false;         // wavelet mode on a signal with zero operator M
};

// Spectral drawing from the Laplacian eigenvectors e2, e3.
Layout laplacian_layout(const Graph& g);

// Drawing from the wavelet operator M at a fixed beta. The first axis is x = P y for the
// most negative eigenvector y of M. M has rank one, so the second axis is taken from its
// null space: the lowest non-null eigenvector of (C + beta L), made orthogonal to y.
Layout wavelet_layout(const Graph& g, std::span<const double> w, double beta = 1000.0);

// "# ..." notes, then "id\tx\ty" and one row per vertex.
std::string format_layout(const Layout& layout);

}  // namespace cutwave
