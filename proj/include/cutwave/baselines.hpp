#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cutwave/graph.hpp"
#include "cutwave/wavelet.hpp"

namespace cutwave {

// Largest graph accepted by the dense Fourier baseline.
inline constexpr std::size_t kMaxFourierVertices = 10000;

// Laplacian eigendecomposition; eigenvalues ascending, eigenvectors orthonormal columns.
class FourierBasis {
 public:
  explicit FourierBasis(const Graph& g);

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  std::vector<double> forward(std::span<const double> w) const;
  Signal inverse(std::span<const double> coefficients) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

std::vector<double> gft(const Graph& g, std::span<const double> w);

struct GftCompression {
  std::vector<std::size_t> kept;    // indices of kept coefficients, ascending
  std::vector<double> coefficients; // full coefficient vector with dropped entries zeroed
  Signal reconstruction;
  double l2_error = 0.0;            // ||w - reconstruction||_2
  double size_fraction = 0.0;       // keep / n
};

// Keeps the `keep` largest-magnitude coefficients (ties by smaller index).
GftCompression gft_compress(const FourierBasis& basis, std::span<const double> w, std::size_t keep);
GftCompression gft_compress(const Graph& g, std::span<const double> w, std::size_t keep);

// Signal-independent hierarchy from recursive ratio cuts; same tree as a zero-budget build_basis.
WaveletTree gwt_tree(const Graph& g);

}  // namespace cutwave
