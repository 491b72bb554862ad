#include "cutwave/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "cutwave/basis.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/kernels.hpp"

namespace cutwave {

FourierBasis::FourierBasis(const Graph& g) {
  if (g.num_vertices() > kMaxFourierVertices) {
    throw DimensionError("gft: n=" + std::to_string(g.num_vertices()) + " exceeds the dense limit of " +
                         std::to_string(kMaxFourierVertices));
  }
  if (g.num_vertices() == 0) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g));
  if (es.info() != Eigen::Success) throw NumericalError("gft: eigendecomposition failed");
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

std::vector<double> FourierBasis::forward(std::span<const double> w) const {
  if (w.size() != size()) throw DimensionError("gft: |w| must equal n");
  const auto n = static_cast<Eigen::Index>(w.size());
  const Eigen::VectorXd c = eigenvectors_.transpose() * Eigen::Map<const Eigen::VectorXd>(w.data(), n);
  return {c.data(), c.data() + n};
}

Signal FourierBasis::inverse(std::span<const double> coefficients) const {
  if (coefficients.size() != size()) throw DimensionError("inverse gft: coefficient count must equal n");
  const auto n = static_cast<Eigen::Index>(coefficients.size());
  const Eigen::VectorXd w = eigenvectors_ * Eigen::Map<const Eigen::VectorXd>(coefficients.data(), n);
  return {w.data(), w.data() + n};
}

std::vector<double> gft(const Graph& g, std::span<const double> w) {
  check_signal(g, w);
  return FourierBasis(g).forward(w);
}

GftCompression gft_compress(const FourierBasis& basis, std::span<const double> w, std::size_t keep) {
  const std::size_t n = basis.size();
  if (keep > n) throw DimensionError("gft_compress: keep must be <= n");
  GftCompression out;
  const std::vector<double> c = basis.forward(w);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(c[a]) > std::abs(c[b]); });
  out.kept.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  std::sort(out.kept.begin(), out.kept.end());
  out.coefficients.assign(n, 0.0);
  for (std::size_t i : out.kept) out.coefficients[i] = c[i];
  out.reconstruction = basis.inverse(out.coefficients);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) err += (w[i] - out.reconstruction[i]) * (w[i] - out.reconstruction[i]);
  out.l2_error = std::sqrt(err);
  out.size_fraction = n == 0 ? 0.0 : static_cast<double>(keep) / static_cast<double>(n);
  return out;
}

GftCompression gft_compress(const Graph& g, std::span<const double> w, std::size_t keep) {
  check_signal(g, w);
  return gft_compress(FourierBasis(g), w, keep);
}

WaveletTree gwt_tree(const Graph& g) {
  const std::vector<double> zeros(g.num_vertices(), 0.0);
  BasisConfig cfg;
  cfg.q = 0;
  return build_basis(g, zeros, cfg);
}

}  // namespace cutwave
