#include "cutwave/spectral_cut.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cutwave/errors.hpp"
#include "cutwave/kernels.hpp"

namespace cutwave {

DenseOperatorBundle build_bundle(const Region& r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  if (n < 2) throw DimensionError("build_bundle: vertex set needs at least 2 vertices");
  DenseOperatorBundle b;
  b.w = Eigen::Map<const Eigen::VectorXd>(r.w.data(), n);
  b.C = static_cast<double>(n) * Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Ones(n, n);
  b.L = dense_laplacian(r.sub.graph);
  b.S.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = b.w(i) - b.w(j);
      b.S(i, j) = d * d;
    }
  }
  return b;
}

DenseOperatorBundle build_bundle(const Graph& g, std::span<const double> w, const VertexSet& s) {
  if (s.size() < 2) throw DimensionError("build_bundle: vertex set needs at least 2 vertices");
  return build_bundle(make_region(g, w, s));
}

Eigen::MatrixXd pinv_sqrt(const Eigen::MatrixXd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw NumericalError("pinv_sqrt: eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double tol = 1e-9 * std::max(lam.maxCoeff(), 0.0);
  Eigen::VectorXd inv_sqrt(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) inv_sqrt(i) = lam(i) > tol ? 1.0 / std::sqrt(lam(i)) : 0.0;
  const Eigen::MatrixXd& V = es.eigenvectors();
  return V * inv_sqrt.asDiagonal() * V.transpose();
}

namespace {

Eigen::MatrixXd regularized(const DenseOperatorBundle& b, double beta) {
  if (!(beta >= 0.0)) throw DimensionError("beta must be >= 0");
  return b.C + beta * b.L;
}

Eigen::MatrixXd sandwich(const Eigen::MatrixXd& P, const Eigen::MatrixXd& csc) {
  Eigen::MatrixXd M = P * csc * P;
  // Symmetrize away rounding asymmetry before the eigensolver.
  return 0.5 * (M + M.transpose());
}

}  // namespace

Eigen::MatrixXd build_M(const DenseOperatorBundle& b, double beta) {
  const Eigen::MatrixXd P = pinv_sqrt(regularized(b, beta));
  const Eigen::MatrixXd csc = b.C * b.S * b.C;
  return sandwich(P, csc);
}

Eigen::VectorXd min_eigenvector_dense(const Eigen::MatrixXd& M) {
  const Eigen::Index n = M.rows();
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  if (n == 0) return e;
  if (M.cwiseAbs().maxCoeff() == 0.0) {
    e(0) = 1.0;
    return e;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success) throw NumericalError("min_eigenvector_dense: eigendecomposition failed");
  e = es.eigenvectors().col(0);
  const double scale = e.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(e(i)) > 1e-12 * scale) {
      if (e(i) < 0) e = -e;
      break;
    }
  }
  return e;
}

Eigen::VectorXd recover_x(const DenseOperatorBundle& b, double beta, const Eigen::VectorXd& y) {
  if (y.size() != b.C.rows()) throw DimensionError("recover_x: |y| must equal |s|");
  return pinv_sqrt(regularized(b, beta)) * y;
}

std::optional<CutResult> swt_probe(const Region& r, const DenseOperatorBundle& b, const Eigen::MatrixXd& csc,
                                   double beta, std::size_t q) {
  const Eigen::MatrixXd P = pinv_sqrt(regularized(b, beta));
  const Eigen::VectorXd y = min_eigenvector_dense(sandwich(P, csc));
  const Eigen::VectorXd x = P * y;
  auto cut = sweep(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())), r, q);
  if (cut) cut->beta = beta;
  return cut;
}

std::optional<CutResult> swt_cut(const Region& r, std::size_t q, const SwtParams& params) {
  if (r.size() < 2) throw DimensionError("swt_cut: vertex set needs at least 2 vertices");
  if (!(params.beta_max > 0.0)) throw DimensionError("swt_cut: beta_max must be > 0");
  const DenseOperatorBundle b = build_bundle(r);
  const Eigen::MatrixXd csc = b.C * b.S * b.C;

  std::optional<CutResult> best;
  // Swept energy at one beta; -1 marks an infeasible probe. Best-seen wins, earliest on ties.
  auto probe = [&](double beta) {
    auto cut = swt_probe(r, b, csc, beta, q);
    if (!cut) return -1.0;
    const double e = cut->energy;
    if (!best || e > best->energy) best = std::move(cut);
    return e;
  };

  probe(0.0);
  probe(params.beta_max);
  if (params.search_iters <= 0) return best;

  // The swept objective need not be unimodal; golden section only steers the probes.
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = params.beta_max;
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = probe(c);
  int used = 1;
  double fd = -1.0;
  if (used < params.search_iters) {
    fd = probe(d);
    ++used;
  }
  while (used < params.search_iters) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = probe(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = probe(d);
    }
    ++used;
  }
  return best;
}

std::optional<CutResult> swt_cut(const Graph& g, std::span<const double> w, const VertexSet& s, std::size_t q,
                                 const SwtParams& params) {
  if (s.size() < 2) throw DimensionError("swt_cut: vertex set needs at least 2 vertices");
  return swt_cut(make_region(g, w, s), q, params);
}

}  // namespace cutwave
