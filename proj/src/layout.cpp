#include "cutwave/layout.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cutwave/baselines.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/io.hpp"
#include "cutwave/spectral_cut.hpp"

namespace cutwave {

namespace {

void fix_sign(Eigen::VectorXd& v) {
  const double scale = v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * scale) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

Layout laplacian_layout(const Graph& g) {
  const FourierBasis basis(g);
  const std::size_t n = basis.size();
  Layout out;
  out.x.assign(n, 0.0);
  out.y.assign(n, 0.0);
  out.notes.push_back("mode laplacian");
  for (int axis = 0; axis < 2; ++axis) {
    const auto col = static_cast<Eigen::Index>(axis + 1);
    if (static_cast<std::size_t>(col) >= n) {
      out.notes.push_back("axis " + std::to_string(axis + 1) + " unavailable (n too small)");
      continue;
    }
    Eigen::VectorXd e = basis.eigenvectors().col(col);
    fix_sign(e);
    (axis == 0 ? out.x : out.y) = to_std(e);
  }
  return out;
}

Layout wavelet_layout(const Graph& g, std::span<const double> w, double beta) {
  check_signal(g, w);
  const std::size_t n = g.num_vertices();
  if (n > kMaxFourierVertices) throw DimensionError("layout: n exceeds the dense limit");
  Layout out;
  out.x.assign(n, 0.0);
  out.y.assign(n, 0.0);
  out.notes.push_back("mode wavelet beta " + fmt12(beta));
  if (n < 2) {
    out.degenerate = true;
    out.notes.push_back("degenerate: fewer than 2 vertices");
    return out;
  }
  const DenseOperatorBundle b = build_bundle(g, w, VertexSet::range(static_cast<Vertex>(n)));
  const Eigen::MatrixXd A = b.C + beta * b.L;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw NumericalError("layout: eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double tol = 1e-9 * lam.maxCoeff();
  Eigen::VectorXd inv_sqrt(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) inv_sqrt(i) = lam(i) > tol ? 1.0 / std::sqrt(lam(i)) : 0.0;
  const Eigen::MatrixXd P = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().transpose();
  Eigen::MatrixXd M = P * (b.C * b.S * b.C) * P;
  M = 0.5 * (M + M.transpose());

  const double scale = M.cwiseAbs().maxCoeff();
  const double wscale = b.w.squaredNorm();
  if (scale <= 1e-12 * std::max(wscale, 1.0)) {
    out.degenerate = true;
    out.notes.push_back("degenerate: zero operator M (constant signal)");
    return out;
  }
  const Eigen::VectorXd y1 = min_eigenvector_dense(M);
  Eigen::VectorXd x1 = P * y1;
  fix_sign(x1);
  out.x = to_std(x1);

  // Lowest non-null eigenvector of (C + beta L), orthogonalized against y1.
  Eigen::VectorXd y2;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) <= tol) continue;
    Eigen::VectorXd cand = es.eigenvectors().col(i);
    cand -= cand.dot(y1) * y1;
    if (cand.norm() > 1e-6) {
      y2 = cand.normalized();
      break;
    }
  }
  out.notes.push_back("axis 2 from the null space of M");
  if (y2.size() == 0) {
    out.notes.push_back("axis 2 unavailable");
    return out;
  }
  Eigen::VectorXd x2 = P * y2;
  fix_sign(x2);
  out.y = to_std(x2);
  return out;
}

std::string format_layout(const Layout& layout) {
  std::ostringstream os;
  for (const auto& note : layout.notes) os << "# " << note << '\n';
  os << "id\tx\ty\n";
  for (std::size_t i = 0; i < layout.x.size(); ++i) {
    os << i << '\t' << fmt12(layout.x[i]) << '\t' << fmt12(layout.y[i]) << '\n';
  }
  return os.str();
}

}  // namespace cutwave
