#include "cutwave/fast_cut.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cutwave/basis.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/kernels.hpp"

namespace cutwave {

// ---------------------------------------------------------------------------
// Chebyshev plan

ChebyshevPlan make_plan(std::size_t p, double lo, double hi) {
  if (p < 2) throw DimensionError("make_plan: p must be >= 2");
  if (!(lo > 0.0) || !(hi > lo)) throw DimensionError("make_plan: need 0 < lo < hi");
  ChebyshevPlan plan{p, lo, hi, std::vector<double>(p, 0.0)};
  const double half_width = (hi - lo) / 2.0;
  const double center = (hi + lo) / 2.0;
  const auto N = static_cast<double>(p);
  for (std::size_t j = 0; j < p; ++j) {
    const double theta = std::numbers::pi * (static_cast<double>(j) + 0.5) / N;
    const double g = 1.0 / std::sqrt(half_width * std::cos(theta) + center);
    for (std::size_t k = 0; k < p; ++k) {
      plan.coefficients[k] += 2.0 / N * g * std::cos(static_cast<double>(k) * theta);
    }
  }
  return plan;
}

ChebyshevPlan make_plan(std::size_t p, double lambda_max) {
  if (!(lambda_max > 0.0)) throw DimensionError("make_plan: lambda_max must be > 0");
  return make_plan(p, 1e-3 * lambda_max, lambda_max);
}

double ChebyshevPlan::eval(double lambda) const {
  const double t = (lambda - (hi + lo) / 2.0) / ((hi - lo) / 2.0);
  double t0 = 1.0, t1 = t;
  double acc = coefficients[0] / 2.0 + coefficients[1] * t1;
  for (std::size_t k = 2; k < p; ++k) {
    const double t2 = 2.0 * t * t1 - t0;
    acc += coefficients[k] * t2;
    t0 = t1;
    t1 = t2;
  }
  return acc;
}

std::vector<double> cheb_apply(const Graph& g, const ChebyshevPlan& plan, std::span<const double> f) {
  const std::size_t n = g.num_vertices();
  if (f.size() != n) throw DimensionError("cheb_apply: |f| must equal n");
  std::size_t ncomp = 0;
  const auto labels = g.component_labels(&ncomp);
  std::vector<double> t0(f.begin(), f.end());
  project_off_components(labels, ncomp, t0);

  const double a = (plan.hi - plan.lo) / 2.0;
  const double b = (plan.hi + plan.lo) / 2.0;
  std::vector<double> t1(n), t2(n), lt(n), y(n);

  // T1 = (L - bI)/a f
  laplacian_apply(g, t0, lt);
  for (std::size_t i = 0; i < n; ++i) t1[i] = (lt[i] - b * t0[i]) / a;
  for (std::size_t i = 0; i < n; ++i) y[i] = plan.coefficients[0] / 2.0 * t0[i] + plan.coefficients[1] * t1[i];
  for (std::size_t k = 2; k < plan.p; ++k) {
    laplacian_apply(g, t1, lt);
    const double ck = plan.coefficients[k];
    for (std::size_t i = 0; i < n; ++i) {
      t2[i] = 2.0 * (lt[i] - b * t1[i]) / a - t0[i];
      y[i] += ck * t2[i];
    }
    std::swap(t0, t1);
    std::swap(t1, t2);
  }
  return y;
}

// ---------------------------------------------------------------------------
// Power method

std::vector<double> seeded_start_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
  return v;
}

namespace {

void remove_mean(std::span<double> v) {
  if (v.empty()) return;
  double s = 0.0;
  for (double x : v) s += x;
  s /= static_cast<double>(v.size());
  for (double& x : v) x -= s;
}

void fix_sign(std::span<double> v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-12 * scale) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

PowerResult power_method(const LinearOperator& apply, std::size_t n, const PowerOptions& options) {
  if (options.iters < 1) throw DimensionError("power_method: iters must be >= 1");
  PowerResult res;
  std::vector<double> u = seeded_start_vector(n, options.seed);
  if (options.project_constant) remove_mean(u);
  double nu = norm2(u);
  if (nu == 0.0) {
    u.assign(n, 0.0);
    if (n > 0) u[0] = 1.0;
    nu = 1.0;
  }
  for (double& x : u) x /= nu;
  const std::vector<double> start = u;

  std::vector<double> v(n);
  for (int it = 0; it < options.iters; ++it) {
    apply(u, v);
    if (options.project_constant) remove_mean(v);
    const double nv = norm2(v);
    if (nv == 0.0 || !std::isfinite(nv)) {
      res.vector = start;
      res.zero_operator = true;
      res.iterations = it + 1;
      return res;
    }
    for (double& x : v) x /= nv;
    // Compare up to sign: negative eigenvalues flip the iterate every step.
    double diff_same = 0.0, diff_flip = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diff_same += (v[i] - u[i]) * (v[i] - u[i]);
      diff_flip += (v[i] + u[i]) * (v[i] + u[i]);
    }
    std::swap(u, v);
    res.iterations = it + 1;
    if (options.tol > 0.0 && std::sqrt(std::min(diff_same, diff_flip)) < options.tol) break;
  }
  fix_sign(u);
  apply(u, v);
  res.eigenvalue = dot(u, v);
  res.vector = std::move(u);
  return res;
}

// ---------------------------------------------------------------------------
// FSWT

std::optional<CutResult> fswt_cut(const Region& r, std::size_t q, const FswtParams& params) {
  const std::size_t n = r.size();
  if (n < 2) throw DimensionError("fswt_cut: vertex set needs at least 2 vertices");
  const Graph& sg = r.sub.graph;

  auto fallback = [&]() -> std::optional<CutResult> {
    CutResult rc = ratio_cut(r);
    if (rc.cut_edges.size() > q) return std::nullopt;
    return rc;
  };
  if (sg.num_edges() == 0) return fallback();

  double mean = 0.0, wnorm2 = 0.0;
  for (double v : r.w) {
    mean += v;
    wnorm2 += v * v;
  }
  mean /= static_cast<double>(n);
  // Cw = n'(w - mean), since C annihilates constants.
  std::vector<double> cw(n);
  for (std::size_t i = 0; i < n; ++i) cw[i] = static_cast<double>(n) * (r.w[i] - mean);

  const ChebyshevPlan plan = make_plan(params.cheb_p, sg.laplacian_bound());
  const std::vector<double> gvec = cheb_apply(sg, plan, cw);
  const double gnorm2 = dot(gvec, gvec);
  if (2.0 * gnorm2 <= 1e-12 * wnorm2) return fallback();

  // M v = -2 g (g^T v)
  const LinearOperator apply_m = [&](std::span<const double> v, std::span<double> out) {
    const double s = -2.0 * dot(gvec, v);
    for (std::size_t i = 0; i < n; ++i) out[i] = s * gvec[i];
  };
  const PowerResult pr = power_method(apply_m, n, {params.power_iters, params.seed, true, 0.0});
  if (pr.zero_operator) return fallback();

  const std::vector<double> x = cheb_apply(sg, plan, pr.vector);
  return sweep(x, r, q);
}

std::optional<CutResult> fswt_cut(const Graph& g, std::span<const double> w, const VertexSet& s, std::size_t q,
                                  const FswtParams& params) {
  if (s.size() < 2) throw DimensionError("fswt_cut: vertex set needs at least 2 vertices");
  return fswt_cut(make_region(g, w, s), q, params);
}

Eigen::MatrixXd fswt_operator_columnwise(const Region& r, const ChebyshevPlan& plan) {
  const auto n = static_cast<Eigen::Index>(r.size());
  const Graph& sg = r.sub.graph;
  Eigen::MatrixXd S(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = r.w[static_cast<std::size_t>(i)] - r.w[static_cast<std::size_t>(j)];
      S(i, j) = d * d;
    }
  }
  const Eigen::MatrixXd C = static_cast<double>(n) * Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Ones(n, n);
  const Eigen::MatrixXd csc = C * S * C;

  // Left factor: columns of (L^+)^{1/2} CSC.
  Eigen::MatrixXd half(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::VectorXd col = csc.col(j);
    const auto out = cheb_apply(sg, plan, std::span<const double>(col.data(), static_cast<std::size_t>(n)));
    half.col(j) = Eigen::Map<const Eigen::VectorXd>(out.data(), n);
  }
  // Right factor applied to rows, i.e. to columns of the transpose.
  Eigen::MatrixXd M(n, n);
  const Eigen::MatrixXd half_t = half.transpose();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::VectorXd col = half_t.col(j);
    const auto out = cheb_apply(sg, plan, std::span<const double>(col.data(), static_cast<std::size_t>(n)));
    M.row(j) = Eigen::Map<const Eigen::RowVectorXd>(out.data(), n);
  }
  return M;
}

}  // namespace cutwave
