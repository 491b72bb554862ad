#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cutwave/cut.hpp"
#include "cutwave/graph.hpp"

namespace cutwave {

// Truncated Chebyshev expansion of g(lambda) = 1/sqrt(lambda) on [lo, hi].
struct ChebyshevPlan {
  std::size_t p = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> coefficients;  // c_0 .. c_{p-1}; the series uses c_0 / 2

  // Scalar evaluation of the truncated series.
  double eval(double lambda) const;
};

// Interpolates 1/sqrt on [1e-3 * lambda_max, lambda_max] at p Chebyshev nodes.
ChebyshevPlan make_plan(std::size_t p, double lambda_max);
ChebyshevPlan make_plan(std::size_t p, double lo, double hi);

// Approximates (L^+)^{1/2} f: f is projected off the Laplacian null space (per-component
// means) and the plan is applied with Laplacian products only, O(p m).
std::vector<double> cheb_apply(const Graph& g, const ChebyshevPlan& plan, std::span<const double> f);

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct PowerOptions {
  int iters = 10;
  std::uint64_t seed = 1;
  bool project_constant = true;  // re-orthogonalize against the all-ones vector each step
  double tol = 0.0;              // stop early once successive iterates differ by less (0 = never)
};

struct PowerResult {
  std::vector<double> vector;  // unit norm, first nonzero entry positive
  double eigenvalue = 0.0;     // Rayleigh quotient of the returned vector
  bool zero_operator = false;  // the operator annihilated the iterate
  int iterations = 0;
};

// Dominant-magnitude eigenvector of a symmetric operator from a seeded start vector.
PowerResult power_method(const LinearOperator& apply, std::size_t n, const PowerOptions& options = {});

// Deterministic pseudo-random unit start vector (uniform entries in [-1, 1]).
std::vector<double> seeded_start_vector(std::size_t n, std::uint64_t seed);

struct FswtParams {
  std::size_t cheb_p = 20;
  int power_iters = 10;
  std::uint64_t seed = 1;
};

// Beta-free cut: M = (L^+)^{1/2} CSC (L^+)^{1/2} applied through the rank-one identity
// CSC = -2 (Cw)(Cw)^T, power iteration for y, x = (L^+)^{1/2} y, then a sweep.
std::optional<CutResult> fswt_cut(const Region& r, std::size_t q, const FswtParams& params = {});
std::optional<CutResult> fswt_cut(const Graph& g, std::span<const double> w, const VertexSet& s, std::size_t q,
                                  const FswtParams& params = {});

// Debug path: the explicit n' x n' matrix M built column by column with Chebyshev
// products on CSC, without the rank-one shortcut.
Eigen::MatrixXd fswt_operator_columnwise(const Region& r, const ChebyshevPlan& plan);

}  // namespace cutwave
