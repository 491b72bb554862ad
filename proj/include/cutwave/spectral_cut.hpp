#pragma once

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "cutwave/cut.hpp"
#include "cutwave/graph.hpp"

namespace cutwave {

// Dense operators over an induced subgraph, in local indexing.
struct DenseOperatorBundle {
  Eigen::MatrixXd C;  // complete-graph Laplacian n'I - 11^T
  Eigen::MatrixXd L;  // induced-subgraph Laplacian
  Eigen::MatrixXd S;  // S_uv = (W(u) - W(v))^2
  Eigen::VectorXd w;  // local signal
};

DenseOperatorBundle build_bundle(const Region& r);
DenseOperatorBundle build_bundle(const Graph& g, std::span<const double> w, const VertexSet& s);

// Pseudoinverse square root of a symmetric PSD matrix. Eigenvalues at or below
// 1e-9 * (largest eigenvalue) are treated as zero.
Eigen::MatrixXd pinv_sqrt(const Eigen::MatrixXd& A);

// M = P (C S C) P with P = ((C + beta L)^+)^{1/2}. Symmetric negative semidefinite.
Eigen::MatrixXd build_M(const DenseOperatorBundle& b, double beta);

// Unit eigenvector of the smallest eigenvalue, first nonzero entry positive.
// A zero matrix yields e_0.
Eigen::VectorXd min_eigenvector_dense(const Eigen::MatrixXd& M);

// x = ((C + beta L)^+)^{1/2} y.
Eigen::VectorXd recover_x(const DenseOperatorBundle& b, double beta, const Eigen::VectorXd& y);

struct SwtParams {
  double beta_max = 1000.0;
  int search_iters = 10;  // interior golden-section probes; both endpoints are always probed
};

// One probe of the regularized relaxation at a fixed beta.
std::optional<CutResult> swt_probe(const Region& r, const DenseOperatorBundle& b, const Eigen::MatrixXd& csc,
                                   double beta, std::size_t q);

// Golden-section search over beta in [0, beta_max]; returns the best feasible cut seen.
std::optional<CutResult> swt_cut(const Region& r, std::size_t q, const SwtParams& params = {});
std::optional<CutResult> swt_cut(const Graph& g, std::span<const double> w, const VertexSet& s, std::size_t q,
                                 const SwtParams& params = {});

}  // namespace cutwave
