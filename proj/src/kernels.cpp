#include "cutwave/kernels.hpp"

#include <cmath>

#include "cutwave/errors.hpp"

namespace cutwave {

namespace {

void check_dims(const Graph& g, std::size_t x, std::size_t y) {
  if (x != g.num_vertices() || y != g.num_vertices()) {
    throw DimensionError("laplacian_apply: vector length does not match vertex count");
  }
}

inline double laplacian_row(const Graph& g, std::span<const double> x, Vertex v) {
  double acc = 0.0;
  for (Vertex u : g.neighbors(v)) acc += x[u];
  return static_cast<double>(g.degree(v)) * x[v] - acc;
}

}  // namespace

void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> y) {
  check_dims(g, x.size(), y.size());
  const auto n = static_cast<std::ptrdiff_t>(g.num_vertices());
#pragma omp parallel for schedule(static) if (n > 4096)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    y[v] = laplacian_row(g, x, static_cast<Vertex>(v));
  }
}

std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x) {
  std::vector<double> y(x.size());
  laplacian_apply(g, x, y);
  return y;
}

void laplacian_apply_serial(const Graph& g, std::span<const double> x, std::span<double> y) {
  check_dims(g, x.size(), y.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v) y[v] = laplacian_row(g, x, v);
}

Eigen::MatrixXd dense_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    L(u, v) -= 1.0;
    L(v, u) -= 1.0;
    L(u, u) += 1.0;
    L(v, v) += 1.0;
  }
  return L;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void project_off_components(std::span<const Vertex> labels, std::size_t num_components,
                            std::span<double> x) {
  std::vector<double> sum(num_components, 0.0);
  std::vector<std::size_t> cnt(num_components, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum[labels[i]] += x[i];
    ++cnt[labels[i]];
  }
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= sum[labels[i]] / static_cast<double>(cnt[labels[i]]);
}

}  // namespace cutwave
