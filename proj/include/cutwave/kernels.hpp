#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cutwave/graph.hpp"

namespace cutwave {

// y = L x with L = D - A, computed row-parallel over the CSR adjacency.
void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> y);
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x);

// Single-threaded reference for laplacian_apply; rows are evaluated identically,
// so both produce bit-identical output.
void laplacian_apply_serial(const Graph& g, std::span<const double> x, std::span<double> y);

// Dense n x n Laplacian. Intended for reference paths and small graphs.
Eigen::MatrixXd dense_laplacian(const Graph& g);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

// Removes the mean of every connected component, i.e. projects x off the
// Laplacian null space.
void project_off_components(std::span<const Vertex> labels, std::size_t num_components,
                            std::span<double> x);

}  // namespace cutwave
