#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cutwave/cut.hpp"
#include "cutwave/graph.hpp"

namespace cutwave {

struct SynthConfig {
  std::size_t n = 500;
  std::size_t m = 1500;
  double h = 0.5;                // probability that a drawn edge crosses the planted cut
  double alpha = 100.0;          // planted cut energy
  std::optional<double> sigma;   // noise std; defaults to |mu| = sqrt(alpha / n)
  std::uint64_t seed = 1;

  double mu() const;
  double noise() const { return sigma.value_or(mu()); }
  // Throws ValidationError on an invalid configuration.
  void validate() const;
};

struct SynthInstance {
  Graph graph;
  Signal signal;
  CutResult planted;  // ({0..n/2-1}, {n/2..n-1}) with realized cut edges and energy
};

// Planted bipartition: side values +mu and -mu plus Gaussian noise, edges drawn with
// cross probability h. Uses std::mt19937_64 seeded with cfg.seed.
SynthInstance generate(const SynthConfig& cfg);

// "planted_cut_size <k> planted_energy <e>"
std::string format_planted(const CutResult& planted);

// Grid graph carrying a two-level piecewise-constant signal: the grid is split into
// a left third and the rest, and each part again into a top third and the rest;
// the four pieces are constant.
struct GridConfig {
  std::size_t rows = 20;
  std::size_t cols = 25;
  double alpha = 100.0;  // sets the level scale mu = sqrt(alpha / n)
  double sigma_ratio = 0.05;
  std::uint64_t seed = 1;
};

struct GridInstance {
  Graph graph;
  Signal signal;
};

GridInstance generate_grid(const GridConfig& cfg);

}  // namespace cutwave
