#include "cutwave/synth.hpp"

#include <cmath>
#include <random>
#include <set>

#include "cutwave/errors.hpp"
#include "cutwave/io.hpp"

namespace cutwave {

double SynthConfig::mu() const { return std::sqrt(alpha / static_cast<double>(n)); }

void SynthConfig::validate() const {
  if (n < 2 || n % 2 != 0) throw ValidationError("synth: n must be even and >= 2");
  if (m > n * (n - 1) / 2) throw ValidationError("synth: m exceeds n(n-1)/2");
  if (!(h >= 0.0 && h <= 1.0)) throw ValidationError("synth: h must lie in [0, 1]");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ValidationError("synth: alpha must be >= 0");
  if (sigma && (!(*sigma >= 0.0) || !std::isfinite(*sigma))) throw ValidationError("synth: sigma must be >= 0");
}

SynthInstance generate(const SynthConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n;
  const std::size_t half = n / 2;
  std::mt19937_64 gen(cfg.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, half - 1);

  std::set<Edge> edges;
  const std::size_t max_attempts = 100 * cfg.m;
  std::size_t attempts = 0;
  while (edges.size() < cfg.m) {
    if (++attempts > max_attempts) {
      throw ValidationError("synth: edge sampling gave up after " + std::to_string(max_attempts) + " attempts");
    }
    Vertex u = 0, v = 0;
    if (coin(gen) < cfg.h) {
      u = static_cast<Vertex>(pick(gen));
      v = static_cast<Vertex>(half + pick(gen));
    } else {
      const std::size_t offset = coin(gen) < 0.5 ? 0 : half;
      u = static_cast<Vertex>(offset + pick(gen));
      v = static_cast<Vertex>(offset + pick(gen));
    }
    if (u == v) continue;
    edges.emplace(std::min(u, v), std::max(u, v));
  }

  SynthInstance out;
  out.graph = Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  const double mu = cfg.mu();
  const double sigma = cfg.noise();
  out.signal.resize(n);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double base = i < half ? mu : -mu;
    out.signal[i] = sigma > 0.0 ? base + sigma * noise(gen) : base;
  }

  const Region whole = make_region(out.graph, out.signal, VertexSet::range(static_cast<Vertex>(n)));
  std::vector<char> side(n, 0);
  for (std::size_t i = 0; i < half; ++i) side[i] = 1;
  out.planted = make_cut(whole, side);
  return out;
}

std::string format_planted(const CutResult& planted) {
  return "planted_cut_size " + std::to_string(planted.cut_edges.size()) + " planted_energy " +
         fmt12(planted.energy) + "\n";
}

GridInstance generate_grid(const GridConfig& cfg) {
  if (cfg.rows < 2 || cfg.cols < 2) throw ValidationError("grid: need at least 2 rows and 2 columns");
  const std::size_t n = cfg.rows * cfg.cols;
  std::vector<Edge> edges;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cfg.cols + c); };
  for (std::size_t r = 0; r < cfg.rows; ++r) {
    for (std::size_t c = 0; c < cfg.cols; ++c) {
      if (c + 1 < cfg.cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < cfg.rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  GridInstance out{Graph(n, std::move(edges)), Signal(n)};
  const double mu = std::sqrt(cfg.alpha / static_cast<double>(n));
  const double sigma = cfg.sigma_ratio * mu;
  std::mt19937_64 gen(cfg.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t r = 0; r < cfg.rows; ++r) {
    for (std::size_t c = 0; c < cfg.cols; ++c) {
      const double outer = c < cfg.cols / 3 ? mu : -mu;
      const double inner = r < cfg.rows / 3 ? 0.5 * mu : -0.5 * mu;
      out.signal[id(r, c)] = outer + inner + (sigma > 0.0 ? sigma * noise(gen) : 0.0);
    }
  }
  return out;
}

}  // namespace cutwave
