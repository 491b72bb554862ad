#include "cutwave/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "cutwave/baselines.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/io.hpp"
#include "cutwave/wavelet.hpp"

namespace cutwave {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::size_t coefficient_slots(double target, std::size_t n, std::size_t edge_bits, bool* affordable) {
  const double bits = std::floor(target * 64.0 * static_cast<double>(n) + 1e-9);
  *affordable = bits >= static_cast<double>(edge_bits);
  if (!*affordable) return 0;
  return std::min(n, static_cast<std::size_t>((bits - static_cast<double>(edge_bits)) / 64.0));
}

void bench_gft(const Graph& g, std::span<const double> w, const BenchConfig& cfg, std::vector<BenchRecord>& out) {
  const auto start = Clock::now();
  const FourierBasis basis(g);
  const double setup = seconds_since(start);
  const std::size_t n = g.num_vertices();
  for (double f : cfg.grid) {
    const auto t0 = Clock::now();
    const std::size_t keep = std::min(n, static_cast<std::size_t>(std::floor(f * static_cast<double>(n) + 1e-9)));
    const GftCompression c = gft_compress(basis, w, keep);
    out.push_back({"gft", f, c.size_fraction, c.l2_error, setup + seconds_since(t0), std::nullopt});
  }
}

struct CandidateTree {
  WaveletTree tree;
  std::size_t edge_bits = 0;
  double build_seconds = 0.0;
};

void bench_trees(const std::string& method, const Graph& g, std::span<const double> w,
                 const std::vector<CandidateTree>& trees, const BenchConfig& cfg, std::vector<BenchRecord>& out) {
  const std::size_t n = g.num_vertices();
  for (double f : cfg.grid) {
    BenchRecord best{method, f, 0.0, std::numeric_limits<double>::infinity(), 0.0, std::nullopt};
    for (const auto& ct : trees) {
      bool affordable = false;
      const std::size_t keep = coefficient_slots(f, n, ct.edge_bits, &affordable);
      if (!affordable) continue;
      const auto t0 = Clock::now();
      const CompressResult cr = compress(g, ct.tree, w, keep);
      const Signal rec = expand(ct.tree, cr.compressed);
      const double err = l2_distance(w, rec);
      const double secs = ct.build_seconds + seconds_since(t0);
      const double frac = cr.compressed.size_fraction();
      if (err < best.l2_error) {
        best.l2_error = err;
        best.size_fraction = frac;
        best.seconds = secs;
      }
    }
    if (!std::isfinite(best.l2_error)) best.failure = "no affordable representation";
    out.push_back(std::move(best));
  }
}

void bench_gwt(const Graph& g, std::span<const double> w, const BenchConfig& cfg, std::vector<BenchRecord>& out) {
  const auto start = Clock::now();
  std::vector<CandidateTree> trees{{gwt_tree(g), 0, 0.0}};
  trees.front().build_seconds = seconds_since(start);
  bench_trees("gwt", g, w, trees, cfg, out);
}

void bench_adapted(const std::string& method, CutAlgorithm algo, const Graph& g, std::span<const double> w,
                   const BenchConfig& cfg, std::vector<BenchRecord>& out) {
  const std::size_t n = g.num_vertices();
  const std::size_t bpe = bits_per_edge(g.num_edges());
  double max_target = 0.0;
  for (double f : cfg.grid) max_target = std::max(max_target, f);
  const double max_bits = std::floor(max_target * 64.0 * static_cast<double>(n) + 1e-9);

  std::vector<CandidateTree> trees;
  std::vector<std::size_t> seen_costs;
  for (std::size_t q = 0;; q = q == 0 ? 1 : 2 * q) {
    if (static_cast<double>(q * bpe) > max_bits) break;
    BasisConfig bc;
    bc.q = q;
    bc.algo = algo;
    bc.swt = cfg.swt;
    bc.fswt = cfg.fswt;
    bc.parallel = cfg.parallel;
    const auto start = Clock::now();
    WaveletTree t = build_basis(g, w, bc);
    const double secs = seconds_since(start);
    const std::size_t cost = adapted_cut_cost(g, t);
    if (std::find(seen_costs.begin(), seen_costs.end(), cost) != seen_costs.end() && q > 0) continue;
    seen_costs.push_back(cost);
    trees.push_back({std::move(t), cost * bpe, secs});
    if (q >= g.num_edges()) break;
  }
  bench_trees(method, g, w, trees, cfg, out);
}

}  // namespace

std::vector<BenchRecord> run_bench(const Graph& g, std::span<const double> w, const BenchConfig& cfg) {
  check_signal(g, w);
  for (const auto& m : cfg.methods) {
    if (m != "fswt" && m != "swt" && m != "gwt" && m != "gft") {
      throw ValidationError("bench: unknown method '" + m + "' (expected fswt, swt, gwt or gft)");
    }
  }
  for (double f : cfg.grid) {
    if (!(f > 0.0) || !std::isfinite(f)) throw ValidationError("bench: size fractions must be positive");
  }
  std::vector<BenchRecord> out;
  for (const auto& m : cfg.methods) {
    const std::size_t before = out.size();
    try {
      if (m == "gft") {
        bench_gft(g, w, cfg, out);
      } else if (m == "gwt") {
        bench_gwt(g, w, cfg, out);
      } else {
        bench_adapted(m, m == "swt" ? CutAlgorithm::swt : CutAlgorithm::fswt, g, w, cfg, out);
      }
    } catch (const std::exception& e) {
      out.resize(before);
      for (double f : cfg.grid) out.push_back({m, f, 0.0, 0.0, 0.0, std::string(e.what())});
    }
  }
  return out;
}

std::string format_bench(std::span<const BenchRecord> records, bool timing) {
  std::ostringstream os;
  os << "method\tsize_fraction\tl2_error\tseconds\n";
  for (const auto& r : records) {
    if (r.failure) {
      os << "# " << r.method << " at " << fmt12(r.target) << ": " << *r.failure << '\n';
      continue;
    }
    os << r.method << '\t' << fmt12(r.size_fraction) << '\t' << fmt12(r.l2_error) << '\t'
       << fmt12(timing ? r.seconds : 0.0) << '\n';
  }
  return os.str();
}

}  // namespace cutwave
