// Acceptance suite: one PASS/FAIL line per criterion, with the measured numbers.
//
//   acceptance [--expect-fail N,...]
//
// Criteria listed with --expect-fail still run and still print FAIL; they only stop
// counting toward the exit status. An expected failure that passes is reported too.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "cutwave/bench.hpp"
#include "cutwave/fast_cut.hpp"
#include "cutwave/spectral_cut.hpp"
#include "cutwave/synth.hpp"
#include "cutwave/wavelet.hpp"
#include "test_support.hpp"

using namespace cutwave;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. Seven-vertex worked example.
Outcome fig_one() {
  const std::vector<double> w{-4, -6, -9, -9, 9, 9, 10};  // d e f g a b c
  WaveletTree t(7);
  const auto [l, r] = t.split(0, VertexSet({0, 1, 2, 3}), VertexSet({4, 5, 6}), SplitKind::adapted);
  const auto [de, fg] = t.split(l, VertexSet({0, 1}), VertexSet({2, 3}), SplitKind::adapted);
  t.split(de, VertexSet({0}), VertexSet({1}), SplitKind::structural);
  t.split(fg, VertexSet({2}), VertexSet({3}), SplitKind::structural);
  const auto [ab, c] = t.split(r, VertexSet({4, 5}), VertexSet({6}), SplitKind::structural);
  t.split(ab, VertexSet({4}), VertexSet({5}), SplitKind::structural);
  (void)c;
  t = t.canonicalized();

  const Transform tr = transform(t, w);
  NodeId left_node = 0;
  for (const auto& nd : t.nodes())
    if (nd.members == VertexSet({0, 1, 2, 3})) left_node = nd.id;
  const double a = tr.diffs.at(left_node);
  const Signal back = inverse(t, tr);
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  const CompressResult cr = compress(g, t, w, 2);
  const double rel = cr.dropped_energy / cr.signal_energy;
  const bool ok = std::abs(tr.average) <= 1e-12 && std::abs(a - 4.0) <= 1e-12 && back[1] == -6.0 &&
                  cr.compressed.kept.size() == 2 && rel <= 0.02;
  return {ok, "a00=" + fmt("%.3g", tr.average) + " a=" + fmt("%.6g", a) + " W'(e)=" + fmt("%.17g", back[1]) +
                  " top-2 relative error=" + fmt("%.4f", 100 * rel) + "%"};
}

// 2. Parseval and inverse identity.
Outcome parseval() {
  std::mt19937_64 gen(2);
  double worst_parseval = 0.0, worst_inverse = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + gen() % 200;
    const WaveletTree t = testing::random_tree(gen, n).canonicalized();
    std::vector<double> w = testing::random_signal(gen, n, 3.0);
    for (auto& x : w) x += 1.5;
    const Transform tr = transform(t, w);
    double lhs = average_energy(tr.average, n), rhs = 0.0, wn = 0.0;
    for (double e : node_energies(t, tr)) lhs += e;
    for (double x : w) rhs += x * x;
    worst_parseval = std::max(worst_parseval, testing::rel_diff(lhs, rhs));
    const Signal back = inverse(t, tr);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diff += (back[i] - w[i]) * (back[i] - w[i]);
      wn += w[i] * w[i];
    }
    worst_inverse = std::max(worst_inverse, std::sqrt(diff / wn));
  }
  return {worst_parseval <= 1e-9 && worst_inverse <= 1e-9,
          "max Parseval rel=" + fmt("%.2e", worst_parseval) + " max inverse rel=" + fmt("%.2e", worst_inverse)};
}

// 3. Objective identity over all bipartitions and the rank-one CSC.
Outcome objective_identity() {
  std::mt19937_64 gen(3);
  double worst_ratio = 0.0, worst_rank1 = 0.0;
  bool sign_negative = true;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + gen() % 9;
    const Graph g = testing::random_graph(gen, n, 0.4);
    const auto w = testing::random_signal(gen, n);
    const auto b = build_bundle(g, w, VertexSet::range(static_cast<Vertex>(n)));
    const Eigen::MatrixXd csc = b.C * b.S * b.C;
    const Eigen::VectorXd cw = b.C * b.w;
    worst_rank1 = std::max(worst_rank1, (csc + 2.0 * cw * cw.transpose()).norm() / std::max(csc.norm(), 1e-300));
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      Eigen::VectorXd x(static_cast<Eigen::Index>(n));
      std::vector<Vertex> a, bb;
      for (std::size_t v = 0; v < n; ++v) {
        const bool s = (mask >> v) & 1;
        x(static_cast<Eigen::Index>(v)) = s ? 1.0 : -1.0;
        (s ? a : bb).push_back(static_cast<Vertex>(v));
      }
      const double num = x.dot(csc * x);
      const double ratio = num / x.dot(b.C * x);
      const double energy = testing::oracle_energy(w, a, bb);
      if (num > 1e-9 * std::max(1.0, std::abs(num))) sign_negative = false;
      const double expect = 2.0 * static_cast<double>(n) * energy;
      worst_ratio = std::max(worst_ratio, std::abs(std::abs(ratio) - expect));
    }
  }
  return {worst_ratio <= 1e-9 && worst_rank1 <= 1e-9 && sign_negative,
          "max identity abs=" + fmt("%.2e", worst_ratio) + " rank-1 rel=" + fmt("%.2e", worst_rank1) +
              " sign=" + (sign_negative ? "negative" : "mixed")};
}

// 4. Near-optimality against exhaustive search.
Outcome optimality() {
  int swt_ok = 0, fswt_ok = 0;
  double swt_min = 1e300, fswt_min = 1e300;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SynthConfig cfg;
    cfg.n = 12;
    cfg.m = 36;
    cfg.h = 0.5;
    cfg.sigma = 0.0;
    cfg.seed = seed;
    const auto inst = generate(cfg);
    const std::size_t q = inst.planted.cut_edges.size();
    const auto best = testing::oracle_best_cut(inst.graph, inst.signal, q);
    const VertexSet all = VertexSet::range(12);
    const auto s = swt_cut(inst.graph, inst.signal, all, q);
    const auto f = fswt_cut(inst.graph, inst.signal, all, q);
    const double rs = s ? s->energy / best.energy : 0.0;
    const double rf = f ? f->energy / best.energy : 0.0;
    swt_ok += rs >= 0.95;
    fswt_ok += rf >= 0.95;
    swt_min = std::min(swt_min, rs);
    fswt_min = std::min(fswt_min, rf);
  }
  return {swt_ok >= 18 && fswt_ok >= 18, "swt " + std::to_string(swt_ok) + "/20 (worst " + fmt("%.3f", swt_min) +
                                             "), fswt " + std::to_string(fswt_ok) + "/20 (worst " +
                                             fmt("%.3f", fswt_min) + ")"};
}

// 5. Planted-cut recovery at the generator defaults.
Outcome planted_recovery() {
  SynthConfig clean;
  clean.sigma = 0.0;
  const auto c = generate(clean);
  const auto exact = fswt_cut(c.graph, c.signal, VertexSet::range(500), c.planted.cut_edges.size());
  const bool exact_ok = exact && exact->left == c.planted.left;
  std::size_t mismatched = 500;
  if (exact) {
    mismatched = 0;
    for (Vertex v = 0; v < 500; ++v) mismatched += exact->left.contains(v) != c.planted.left.contains(v);
  }

  int within = 0;
  std::string energies;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SynthConfig cfg;
    cfg.seed = seed;
    const auto inst = generate(cfg);
    const auto r = fswt_cut(inst.graph, inst.signal, VertexSet::range(500), inst.planted.cut_edges.size());
    const double e = r ? r->energy : 0.0;
    within += std::abs(e - cfg.alpha) <= 0.1 * cfg.alpha;
    energies += (energies.empty() ? "" : ",") + fmt("%.1f", e);
  }
  return {exact_ok && within >= 8, std::string("sigma=0 exact=") + (exact_ok ? "yes" : "no") +
                                       " (mismatched " + std::to_string(mismatched) + "/500, energy " +
                                       fmt("%.2f", exact ? exact->energy : 0.0) + "); sigma=|mu| within 10%: " +
                                       std::to_string(within) + "/10 energies [" + energies + "]"};
}

// 6. FSWT versus dense SWT wall-clock.
Outcome speedup() {
  SynthConfig cfg;
  const auto inst = generate(cfg);
  const std::size_t q = inst.planted.cut_edges.size();
  const Region r = make_region(inst.graph, inst.signal, VertexSet::range(500));
  auto time = [](const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  double fast = 1e300;
  for (int i = 0; i < 3; ++i) fast = std::min(fast, time([&] { (void)fswt_cut(r, q); }));
  const double dense = time([&] { (void)swt_cut(r, q, SwtParams{1000.0, 10}); });
  return {fast <= dense / 5.0, "fswt " + fmt("%.4f", fast) + " s, swt " + fmt("%.3f", dense) + " s, ratio " +
                                   fmt("%.0f", dense / fast) + "x"};
}

// 7. Compression dominance on a two-level piecewise-constant grid signal.
Outcome dominance() {
  const auto inst = generate_grid(GridConfig{});
  BenchConfig cfg;
  cfg.methods = {"fswt", "gwt", "gft"};
  cfg.grid = {0.02, 0.05, 0.1, 0.2};
  const auto rs = run_bench(inst.graph, inst.signal, cfg);
  int wins = 0;
  std::string detail;
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    const auto& f = rs[i];
    const auto& gw = rs[cfg.grid.size() + i];
    const auto& gf = rs[2 * cfg.grid.size() + i];
    const bool win = !f.failure && f.l2_error < gw.l2_error && f.l2_error < gf.l2_error;
    wins += win;
    detail += " " + fmt("%.2f", f.target) + ":" + fmt("%.3g", f.l2_error) + "/" + fmt("%.3g", gw.l2_error) + "/" +
              fmt("%.3g", gf.l2_error);
  }
  return {2 * wins >= static_cast<int>(cfg.grid.size()),
          "fswt wins " + std::to_string(wins) + "/4 (fswt/gwt/gft:" + detail + ")"};
}

// 8. Chebyshev convergence.
Outcome chebyshev() {
  std::mt19937_64 gen(8);
  bool monotone = true;
  double worst50 = 0.0;
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 5 + gen() % 46;
    const Graph g = testing::random_connected_graph(gen, n, n + gen() % n);
    const auto f = testing::random_signal(gen, n);
    const Eigen::VectorXd fv = Eigen::Map<const Eigen::VectorXd>(f.data(), static_cast<Eigen::Index>(n));
    const Eigen::VectorXd expect = testing::oracle_pinv_sqrt_laplacian(g) * fv;
    double prev = 1e300;
    for (std::size_t p : {5u, 20u, 50u}) {
      const auto y = cheb_apply(g, make_plan(p, g.laplacian_bound()), f);
      const double err =
          (Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n)) - expect).norm() / fv.norm();
      if (err > prev) monotone = false;
      prev = err;
    }
    worst50 = std::max(worst50, prev);
  }
  return {monotone && worst50 <= 1e-2,
          std::string("monotone=") + (monotone ? "yes" : "no") + " worst p=50 error=" + fmt("%.4f", worst50)};
}

// 9. Every CLI command twice.
Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / ("cutwave_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };
  auto read = [&](const std::string& name) {
    std::ifstream in(p(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto run = [&](const std::string& args) {
    const std::string cmd = std::string(CUTWAVE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  const std::string io = " --graph " + p("s1.graph") + " --signal " + p("s1.signal");
  // Each command writes to <tag>1 and <tag>2; the outputs are compared pairwise.
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"synth --n 80 --m 240 --h 0.2 --seed 9 --out " + p("s@"), {"s@.graph", "s@.signal", "s@.planted"}},
      {"compress" + io + " --q 8 --keep 20 --out " + p("c@.txt") + " --tree-out " + p("t@.txt"), {"c@.txt", "t@.txt"}},
      {"compress" + io + " --q 8 --keep 20 --algo swt --out " + p("cs@.txt"), {"cs@.txt"}},
      {"decompress --compressed " + p("c1.txt") + " --graph " + p("s1.graph") + " --out " + p("d@.txt"), {"d@.txt"}},
      {"transform" + io + " --q 8 --out " + p("x@.tsv"), {"x@.tsv"}},
      {"bench" + io + " --no-timing --grid 0.05,0.2 --out " + p("b@.tsv"), {"b@.tsv"}},
      {"layout --graph " + p("s1.graph") + " --out " + p("l@.tsv"), {"l@.tsv"}},
      {"layout" + io + " --mode wavelet --out " + p("w@.tsv"), {"w@.tsv"}},
  };
  auto subst = [](std::string s, char k) {
    for (std::size_t i; (i = s.find('@')) != std::string::npos;) s[i] = k;
    return s;
  };
  int identical = 0, total = 0;
  std::string bad;
  for (const auto& [cmd, files] : commands) {
    const bool ok1 = run(subst(cmd, '1'));
    const bool ok2 = run(subst(cmd, '2'));
    for (const auto& f : files) {
      ++total;
      const std::string a = read(subst(f, '1')), b = read(subst(f, '2'));
      if (ok1 && ok2 && !a.empty() && a == b) {
        ++identical;
      } else {
        bad += " " + subst(f, '1');
      }
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return {identical == total,
          std::to_string(identical) + "/" + std::to_string(total) + " output files identical" +
              (bad.empty() ? "" : "; differing:" + bad)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string item; std::getline(ss, item, ',');) expect_fail.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail N,...]\n");
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "worked example", 1, fig_one},       {2, "Parseval suite", 10, parseval},
      {3, "objective identity", 10, objective_identity}, {4, "desk-scale optimality", 30, optimality},
      {5, "planted-cut recovery", 60, planted_recovery}, {6, "speedup direction", 120, speedup},
      {7, "compression dominance", 60, dominance},       {8, "Chebyshev convergence", 10, chebyshev},
      {9, "CLI determinism", 30, determinism},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    std::string note;
    if (!in_time) note = " (over the " + fmt("%.0f", c.limit_seconds) + " s limit)";
    const bool expected = expect_fail.count(c.id) > 0;
    if (expected) note += pass ? " [listed as expected failure, but passed]" : " [expected failure]";
    std::printf("criterion %d %s: %s  %s  [%.2f s]%s\n", c.id, c.name, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                note.c_str());
    std::fflush(stdout);
    if (!pass && !expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
