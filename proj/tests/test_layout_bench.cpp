#include "doctest.h"

#include <map>

#include "cutwave/bench.hpp"
#include "cutwave/layout.hpp"
#include "cutwave/synth.hpp"
#include "test_support.hpp"

using namespace cutwave;

namespace {

SynthInstance two_community(std::size_t n, double h, double sigma) {
  SynthConfig cfg;
  cfg.n = n;
  cfg.m = 3 * n;
  cfg.h = h;
  cfg.sigma = sigma;
  return generate(cfg);
}

std::map<std::string, std::vector<BenchRecord>> by_method(const std::vector<BenchRecord>& rs) {
  std::map<std::string, std::vector<BenchRecord>> out;
  for (const auto& r : rs) out[r.method].push_back(r);
  return out;
}

}  // namespace

TEST_CASE("laplacian layout: path of 3 is monotone along the path") {
  const Layout l = laplacian_layout(testing::path_graph(3));
  REQUIRE(l.x.size() == 3);
  const bool up = l.x[0] < l.x[1] && l.x[1] < l.x[2];
  const bool down = l.x[0] > l.x[1] && l.x[1] > l.x[2];
  CHECK((up || down));
  CHECK(std::abs(l.x[1]) <= 1e-9);
  CHECK(std::abs(l.x[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("wavelet layout: constant signal is flagged degenerate") {
  const Graph g = testing::two_triangles();
  const Layout l = wavelet_layout(g, std::vector<double>(6, 3.0));
  CHECK(l.degenerate);
  const std::string text = format_layout(l);
  CHECK(text.find("# degenerate") != std::string::npos);
}

TEST_CASE("wavelet layout: first axis separates the planted sides") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    SynthConfig cfg;
    cfg.n = 60;
    cfg.m = 180;
    cfg.h = 0.1;
    cfg.sigma = 0.0;
    cfg.seed = seed;
    const auto inst = generate(cfg);
    const Layout l = wavelet_layout(inst.graph, inst.signal);
    CHECK_FALSE(l.degenerate);
    const bool first_positive = l.x[0] > 0;
    for (Vertex v = 0; v < 60; ++v) CHECK(((l.x[v] > 0) == first_positive) == (v < 30));
  }
}

TEST_CASE("format_layout") {
  Layout l;
  l.x = {0.5, -1};
  l.y = {0, 2};
  l.notes = {"mode laplacian"};
  CHECK(format_layout(l) == "# mode laplacian\nid\tx\ty\n0\t0.5\t0\n1\t-1\t2\n");
}

TEST_CASE("bench: error is non-increasing along the grid and sizes respect targets") {
  const auto inst = two_community(120, 0.1, 0.05);
  BenchConfig cfg;
  cfg.grid = {0.02, 0.05, 0.1, 0.2, 0.5};
  const auto rs = run_bench(inst.graph, inst.signal, cfg);
  CHECK(rs.size() == 4 * cfg.grid.size());
  for (const auto& [method, rows] : by_method(rs)) {
    double prev = 1e300;
    for (const auto& r : rows) {
      if (r.failure) continue;
      CHECK(r.size_fraction <= r.target + 1e-12);
      CHECK(r.l2_error >= 0.0);
      CHECK(r.l2_error <= prev + 1e-9);
      prev = r.l2_error;
    }
  }
}

TEST_CASE("bench: noise-free planted signal, fswt is exact far below gft") {
  const auto inst = two_community(200, 0.05, 0.0);
  BenchConfig cfg;
  cfg.methods = {"fswt", "gwt", "gft"};
  cfg.grid = {0.02, 0.05, 0.1};
  const auto methods = by_method(run_bench(inst.graph, inst.signal, cfg));
  const auto& fswt = methods.at("fswt");
  const auto& gwt = methods.at("gwt");
  const auto& gft = methods.at("gft");
  REQUIRE_FALSE(fswt[0].failure);
  CHECK(fswt[0].l2_error < 1e-6);
  CHECK(gft[0].l2_error > 1e3 * std::max(fswt[0].l2_error, 1e-9));
  for (std::size_t i = 0; i < fswt.size(); ++i) {
    CHECK(fswt[i].l2_error <= gwt[i].l2_error + 1e-9);
    CHECK(fswt[i].l2_error <= gft[i].l2_error + 1e-9);
  }
}

TEST_CASE("bench: gft is competitive on a two-community signal at tiny fractions") {
  const auto inst = two_community(200, 0.02, 0.0);
  double total = 0.0;
  for (double v : inst.signal) total += v * v;
  BenchConfig cfg;
  cfg.methods = {"gft"};
  cfg.grid = {0.02};
  const auto rs = run_bench(inst.graph, inst.signal, cfg);
  REQUIRE(rs.size() == 1);
  // Four coefficients out of 200 already hold most of the energy.
  CHECK(rs[0].l2_error < 0.5 * std::sqrt(total));
}

TEST_CASE("format_bench") {
  std::vector<BenchRecord> rs(2);
  rs[0] = {"gft", 0.1, 0.1, 0.25, 1.5, std::nullopt};
  rs[1] = {"swt", 0.02, 0.0, 0.0, 0.0, std::string("no affordable representation")};
  CHECK(format_bench(rs, true) ==
        "method\tsize_fraction\tl2_error\tseconds\n"
        "gft\t0.1\t0.25\t1.5\n"
        "# swt at 0.02: no affordable representation\n");
  CHECK(format_bench(rs, false).find("gft\t0.1\t0.25\t0\n") != std::string::npos);
}
