#include "doctest.h"

#include "cutwave/baselines.hpp"
#include "cutwave/basis.hpp"
#include "cutwave/errors.hpp"
#include "cutwave/formats.hpp"
#include "cutwave/synth.hpp"
#include "test_support.hpp"

using namespace cutwave;

namespace {

SynthInstance planted_instance(std::size_t n, std::size_t m, double sigma, std::uint64_t seed) {
  SynthConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.h = 0.1;
  cfg.sigma = sigma;
  cfg.seed = seed;
  return generate(cfg);
}

// Minimum of cut / (|A||B|) over all bipartitions, vertex 0 fixed on side A.
double oracle_min_ratio(const Graph& g) {
  const std::size_t n = g.num_vertices();
  double best = 1e300;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<char> side(n, 0);
    side[0] = 1;
    std::size_t a = 1;
    for (Vertex v = 1; v < n; ++v)
      if (mask >> (v - 1) & 1) side[v] = 1, ++a;
    if (a == n) continue;
    best = std::min(best, static_cast<double>(testing::oracle_cut(g, side)) / static_cast<double>(a * (n - a)));
  }
  return best;
}

std::size_t count_kind(const WaveletTree& t, SplitKind kind) {
  std::size_t c = 0;
  for (const auto& nd : t.nodes())
    if (!nd.is_leaf() && nd.kind == kind) ++c;
  return c;
}

}  // namespace

TEST_CASE("ratio_cut examples") {
  const Graph tt = testing::two_triangles();
  const CutResult c = ratio_cut(tt, VertexSet::range(6));
  CHECK(c.left == VertexSet({0, 1, 2}));
  CHECK(c.cut_edges == std::vector<Edge>{{2, 3}});
  CHECK(1.0 / 9.0 == doctest::Approx(oracle_min_ratio(tt)));

  const CutResult e = ratio_cut(testing::path_graph(2), VertexSet({0, 1}));
  CHECK(e.left == VertexSet({0}));
  CHECK(e.right == VertexSet({1}));

  const Graph apart(5, {{0, 3}, {1, 2}, {2, 4}});
  const CutResult d = ratio_cut(apart, VertexSet::range(5));
  CHECK(d.left == VertexSet({0, 3}));
  CHECK(d.cut_edges.empty());

  const std::vector<double> w{1, 2, 3, 4, 5, 6};
  CHECK(ratio_cut(tt, VertexSet::range(6), w).energy ==
        doctest::Approx(testing::oracle_energy(w, {0, 1, 2}, {3, 4, 5})));
  CHECK_THROWS_AS(ratio_cut(tt, VertexSet({4})), DimensionError);
}

TEST_CASE("property: ratio_cut is optimal on small graphs with a clear bottleneck") {
  std::mt19937_64 gen(89);
  for (int trial = 0; trial < 20; ++trial) {
    // Two random dense blocks joined by one edge.
    const std::size_t a = 3 + gen() % 4, b = 3 + gen() % 4, n = a + b;
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if ((i < a) == (j < a) && gen() % 4 != 0) e.emplace_back(i, j);
    for (Vertex i = 0; i + 1 < a; ++i) e.emplace_back(i, i + 1);
    for (Vertex i = static_cast<Vertex>(a); i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, static_cast<Vertex>(n - 1));
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    const Graph g(n, e);
    const CutResult c = ratio_cut(g, VertexSet::range(static_cast<Vertex>(n)));
    const double ratio = static_cast<double>(c.cut_edges.size()) / static_cast<double>(c.left.size() * c.right.size());
    CHECK(ratio == doctest::Approx(oracle_min_ratio(g)));
  }
}

TEST_CASE("fiedler_vector matches the dense eigenvector") {
  std::mt19937_64 gen(97);
  for (std::size_t n : {5u, 40u, 300u}) {
    const Graph g = testing::random_connected_graph(gen, n, 2 * n);
    const auto f = fiedler_vector(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(testing::oracle_laplacian(g));
    const Eigen::VectorXd e = es.eigenvectors().col(1);
    const Eigen::VectorXd got = Eigen::Map<const Eigen::VectorXd>(f.data(), static_cast<Eigen::Index>(n));
    CHECK(got.norm() == doctest::Approx(1.0));
    if (es.eigenvalues()(2) - es.eigenvalues()(1) > 1e-6) CHECK(std::abs(got.dot(e)) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("build_basis: q = 0 equals the GWT baseline tree") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = planted_instance(60, 150, 0.1, seed);
    BasisConfig cfg;
    cfg.q = 0;
    const WaveletTree t = build_basis(inst.graph, inst.signal, cfg);
    CHECK(format_tree(t) == format_tree(gwt_tree(inst.graph)));
    CHECK(count_kind(t, SplitKind::adapted) == 0);
    t.validate(true);
  }
}

TEST_CASE("build_basis: two triangles with q = 1") {
  const Graph g = testing::two_triangles();
  const std::vector<double> w{1, 1, 1, 0, 0, 0};
  for (auto algo : {CutAlgorithm::fswt, CutAlgorithm::swt}) {
    BasisConfig cfg;
    cfg.q = 1;
    cfg.algo = algo;
    const WaveletTree t = build_basis(g, w, cfg);
    const TreeNode& root = t.node(0);
    REQUIRE_FALSE(root.is_leaf());
    CHECK(root.kind == SplitKind::adapted);
    CHECK(t.node(root.children->first).members == VertexSet({0, 1, 2}));
    CHECK(t.node(root.children->second).members == VertexSet({3, 4, 5}));
    CHECK(count_kind(t, SplitKind::adapted) == 1);
    CHECK(adapted_cut_cost(g, t) == 1);
    t.validate(true);
  }
}

TEST_CASE("build_basis: unconstrained budget") {
  const auto inst = planted_instance(30, 70, 0.2, 4);
  BasisConfig cfg;
  cfg.q = inst.graph.num_edges();
  const WaveletTree t = build_basis(inst.graph, inst.signal, cfg);
  t.validate(true);
  CHECK(adapted_cut_cost(inst.graph, t) <= cfg.q);
  const Transform tr = transform(t, inst.signal);
  const auto energies = node_energies(t, tr);
  double adapted = 0.0, structural = 0.0;
  for (const auto& nd : t.nodes()) {
    if (nd.is_leaf()) continue;
    (nd.kind == SplitKind::adapted ? adapted : structural) += energies[nd.id];
  }
  CHECK(adapted > structural);
}

TEST_CASE("property: adapted cut edges never exceed q and leaves are singletons") {
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + gen() % 60;
    const Graph g = testing::random_graph(gen, n, 0.15);
    const auto w = testing::random_signal(gen, n);
    BasisConfig cfg;
    cfg.q = gen() % 12;
    cfg.algo = trial % 3 == 0 ? CutAlgorithm::swt : CutAlgorithm::fswt;
    const WaveletTree t = build_basis(g, w, cfg);
    t.validate(true);
    CHECK(adapted_cut_cost(g, t) <= cfg.q);
    CHECK(t.leaves().size() == n);
    CHECK(format_tree(t) == format_tree(t.canonicalized()));
  }
}

TEST_CASE("property: build_basis is deterministic and parallel equals serial") {
  const auto inst = planted_instance(120, 360, 0.3, 7);
  BasisConfig cfg;
  cfg.q = 40;
  const std::string a = format_tree(build_basis(inst.graph, inst.signal, cfg));
  const std::string b = format_tree(build_basis(inst.graph, inst.signal, cfg));
  cfg.parallel = false;
  const std::string c = format_tree(build_basis(inst.graph, inst.signal, cfg));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("property: a budget never hurts compression of noise-free planted signals") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto inst = planted_instance(80, 240, 0.0, seed);
    BasisConfig adapted;
    adapted.q = inst.planted.cut_edges.size();
    BasisConfig plain;
    plain.q = 0;
    const WaveletTree ta = build_basis(inst.graph, inst.signal, adapted);
    const WaveletTree tp = build_basis(inst.graph, inst.signal, plain);
    for (std::size_t keep : {1u, 2u, 4u, 10u}) {
      const double ea = compress(inst.graph, ta, inst.signal, keep).dropped_energy;
      const double ep = compress(inst.graph, tp, inst.signal, keep).dropped_energy;
      CHECK(ea <= ep * (1.0 + 1e-12) + 1e-12);
    }
  }
}
