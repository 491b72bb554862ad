#include "cutwave/basis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include <Eigen/Eigenvalues>

#include "cutwave/errors.hpp"
#include "cutwave/kernels.hpp"

namespace cutwave {

namespace {

constexpr std::size_t kDenseFiedlerLimit = 128;
constexpr std::size_t kLanczosSteps = 80;
constexpr int kLanczosRestarts = 4;
constexpr double kFiedlerResidualTol = 1e-8;

void fix_sign(std::vector<double>& v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-12 * scale) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

void remove_mean(std::span<double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

// One Lanczos cycle on L restricted to the complement of the constant vector, with full
// reorthogonalization. Returns the Ritz vector of the smallest Ritz value.
std::vector<double> lanczos_cycle(const Graph& g, std::vector<double> start, double* ritz_value) {
  const std::size_t n = g.num_vertices();
  const std::size_t k_max = std::min(kLanczosSteps, n - 1);
  remove_mean(start);
  double nv = norm2(start);
  for (double& x : start) x /= nv;

  std::vector<std::vector<double>> basis{std::move(start)};
  std::vector<double> alpha, beta;
  std::vector<double> w(n);
  const double scale = g.laplacian_bound();
  for (std::size_t j = 0; j < k_max; ++j) {
    laplacian_apply(g, basis[j], w);
    alpha.push_back(dot(basis[j], w));
    // Two passes of Gram-Schmidt against every basis vector and the constant vector.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& qv : basis) {
        const double c = dot(qv, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * qv[i];
      }
      remove_mean(w);
    }
    const double b = norm2(w);
    if (j + 1 == k_max || b <= 1e-12 * scale) break;
    beta.push_back(b);
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = w[i] / b;
    basis.push_back(std::move(next));
  }

  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    T(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success) throw NumericalError("fiedler_vector: tridiagonal eigensolve failed");
  *ritz_value = es.eigenvalues()(0);
  std::vector<double> v(n, 0.0);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double c = es.eigenvectors()(j, 0);
    const auto& qv = basis[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < n; ++i) v[i] += c * qv[i];
  }
  return v;
}

}  // namespace

std::vector<double> fiedler_vector(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw DimensionError("fiedler_vector: need at least 2 vertices");
  std::vector<double> v(n);
  if (n <= kDenseFiedlerLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g));
    if (es.info() != Eigen::Success) throw NumericalError("fiedler_vector: eigendecomposition failed");
    for (std::size_t i = 0; i < n; ++i) v[i] = es.eigenvectors()(static_cast<Eigen::Index>(i), 1);
  } else {
    // Restarted Lanczos from a fixed pseudo-random start.
    std::mt19937_64 gen(0x5eedf1ed);
    for (double& x : v) x = static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
    const double scale = g.laplacian_bound();
    std::vector<double> lv(n);
    for (int cycle = 0; cycle < kLanczosRestarts; ++cycle) {
      double theta = 0.0;
      v = lanczos_cycle(g, std::move(v), &theta);
      laplacian_apply(g, v, lv);
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) res += (lv[i] - theta * v[i]) * (lv[i] - theta * v[i]);
      if (std::sqrt(res) <= kFiedlerResidualTol * scale * norm2(v)) break;
    }
  }
  const double nv = norm2(v);
  for (double& x : v) x /= nv;
  fix_sign(v);
  return v;
}

CutResult ratio_cut(const Region& r) {
  const std::size_t n = r.size();
  if (n < 2) throw DimensionError("ratio_cut: vertex set needs at least 2 vertices");
  const Graph& sg = r.sub.graph;
  std::size_t ncomp = 0;
  const auto labels = sg.component_labels(&ncomp);
  std::vector<char> side(n, 0);
  if (ncomp > 1) {
    for (std::size_t i = 0; i < n; ++i) side[i] = labels[i] == 0 ? 1 : 0;
    return make_cut(r, side);
  }

  const std::vector<double> x = fiedler_vector(sg);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });

  // Compare cut_a / (k_a (n - k_a)) < cut_b / (k_b (n - k_b)) in exact integers.
  std::vector<char> in_prefix(n, 0);
  std::uint64_t cut = 0;
  std::uint64_t best_cut = 0, best_den = 0;
  std::size_t best_k = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const Vertex v = order[k - 1];
    for (Vertex u : sg.neighbors(v)) {
      if (in_prefix[u]) {
        --cut;
      } else {
        ++cut;
      }
    }
    in_prefix[v] = 1;
    const std::uint64_t den = static_cast<std::uint64_t>(k) * (n - k);
    if (best_k == 0 || cut * best_den < best_cut * den) {
      best_cut = cut;
      best_den = den;
      best_k = k;
    }
  }
  for (std::size_t i = 0; i < best_k; ++i) side[order[i]] = 1;
  return make_cut(r, side);
}

CutResult ratio_cut(const Graph& g, const VertexSet& s, std::span<const double> w) {
  if (s.size() < 2) throw DimensionError("ratio_cut: vertex set needs at least 2 vertices");
  if (w.empty()) {
    const std::vector<double> zeros(g.num_vertices(), 0.0);
    return ratio_cut(make_region(g, zeros, s));
  }
  return ratio_cut(make_region(g, w, s));
}

namespace {

std::optional<CutResult> candidate_cut(const Region& r, std::size_t budget, const BasisConfig& cfg) {
  if (cfg.algo == CutAlgorithm::swt) return swt_cut(r, budget, cfg.swt);
  return fswt_cut(r, budget, cfg.fswt);
}

bool is_connected(const Region& r) {
  std::size_t ncomp = 0;
  r.sub.graph.component_labels(&ncomp);
  return ncomp <= 1;
}

struct Candidate {
  bool computed = false;
  std::size_t budget = 0;  // remaining budget the candidate was computed under
  std::optional<CutResult> cut;
};

}  // namespace

WaveletTree build_basis(const Graph& g, std::span<const double> w, const BasisConfig& cfg) {
  check_signal(g, w);
  const std::size_t n = g.num_vertices();
  WaveletTree t(n);
  double total_energy = 0.0;
  for (double v : w) total_energy += v * v;
  const double min_energy = 1e-12 * total_energy;

  std::size_t remaining = cfg.q;
  // Open leaves awaiting an adapted split, keyed by node id.
  std::map<NodeId, Candidate> open;

  // Splits disconnected leaves along components and registers the connected ones.
  auto admit = [&](NodeId root_id) {
    std::vector<NodeId> stack{root_id};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      const VertexSet members = t.node(id).members;
      if (members.size() < 2) continue;
      Region r = make_region(g, w, members);
      if (is_connected(r)) {
        open.emplace(id, Candidate{});
        continue;
      }
      CutResult rc = ratio_cut(r);
      const auto kids = t.split(id, std::move(rc.left), std::move(rc.right), SplitKind::structural);
      stack.push_back(kids.second);
      stack.push_back(kids.first);
    }
  };
  admit(t.root());

  while (remaining > 0 && !open.empty()) {
    std::vector<NodeId> stale;
    for (const auto& [id, c] : open) {
      const bool too_costly = c.cut && c.cut->cut_edges.size() > remaining;
      if (!c.computed || too_costly) stale.push_back(id);
    }

    std::vector<std::optional<CutResult>> fresh(stale.size());
    std::vector<std::exception_ptr> errors(stale.size());
    const auto count = static_cast<std::ptrdiff_t>(stale.size());
#pragma omp parallel for schedule(dynamic) if (cfg.parallel && count > 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        const Region r = make_region(g, w, t.node(stale[static_cast<std::size_t>(i)]).members);
        fresh[static_cast<std::size_t>(i)] = candidate_cut(r, remaining, cfg);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < stale.size(); ++i) {
      open[stale[i]] = Candidate{true, remaining, std::move(fresh[i])};
    }

    // Highest energy wins; ties go to the smaller node id.
    std::optional<NodeId> best;
    double best_energy = min_energy;
    for (const auto& [id, c] : open) {
      if (!c.cut || c.cut->cut_edges.size() > remaining) continue;
      if (c.cut->energy > best_energy) {
        best_energy = c.cut->energy;
        best = id;
      }
    }
    if (!best) break;

    CutResult cut = std::move(*open[*best].cut);
    open.erase(*best);
    remaining -= cut.cut_edges.size();
    const auto kids = t.split(*best, std::move(cut.left), std::move(cut.right), SplitKind::adapted);
    admit(kids.first);
    admit(kids.second);
  }

  // Structural refinement of whatever is left, in ascending smallest-member order.
  std::vector<NodeId> pending = t.leaves();
  std::sort(pending.begin(), pending.end(),
            [&](NodeId a, NodeId b) { return t.node(a).members.front() < t.node(b).members.front(); });
  for (NodeId leaf : pending) {
    std::vector<NodeId> stack{leaf};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      const VertexSet members = t.node(id).members;
      if (members.size() < 2) continue;
      CutResult rc = ratio_cut(make_region(g, w, members));
      const auto kids = t.split(id, std::move(rc.left), std::move(rc.right), SplitKind::structural);
      stack.push_back(kids.second);
      stack.push_back(kids.first);
    }
  }
  return t.canonicalized();
}

std::size_t adapted_cut_cost(const Graph& g, const WaveletTree& t) {
  std::size_t total = 0;
  for (const auto& nd : t.nodes()) {
    if (nd.is_leaf() || nd.kind != SplitKind::adapted) continue;
    const VertexSet& left = t.node(nd.children->first).members;
    const VertexSet& right = t.node(nd.children->second).members;
    for (const auto& [u, v] : g.edges()) {
      if ((left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u))) ++total;
    }
  }
  return total;
}

}  // namespace cutwave
