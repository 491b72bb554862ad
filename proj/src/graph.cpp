#include "cutwave/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cutwave/errors.hpp"
#include "cutwave/io.hpp"

namespace cutwave {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i - 1] >= members_[i]) {
      throw ValidationError("vertex set must be strictly ascending");
    }
  }
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VertexSet(std::move(members));
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references a vertex >= n=" + std::to_string(n_));
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError("duplicate edge (" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + ")");
  }

  std::vector<std::size_t> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  row_ptr_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) row_ptr_[v + 1] = row_ptr_[v] + deg[v];
  col_idx_.resize(row_ptr_[n_]);
  std::vector<std::size_t> fill(row_ptr_.begin(), row_ptr_.end() - 1);
  for (const auto& [u, v] : edges_) {
    col_idx_[fill[u]++] = v;
    col_idx_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[v]),
              col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[v + 1]));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::laplacian_bound() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    std::size_t nb_max = 0;
    for (Vertex u : neighbors(v)) nb_max = std::max(nb_max, degree(u));
    best = std::max(best, degree(v) + nb_max);
  }
  return static_cast<double>(best);
}

std::vector<Vertex> Graph::component_labels(std::size_t* count) const {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> label(n_, kUnset);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : neighbors(v)) {
        if (label[u] == kUnset) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

// ---------------------------------------------------------------------------
// Subgraphs and cuts

Vertex Subgraph::local_of(Vertex global) const {
  auto m = to_global.members();
  auto it = std::lower_bound(m.begin(), m.end(), global);
  if (it == m.end() || *it != global) {
    throw DimensionError("vertex " + std::to_string(global) + " not in subgraph");
  }
  return static_cast<Vertex>(it - m.begin());
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw DimensionError("induced_subgraph: empty vertex set");
  if (s.members().back() >= g.num_vertices()) {
    throw DimensionError("induced_subgraph: vertex id out of range");
  }
  const auto members = s.members();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex u : g.neighbors(members[i])) {
      if (u <= members[i]) continue;
      auto it = std::lower_bound(members.begin(), members.end(), u);
      if (it != members.end() && *it == u) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(it - members.begin()));
      }
    }
  }
  return Subgraph{Graph(members.size(), std::move(edges)), s};
}

std::size_t cut_size(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.num_vertices()) {
    throw DimensionError("cut_size: vertex id out of range");
  }
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) in[v] = 1;
  std::size_t cut = 0;
  for (const auto& [u, v] : g.edges()) cut += (in[u] != in[v]);
  return cut;
}

VertexSet complement(const VertexSet& s, std::size_t n) {
  std::vector<Vertex> out;
  out.reserve(n - s.size());
  auto it = s.begin();
  for (Vertex v = 0; v < n; ++v) {
    if (it != s.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line_no);
  }
  return v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t header_n = 0;
  bool have_header = false;
  bool first = true;
  std::size_t n = 0;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto tok = split_ws(line);
    if (first && tok.size() == 2 && tok[0] == "n") {
      header_n = parse_uint(tok[1], line_no);
      have_header = true;
      first = false;
      return;
    }
    first = false;
    if (tok.size() != 2) throw ParseError("expected 'u v'", line_no);
    auto u = parse_uint(tok[0], line_no);
    auto v = parse_uint(tok[1], line_no);
    if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull) throw ParseError("vertex id too large", line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<std::size_t>(n, std::max(u, v) + 1);
  });
  if (have_header) {
    if (n > header_n) {
      throw ValidationError("edge references vertex >= header n=" + std::to_string(header_n));
    }
    n = header_n;
  }
  return Graph(n, std::move(edges));
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Signal parse_signal(std::string_view text) {
  Signal w;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    double v = 0;
    auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || p != line.data() + line.size()) {
      throw ParseError("expected a decimal value, got '" + std::string(line) + "'", line_no);
    }
    if (!std::isfinite(v)) throw ParseError("non-finite value", line_no);
    w.push_back(v);
  });
  return w;
}

Signal load_signal(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_signal(text);
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  }
}

std::string format_signal(std::span<const double> w) {
  std::string out;
  for (double v : w) {
    out += fmt12(v);
    out += '\n';
  }
  return out;
}

void check_signal(const Graph& g, std::span<const double> w) {
  if (w.size() != g.num_vertices()) {
    throw DimensionError("signal has " + std::to_string(w.size()) + " values but graph has " +
                         std::to_string(g.num_vertices()) + " vertices");
  }
  for (double v : w) {
    if (!std::isfinite(v)) throw ValidationError("signal contains a non-finite value");
  }
}

Signal normalize_signal(std::span<const double> w) {
  for (double v : w) {
    if (!std::isfinite(v)) throw ValidationError("normalize_signal: non-finite value");
  }
  Signal out(w.size(), 0.0);
  if (w.empty()) return out;
  auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  const double range = *hi - *lo;
  if (range == 0.0) return out;
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = (w[i] - *lo) / range;
  return out;
}

// ---------------------------------------------------------------------------
// io.hpp

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace cutwave
