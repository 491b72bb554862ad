#include "cutwave/formats.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "cutwave/errors.hpp"
#include "cutwave/io.hpp"

namespace cutwave {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Non-empty lines split on whitespace; '#' starts a comment.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

double to_double(std::string_view tok, std::size_t line) {
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError("expected a finite decimal, got '" + s + "'", line);
  }
  return v;
}

Vertex to_vertex(std::string_view tok, std::size_t line) {
  const std::uint64_t v = to_uint(tok, line);
  if (v > UINT32_MAX) throw ParseError("vertex id out of range", line);
  return static_cast<Vertex>(v);
}

}  // namespace

std::string format_compressed(const CompressedSignal& c) {
  std::ostringstream os;
  os << c.n << ' ' << c.m << ' ' << c.keep_count() << ' ' << c.budget_used() << '\n';
  for (const auto& cut : c.cuts) {
    os << "cut " << cut.node;
    for (const auto& [u, v] : cut.edges) os << ' ' << u << ' ' << v;
    os << '\n';
  }
  for (const auto& k : c.kept) os << "coef " << k.node << ' ' << fmt17(k.value) << '\n';
  if (c.average) os << "avg " << fmt17(*c.average) << '\n';
  return os.str();
}

CompressedSignal parse_compressed(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty compressed file", 1);
  const Line& head = lines.front();
  if (head.tokens.size() != 4) throw ParseError("header must be '<n> <m> <keep> <budget>'", head.number);
  CompressedSignal c;
  c.n = to_uint(head.tokens[0], head.number);
  c.m = to_uint(head.tokens[1], head.number);
  const std::size_t keep = to_uint(head.tokens[2], head.number);
  const std::size_t budget = to_uint(head.tokens[3], head.number);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string_view kind = l.tokens[0];
    if (kind == "cut") {
      if (l.tokens.size() < 2 || l.tokens.size() % 2 != 0) {
        throw ParseError("cut line must be 'cut <node> u1 v1 ...'", l.number);
      }
      StoredCut cut{static_cast<NodeId>(to_uint(l.tokens[1], l.number)), {}};
      for (std::size_t k = 2; k < l.tokens.size(); k += 2) {
        cut.edges.emplace_back(to_vertex(l.tokens[k], l.number), to_vertex(l.tokens[k + 1], l.number));
      }
      if (!c.cuts.empty() && c.cuts.back().node >= cut.node) {
        throw ParseError("cut lines must have ascending node ids", l.number);
      }
      c.cuts.push_back(std::move(cut));
    } else if (kind == "coef") {
      if (l.tokens.size() != 3) throw ParseError("coef line must be 'coef <node> <value>'", l.number);
      KeptCoefficient k{static_cast<NodeId>(to_uint(l.tokens[1], l.number)), to_double(l.tokens[2], l.number)};
      if (!c.kept.empty() && c.kept.back().node >= k.node) {
        throw ParseError("coef lines must have ascending node ids", l.number);
      }
      c.kept.push_back(k);
    } else if (kind == "avg") {
      if (l.tokens.size() != 2) throw ParseError("avg line must be 'avg <value>'", l.number);
      if (c.average) throw ParseError("duplicate avg line", l.number);
      c.average = to_double(l.tokens[1], l.number);
    } else {
      throw ParseError("unknown record '" + std::string(kind) + "'", l.number);
    }
  }
  if (c.keep_count() != keep) {
    throw FormatError("header keep=" + std::to_string(keep) + " but file holds " + std::to_string(c.keep_count()) +
                      " coefficients");
  }
  if (c.budget_used() != budget) {
    throw FormatError("header budget=" + std::to_string(budget) + " but file stores " +
                      std::to_string(c.budget_used()) + " cut edges");
  }
  return c;
}

std::string format_tree(const WaveletTree& t) {
  std::ostringstream os;
  os << "n " << t.num_vertices() << " nodes " << t.size() << '\n';
  for (const auto& nd : t.nodes()) {
    os << "node " << nd.id << ' ' << nd.level << ' ';
    if (nd.parent) {
      os << *nd.parent;
    } else {
      os << '-';
    }
    os << ' ' << (nd.kind == SplitKind::adapted ? "adapted" : "structural") << " members:";
    for (Vertex v : nd.members) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

WaveletTree parse_tree(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty tree file", 1);
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "n" || head.tokens[2] != "nodes") {
    throw ParseError("header must be 'n <n> nodes <count>'", head.number);
  }
  const std::size_t n = to_uint(head.tokens[1], head.number);
  const std::size_t count = to_uint(head.tokens[3], head.number);
  if (lines.size() - 1 != count) {
    throw ParseError("header announces " + std::to_string(count) + " nodes but file has " +
                         std::to_string(lines.size() - 1),
                     head.number);
  }
  std::vector<TreeNode> nodes;
  nodes.reserve(count);
  std::vector<std::vector<NodeId>> kids(count);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() < 6 || l.tokens[0] != "node" || l.tokens[5] != "members:") {
      throw ParseError("node line must be 'node <id> <level> <parent|-> <kind> members: ...'", l.number);
    }
    TreeNode nd;
    nd.id = static_cast<NodeId>(to_uint(l.tokens[1], l.number));
    nd.level = static_cast<std::uint32_t>(to_uint(l.tokens[2], l.number));
    if (l.tokens[3] != "-") {
      const std::size_t p = to_uint(l.tokens[3], l.number);
      if (p >= count) throw ParseError("parent id out of range", l.number);
      nd.parent = static_cast<NodeId>(p);
      kids[p].push_back(nd.id);
    }
    if (l.tokens[4] == "adapted") {
      nd.kind = SplitKind::adapted;
    } else if (l.tokens[4] == "structural") {
      nd.kind = SplitKind::structural;
    } else {
      throw ParseError("kind must be 'adapted' or 'structural'", l.number);
    }
    std::vector<Vertex> members;
    for (std::size_t k = 6; k < l.tokens.size(); ++k) members.push_back(to_vertex(l.tokens[k], l.number));
    try {
      nd.members = VertexSet(std::move(members));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), l.number);
    }
    nodes.push_back(std::move(nd));
  }
  for (std::size_t p = 0; p < count; ++p) {
    if (kids[p].empty()) continue;
    if (kids[p].size() != 2) throw FormatError("node " + std::to_string(p) + " must have 0 or 2 children");
    NodeId a = kids[p][0], b = kids[p][1];
    if (a >= count || b >= count) throw FormatError("node id out of range");
    if (nodes[b].members.empty() || (!nodes[a].members.empty() && nodes[b].members.front() < nodes[a].members.front())) {
      std::swap(a, b);
    }
    nodes[p].children = std::make_pair(a, b);
  }
  try {
    return WaveletTree::from_nodes(n, std::move(nodes));
  } catch (const ValidationError& e) {
    throw FormatError(std::string("invalid tree: ") + e.what());
  }
}

}  // namespace cutwave
