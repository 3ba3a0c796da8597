#include "zigzag/span.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace zigzag {

namespace {

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

FiniteSpan::FiniteSpan(std::vector<std::string> a_vertices, std::vector<std::string> b_vertices,
                       std::vector<Edge> edges, std::uint32_t basepoint)
    : a_(std::move(a_vertices)), b_(std::move(b_vertices)), edges_(std::move(edges)), base_(basepoint) {
  auto check_distinct = [](const std::vector<std::string>& labels, const char* sort) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw std::invalid_argument(std::string("duplicate ") + sort + " label '" + l + "'");
    }
  };
  check_distinct(a_, "A");
  check_distinct(b_, "B");
  std::vector<std::string> edge_labels;
  for (const auto& e : edges_) {
    if (e.a >= a_.size()) throw std::invalid_argument("edge '" + e.label + "' has A-endpoint out of range");
    if (e.b >= b_.size()) throw std::invalid_argument("edge '" + e.label + "' has B-endpoint out of range");
    edge_labels.push_back(e.label);
  }
  check_distinct(edge_labels, "S");
  if (base_ >= a_.size()) throw std::invalid_argument("basepoint not in A");

  at_a_.assign(a_.size(), {});
  at_b_.assign(b_.size(), {});
  for (EdgeId s = 0; s < edges_.size(); ++s) {
    at_a_[edges_[s].a].push_back(s);
    at_b_[edges_[s].b].push_back(s);
  }
}

std::optional<Vertex> FiniteSpan::find_vertex(std::string_view label) const {
  for (std::uint32_t i = 0; i < a_.size(); ++i)
    if (a_[i] == label) return Vertex{Side::A, i};
  for (std::uint32_t i = 0; i < b_.size(); ++i)
    if (b_[i] == label) return Vertex{Side::B, i};
  return std::nullopt;
}

std::optional<EdgeId> FiniteSpan::find_edge(std::string_view label) const {
  for (EdgeId s = 0; s < edges_.size(); ++s)
    if (edges_[s].label == label) return s;
  return std::nullopt;
}

const std::string& FiniteSpan::label(Vertex v) const {
  return v.side == Side::A ? a_.at(v.index) : b_.at(v.index);
}

FiniteSpan parse_span(std::string_view text) {
  std::vector<std::string> a, b;
  std::unordered_map<std::string, std::uint32_t> a_index, b_index;
  std::unordered_set<std::string> edge_labels;
  std::vector<Edge> edges;
  std::optional<std::uint32_t> base;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& kw = toks[0];
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (!valid_label(toks[i])) throw ParseError(lineno, "invalid label '" + toks[i] + "'");
    }
    if (kw == "A" || kw == "B") {
      if (toks.size() < 2) throw ParseError(lineno, "syntax error: '" + kw + "' needs at least one label");
      auto& labels = kw == "A" ? a : b;
      auto& index = kw == "A" ? a_index : b_index;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (index.count(toks[i])) throw ParseError(lineno, "duplicate label '" + toks[i] + "'");
        index.emplace(toks[i], static_cast<std::uint32_t>(labels.size()));
        labels.push_back(toks[i]);
      }
    } else if (kw == "S") {
      if (toks.size() != 4) throw ParseError(lineno, "syntax error: expected 'S <edge> <A-label> <B-label>'");
      if (!edge_labels.insert(toks[1]).second) throw ParseError(lineno, "duplicate label '" + toks[1] + "'");
      auto ia = a_index.find(toks[2]);
      if (ia == a_index.end()) throw ParseError(lineno, "unknown endpoint label '" + toks[2] + "'");
      auto ib = b_index.find(toks[3]);
      if (ib == b_index.end()) throw ParseError(lineno, "unknown endpoint label '" + toks[3] + "'");
      edges.push_back(Edge{toks[1], ia->second, ib->second});
    } else if (kw == "base") {
      if (toks.size() != 2) throw ParseError(lineno, "syntax error: expected 'base <A-label>'");
      if (base) throw ParseError(lineno, "duplicate basepoint");
      auto ia = a_index.find(toks[1]);
      if (ia == a_index.end()) throw ParseError(lineno, "basepoint not in A");
      base = ia->second;
    } else {
      throw ParseError(lineno, "syntax error: unknown keyword '" + kw + "'");
    }
  }
  if (!base) throw ParseError(lineno, "missing basepoint");
  return FiniteSpan(std::move(a), std::move(b), std::move(edges), *base);
}

FiniteSpan load_span(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_span(buf.str());
}

std::string serialize_span(const FiniteSpan& span) {
  std::ostringstream out;
  auto list = [&](const char* kw, const std::vector<std::string>& labels) {
    if (labels.empty()) return;
    out << kw;
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
  };
  list("A", span.a_vertices());
  list("B", span.b_vertices());
  for (const auto& e : span.edges())
    out << "S " << e.label << ' ' << span.a_vertices()[e.a] << ' ' << span.b_vertices()[e.b] << '\n';
  out << "base " << span.a_vertices()[span.basepoint()] << '\n';
  return out.str();
}

Vertex RealizedGraph::vertex(std::size_t flat_id) const {
  if (flat_id < num_a) return Vertex{Side::A, static_cast<std::uint32_t>(flat_id)};
  return Vertex{Side::B, static_cast<std::uint32_t>(flat_id - num_a)};
}

Vertex RealizedGraph::across(EdgeId e, Vertex v) const {
  const auto& [x, y] = ends.at(e);
  return v == x ? y : x;
}

RealizedGraph realize(const FiniteSpan& span) {
  RealizedGraph g;
  g.num_a = span.num_a();
  g.num_b = span.num_b();
  g.incidence.assign(g.num_vertices(), {});
  for (EdgeId s = 0; s < span.num_edges(); ++s) {
    Vertex x{Side::A, span.f(s)};
    Vertex y{Side::B, span.g(s)};
    g.ends.emplace_back(x, y);
    g.incidence[g.flat(x)].push_back(s);
    g.incidence[g.flat(y)].push_back(s);
  }
  return g;
}

Component component_of(const RealizedGraph& graph, Vertex v) {
  Component c;
  std::vector<bool> seen(graph.num_vertices(), false);
  std::deque<Vertex> queue{v};
  seen[graph.flat(v)] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    c.vertices.push_back(u);
    for (EdgeId e : graph.incidence[graph.flat(u)]) {
      Vertex w = graph.across(e, u);
      if (seen[graph.flat(w)]) continue;
      seen[graph.flat(w)] = true;
      c.tree.push_back(e);
      queue.push_back(w);
    }
  }
  for (EdgeId e = 0; e < graph.num_edges(); ++e)
    if (seen[graph.flat(graph.ends[e].first)]) ++c.num_edges;
  return c;
}

}  // namespace zigzag
