#include "zigzag/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "zigzag/words.hpp"

namespace zigzag::oracle {

namespace {

void require_vertex(const RealizedGraph& graph, Vertex v) {
  std::size_t limit = v.side == Side::A ? graph.num_a : graph.num_b;
  if (v.index >= limit) throw std::out_of_range("unknown vertex");
}

void extend(const RealizedGraph& graph, Walk& walk, Vertex target, std::size_t max_len, std::vector<Walk>& out) {
  if (walk.vertices.back() == target) out.push_back(walk);
  if (walk.length() == max_len) return;
  Vertex here = walk.vertices.back();
  for (EdgeId e : graph.incidence[graph.flat(here)]) {
    if (!walk.edges.empty() && walk.edges.back() == e) continue;
    walk.edges.push_back(e);
    walk.vertices.push_back(graph.across(e, here));
    extend(graph, walk, target, max_len, out);
    walk.edges.pop_back();
    walk.vertices.pop_back();
  }
}

}  // namespace

std::vector<Walk> nbt_walks(const RealizedGraph& graph, Vertex start, Vertex target, std::size_t max_len) {
  require_vertex(graph, start);
  require_vertex(graph, target);
  std::vector<Walk> out;
  Walk walk;
  walk.vertices.push_back(start);
  extend(graph, walk, target, max_len, out);
  std::stable_sort(out.begin(), out.end(), [](const Walk& x, const Walk& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.edges < y.edges;
  });
  return out;
}

std::size_t pi1_rank(const RealizedGraph& graph, Vertex v) {
  require_vertex(graph, v);
  Component c = component_of(graph, v);
  return c.num_edges + 1 - c.vertices.size();
}

CompareReport compare_words_walks(const FiniteSpan& span, Vertex target, std::size_t max_len) {
  CompareReport rep;
  RealizedGraph graph = realize(span);
  Vertex start{Side::A, span.basepoint()};
  auto walks = nbt_walks(graph, start, target, max_len);
  auto words = enumerate(span, target, max_len);
  rep.words = words.size();
  rep.walks = walks.size();
  for (std::size_t i = 0; i < std::min(words.size(), walks.size()); ++i) {
    const auto& w = words[i];
    const auto& k = walks[i];
    bool same = w.size() == k.length();
    for (std::size_t j = 0; same && j < w.size(); ++j) {
      // Fwd crosses from the A side, Bwd from the B side
      Side from = w.steps[j].dir == Dir::Fwd ? Side::A : Side::B;
      same = w.steps[j].edge == k.edges[j] && k.vertices[j].side == from;
    }
    if (!same) {
      rep.first_mismatch = "item " + std::to_string(i) + ": word '" + to_string(span, w) + "' differs from walk";
      return rep;
    }
  }
  if (words.size() != walks.size())
    rep.first_mismatch = std::to_string(words.size()) + " words vs " + std::to_string(walks.size()) + " walks";
  return rep;
}

}  // namespace zigzag::oracle
