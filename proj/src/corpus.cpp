#include "zigzag/corpus.hpp"

namespace zigzag::corpus {

FiniteSpan circle() { return parse_span("A a\nB b\nS s a b\nS t a b\nbase a\n"); }

FiniteSpan interval() { return parse_span("A a\nB b\nS s a b\nbase a\n"); }

FiniteSpan theta() { return parse_span("A a\nB b\nS s a b\nS t a b\nS u a b\nbase a\n"); }

FiniteSpan tree4() { return parse_span("A a0 a1\nB b0 b1\nS s a0 b0\nS t a1 b0\nS u a1 b1\nbase a0\n"); }

FiniteSpan coproduct() { return parse_span("A a0 a1\nB b0\nbase a0\n"); }

std::vector<std::pair<std::string, FiniteSpan>> fixed() {
  return {{"circle", circle()}, {"interval", interval()}, {"theta", theta()}, {"tree4", tree4()},
          {"coproduct", coproduct()}};
}

FiniteSpan random_span(std::mt19937_64& rng, std::size_t max_side, std::size_t max_edges) {
  auto pick = [&rng](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::size_t na = pick(1, max_side), nb = pick(1, max_side), ns = pick(0, max_edges);
  std::vector<std::string> a, b;
  for (std::size_t i = 0; i < na; ++i) a.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < nb; ++i) b.push_back("b" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < ns; ++k) {
    edges.push_back(Edge{"s" + std::to_string(k), static_cast<std::uint32_t>(pick(0, na - 1)),
                         static_cast<std::uint32_t>(pick(0, nb - 1))});
  }
  return FiniteSpan(std::move(a), std::move(b), std::move(edges), static_cast<std::uint32_t>(pick(0, na - 1)));
}

}  // namespace zigzag::corpus
