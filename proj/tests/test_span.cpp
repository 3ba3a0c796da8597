#include <gtest/gtest.h>

#include <random>

#include "zigzag/corpus.hpp"
#include "zigzag/span.hpp"

using namespace zigzag;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_span(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_span(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseSpan, Circle) {
  FiniteSpan sp = parse_span("A a\nB b\nS s a b\nS t a b\nbase a");
  EXPECT_EQ(sp.num_a(), 1u);
  EXPECT_EQ(sp.num_b(), 1u);
  EXPECT_EQ(sp.num_edges(), 2u);
  EXPECT_EQ(sp.edges()[1].label, "t");
  EXPECT_EQ(sp.basepoint(), 0u);
}

TEST(ParseSpan, Interval) {
  FiniteSpan sp = parse_span("A a\nB b\nS s a b\nbase a");
  EXPECT_EQ(sp.num_edges(), 1u);
  EXPECT_EQ(sp.f(0), 0u);
  EXPECT_EQ(sp.g(0), 0u);
}

TEST(ParseSpan, CommentsAndMultipleDeclarationLines) {
  FiniteSpan sp = parse_span("# header\nA x y\nA z\n\nB p\n  # indented comment\nS e z p\nbase y\n");
  EXPECT_EQ(sp.a_vertices(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(sp.basepoint(), 1u);
  EXPECT_EQ(sp.f(0), 2u);
}

TEST(ParseSpan, Errors) {
  EXPECT_NE(parse_error_message("A a\nB b\nS s a b\nbase q").find("basepoint not in A"), std::string::npos);
  EXPECT_EQ(parse_error_line("A a\nB b\nS s a b\nbase q"), 4u);
  EXPECT_NE(parse_error_message("A a a\nB b\nbase a").find("duplicate label"), std::string::npos);
  EXPECT_NE(parse_error_message("A a\nB b\nS s a c\nbase a").find("unknown endpoint"), std::string::npos);
  EXPECT_EQ(parse_error_line("A a\nB b\nS s a c\nbase a"), 3u);
  EXPECT_NE(parse_error_message("A a\nB b\nS s a b\n").find("missing basepoint"), std::string::npos);
  EXPECT_NE(parse_error_message("A a\nB b\nS s a\nbase a").find("syntax error"), std::string::npos);
  EXPECT_NE(parse_error_message("A a\nQ b\nbase a").find("syntax error"), std::string::npos);
  EXPECT_NE(parse_error_message("A a-b\nbase a").find("invalid label"), std::string::npos);
  EXPECT_NE(parse_error_message("A a\nB b\nS s a b\nS s a b\nbase a").find("duplicate label"), std::string::npos);
  EXPECT_NE(parse_error_message("A a\nbase a\nbase a").find("duplicate basepoint"), std::string::npos);
}

TEST(ParseSpan, RoundTripOnRandomSpans) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    FiniteSpan sp = corpus::random_span(rng);
    EXPECT_EQ(parse_span(serialize_span(sp)), sp);
  }
  for (const auto& [name, sp] : corpus::fixed()) EXPECT_EQ(parse_span(serialize_span(sp)), sp) << name;
}

TEST(FiniteSpan, ConstructorValidates) {
  EXPECT_THROW(FiniteSpan({"a"}, {"b"}, {Edge{"s", 0, 1}}, 0), std::invalid_argument);
  EXPECT_THROW(FiniteSpan({"a"}, {"b"}, {}, 1), std::invalid_argument);
  EXPECT_THROW(FiniteSpan({"a", "a"}, {"b"}, {}, 0), std::invalid_argument);
}

TEST(Realize, Cardinalities) {
  RealizedGraph circle = realize(corpus::circle());
  EXPECT_EQ(circle.num_vertices(), 2u);
  EXPECT_EQ(circle.num_edges(), 2u);
  EXPECT_EQ(circle.ends[0], circle.ends[1]);  // parallel edges

  FiniteSpan empty = parse_span("A a0 a1\nB b\nbase a0");
  RealizedGraph g = realize(empty);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 0u);

  RealizedGraph theta = realize(corpus::theta());
  EXPECT_EQ(theta.num_vertices(), 2u);
  EXPECT_EQ(theta.num_edges(), 3u);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    FiniteSpan sp = corpus::random_span(rng);
    RealizedGraph r = realize(sp);
    ASSERT_EQ(r.num_vertices(), sp.num_a() + sp.num_b());
    ASSERT_EQ(r.num_edges(), sp.num_edges());
    for (EdgeId s = 0; s < sp.num_edges(); ++s) {
      EXPECT_EQ(r.ends[s].first, (Vertex{Side::A, sp.f(s)}));
      EXPECT_EQ(r.ends[s].second, (Vertex{Side::B, sp.g(s)}));
    }
  }
}

TEST(ComponentOf, Examples) {
  Component c = component_of(realize(corpus::circle()), Vertex{Side::A, 0});
  EXPECT_EQ(c.vertices.size(), 2u);
  EXPECT_EQ(c.tree, (std::vector<EdgeId>{0}));  // edge s

  FiniteSpan empty = parse_span("A a0 a1\nB b\nbase a0");
  Component e = component_of(realize(empty), Vertex{Side::A, 0});
  EXPECT_EQ(e.vertices, (std::vector<Vertex>{Vertex{Side::A, 0}}));
  EXPECT_TRUE(e.tree.empty());

  Component i = component_of(realize(corpus::interval()), Vertex{Side::B, 0});
  EXPECT_EQ(i.vertices.size(), 2u);
  EXPECT_EQ(i.tree, (std::vector<EdgeId>{0}));
}

TEST(ComponentOf, SpanningTreeHasKMinusOneEdges) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    FiniteSpan sp = corpus::random_span(rng);
    RealizedGraph g = realize(sp);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      Component c = component_of(g, g.vertex(v));
      ASSERT_EQ(c.tree.size() + 1, c.vertices.size());
    }
  }
}
