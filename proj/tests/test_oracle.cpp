#include <gtest/gtest.h>

#include <random>

#include "support/nb_count.hpp"
#include "zigzag/corpus.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/words.hpp"

using namespace zigzag;

namespace {

const Vertex a0{Side::A, 0};
const Vertex b0{Side::B, 0};

}  // namespace

TEST(Walks, Examples) {
  EXPECT_EQ(oracle::nbt_walks(realize(corpus::circle()), a0, a0, 4).size(), 5u);
  EXPECT_EQ(oracle::nbt_walks(realize(corpus::interval()), a0, a0, 10).size(), 1u);
  EXPECT_EQ(oracle::nbt_walks(realize(corpus::theta()), a0, b0, 3).size(), 15u);
  auto w = oracle::nbt_walks(realize(corpus::circle()), a0, b0, 1);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].edges, (std::vector<EdgeId>{0}));
  EXPECT_EQ(w[1].vertices, (std::vector<Vertex>{a0, b0}));
}

TEST(Walks, UnknownVertexThrows) {
  auto g = realize(corpus::circle());
  EXPECT_THROW(oracle::nbt_walks(g, a0, Vertex{Side::B, 3}, 2), std::out_of_range);
  EXPECT_THROW(oracle::pi1_rank(g, Vertex{Side::A, 9}), std::out_of_range);
}

TEST(Rank, Examples) {
  EXPECT_EQ(oracle::pi1_rank(realize(corpus::circle()), a0), 1u);
  EXPECT_EQ(oracle::pi1_rank(realize(corpus::interval()), a0), 0u);
  EXPECT_EQ(oracle::pi1_rank(realize(corpus::theta()), a0), 2u);
  EXPECT_EQ(oracle::pi1_rank(realize(corpus::tree4()), a0), 0u);
  EXPECT_EQ(oracle::pi1_rank(realize(corpus::coproduct()), Vertex{Side::A, 1}), 0u);
}

TEST(Compare, Examples) {
  auto c = oracle::compare_words_walks(corpus::circle(), a0, 6);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.words, 7u);
  auto cp = oracle::compare_words_walks(corpus::coproduct(), Vertex{Side::A, 1}, 6);
  EXPECT_TRUE(cp.ok());
  EXPECT_EQ(cp.words, 0u);
  auto th = oracle::compare_words_walks(corpus::theta(), b0, 5);
  EXPECT_TRUE(th.ok());
  EXPECT_EQ(th.words, 63u);
}

TEST(Walks, RegularDegreeRecurrence) {
  // theta is 3-regular: 3 * 2^(k-1) non-backtracking walks of length k >= 1 from a vertex
  auto g = realize(corpus::theta());
  for (std::size_t k = 1; k <= 8; ++k) {
    std::size_t at_len = oracle::nbt_walks(g, a0, a0, k).size() + oracle::nbt_walks(g, a0, b0, k).size() -
                         oracle::nbt_walks(g, a0, a0, k - 1).size() - oracle::nbt_walks(g, a0, b0, k - 1).size();
    EXPECT_EQ(at_len, 3u << (k - 1));
  }
}

TEST(Walks, RandomSpansMatchTransferMatrix) {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 60; ++i) {
    FiniteSpan sp = corpus::random_span(rng, 4, 6);
    auto g = realize(sp);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : sp.edges()) edges.emplace_back(int(e.a), int(e.b));
    Vertex base{Side::A, sp.basepoint()};
    for (std::uint32_t v = 0; v < sp.num_a() + sp.num_b(); ++v) {
      Vertex target = v < sp.num_a() ? Vertex{Side::A, v} : Vertex{Side::B, std::uint32_t(v - sp.num_a())};
      auto counts = zigzag_test::nb_walk_counts(sp.num_a(), edges, int(sp.basepoint()), int(v), 6);
      ASSERT_EQ(oracle::nbt_walks(g, base, target, 6).size(), zigzag_test::total(counts, 6));
      ASSERT_TRUE(oracle::compare_words_walks(sp, target, 6).ok());
    }
  }
}

TEST(Rank, ZeroMeansUniqueWords) {
  std::mt19937_64 rng(83);
  int trees = 0;
  for (int i = 0; i < 200; ++i) {
    FiniteSpan sp = corpus::random_span(rng);
    auto g = realize(sp);
    Vertex base{Side::A, sp.basepoint()};
    if (oracle::pi1_rank(g, base) != 0) continue;
    ++trees;
    for (Vertex v : component_of(g, base).vertices) ASSERT_EQ(enumerate(sp, v, 8).size(), 1u);
  }
  EXPECT_GT(trees, 0);
}
