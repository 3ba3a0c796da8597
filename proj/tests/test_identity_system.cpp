#include <gtest/gtest.h>

#include <random>

#include "zigzag/corpus.hpp"
#include "zigzag/identity_system.hpp"

using namespace zigzag;

namespace {

constexpr std::size_t L = 6;

// Net signed crossings of `edge`, read straight off the word.
long winding_number(const ZigzagWord& w, EdgeId edge) {
  long n = 0;
  for (const auto& st : w.steps)
    if (st.edge == edge) n += st.dir == Dir::Fwd ? 1 : -1;
  return n;
}

// Folds the word left to right: Fwd applies the transition at the prefix,
// Bwd the inverse at the extended prefix.
template <typename F>
typename F::element_type scan(const FiniteSpan& sp, const F& fam, typename F::element_type q, const ZigzagWord& w) {
  ZigzagWord prefix;
  for (const auto& st : w.steps) {
    prefix.steps.push_back(st);
    ZigzagWord before(prefix);
    before.steps.pop_back();
    q = st.dir == Dir::Fwd ? fam.transport(st.edge, before, q) : fam.transport_inv(st.edge, prefix, q);
  }
  return q;
}

}  // namespace

TEST(Families, TrivialSection) {
  FiniteSpan th = corpus::theta();
  auto fam = trivial_family(th, L);
  auto sec = elim_section(th, fam, 0);
  EXPECT_EQ(sec.values.size(), enumerate_all(th, L).size());
  for (const auto& [w, v] : sec.values) EXPECT_EQ(v, 0u);
  EXPECT_TRUE(check_computation(th, fam, 0, sec).ok());
  EXPECT_TRUE(uniqueness_check(th, fam, 0, sec).ok());
}

TEST(Families, CircleWindingExamples) {
  FiniteSpan c = corpus::circle();
  const EdgeId t = 1;
  auto fam = winding_family(c, L, t);
  auto sec = elim_section(c, fam, L);
  EXPECT_EQ(sec.at(ZigzagWord{}), L);
  EXPECT_EQ(sec.at(parse_word(c, ">s <t")), L - 1);
  EXPECT_EQ(sec.at(parse_word(c, ">t <s")), L + 1);
  EXPECT_EQ(sec.at(parse_word(c, ">t <s >t <s >t <s")), L + 3);
  for (const auto& [w, v] : sec.values) EXPECT_EQ(long(v) - long(L), winding_number(w, t)) << to_string(c, w);
}

TEST(Families, ParityMatchesCrossingCount) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 20; ++i) {
    FiniteSpan sp = corpus::random_span(rng, 4, 6);
    if (sp.num_edges() == 0) continue;
    EdgeId e = EdgeId(sp.num_edges() - 1);
    auto fam = parity_family(sp, 5, e);
    auto sec = elim_section(sp, fam, 1);
    for (const auto& [w, v] : sec.values) ASSERT_EQ(v, std::size_t((1 + std::abs(winding_number(w, e))) % 2));
  }
}

TEST(Families, SectionMatchesIndependentScan) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 20; ++i) {
    FiniteSpan sp = corpus::random_span(rng, 4, 6);
    auto fam = random_family(sp, 5, 4, rng);
    std::size_t q0 = fam.fiber_size(ZigzagWord{}) - 1;
    auto sec = elim_section(sp, fam, q0);
    for (const auto& w : enumerate_all(sp, 5)) ASSERT_EQ(sec.at(w), scan(sp, fam, q0, w));
    ASSERT_TRUE(check_computation(sp, fam, q0, sec).ok());
    ASSERT_TRUE(uniqueness_check(sp, fam, q0, sec).ok());
  }
}

TEST(Families, CorruptedSectionIsCaught) {
  FiniteSpan c = corpus::circle();
  auto fam = winding_family(c, L, 1);
  auto good = elim_section(c, fam, L);
  for (const auto& w : enumerate_all(c, L)) {
    auto bad = good;
    bad.values[w] = (bad.values[w] + 1) % (2 * L + 1);
    auto comp = check_computation(c, fam, L, bad);
    auto uniq = uniqueness_check(c, fam, L, bad);
    EXPECT_FALSE(comp.ok()) << to_string(c, w);
    ASSERT_TRUE(uniq.first_bad.has_value());
    EXPECT_EQ(*uniq.first_bad, w);
  }
}

TEST(Families, MissingValueIsReported) {
  FiniteSpan c = corpus::circle();
  auto fam = trivial_family(c, 4);
  auto sec = elim_section(c, fam, 0);
  ZigzagWord w = parse_word(c, ">s <t");
  sec.values.erase(w);
  EXPECT_FALSE(check_computation(c, fam, 0, sec).ok());
  auto uniq = uniqueness_check(c, fam, 0, sec);
  EXPECT_FALSE(uniq.ok());
  EXPECT_EQ(*uniq.first_bad, w);
  EXPECT_THROW(sec.at(w), DescentError);
}

TEST(Families, Errors) {
  FiniteSpan c = corpus::circle();
  auto fam = parity_family(c, 4, 0);
  EXPECT_THROW(elim_section(c, fam, 2), DescentError);

  auto holed = trivial_family(c, 4);
  holed.erase_fiber(parse_word(c, ">s <t"));
  EXPECT_THROW(elim_section(c, holed, 0), DescentError);
  EXPECT_THROW(holed.fiber_size(parse_word(c, ">s <t >s <t >s")), DescentError);

  EXPECT_THROW(Bijection::from_forward({0, 0}), DescentError);
  DescentFamily manual(c, 2);
  manual.set_fiber(ZigzagWord{}, 2);
  manual.set_fiber(parse_word(c, ">s"), 3);
  EXPECT_THROW(manual.set_transition(0, ZigzagWord{}, {0, 1}), DescentError);
  EXPECT_THROW(manual.set_transition(0, ZigzagWord{}, {0, 0, 1}), DescentError);
}

TEST(EncodeDecode, Examples) {
  auto i = encode_decode(corpus::interval(), 4);
  EXPECT_TRUE(i.ok());
  EXPECT_EQ(i.identity_checked, 2u);  // refl and >s

  auto c = encode_decode(corpus::circle(), 6);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.identity_checked, 11u);

  auto th = encode_decode(corpus::theta(), 4);
  EXPECT_TRUE(th.ok());
  EXPECT_EQ(th.identity_checked, 1u + 3u + 6u + 12u);
}

TEST(EncodeDecode, RandomSpans) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 30; ++i) {
    FiniteSpan sp = corpus::random_span(rng);
    auto rep = encode_decode(sp, 6);
    ASSERT_TRUE(rep.ok()) << rep.failures.front();
    ASSERT_EQ(rep.identity_checked, enumerate_all(sp, 5).size());
  }
}

TEST(IdentityFamily, Membership) {
  FiniteSpan c = corpus::circle();
  IdentityFamily fam(c, 4);
  ZigzagWord s = parse_word(c, ">s");
  EXPECT_TRUE(fam.contains(s, parse_word(c, ">t")));
  EXPECT_FALSE(fam.contains(s, ZigzagWord{}));
  EXPECT_FALSE(fam.contains(ZigzagWord{}, ZigzagWord{{fwd(0), bwd(0)}}));
  EXPECT_EQ(fam.transport(0, ZigzagWord{}, ZigzagWord{}), s);
}
