#include <random>

#include <gtest/gtest.h>

#include "houghton/element.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

HoughtonElem word_value(int n, const oracle::Word& w) {
  HoughtonElem g(n);
  for (const auto& l : w) {
    const HoughtonElem x = l.gen == 0 ? gen_alpha(n) : gen_g(n, l.gen);
    g = g * (l.inverse ? inverse(x) : x);
  }
  return g;
}

std::vector<Index> vec(std::initializer_list<Index> v) { return v; }

}  // namespace

TEST(HoughtonElem, GeneratorAction) {
  const HoughtonElem g1 = gen_g(3, 1);
  EXPECT_EQ(g1({1, 5}), (Point{1, 4}));
  EXPECT_EQ(g1({1, 1}), (Point{2, 1}));
  EXPECT_EQ(g1({2, 3}), (Point{2, 4}));
  EXPECT_EQ(g1({3, 3}), (Point{3, 3}));
  EXPECT_EQ(HoughtonElem(3)({2, 9}), (Point{2, 9}));
  EXPECT_EQ(g1.exceptions().size(), 1u);
  EXPECT_EQ(g1.translation(), vec({-1, 1, 0}));
  EXPECT_EQ(to_string(g1), "T[-1,1,0]{1.1->2.1}");
}

TEST(HoughtonElem, AlphaIsFinitary) {
  const HoughtonElem a = gen_alpha(3);
  EXPECT_TRUE(is_fsym(a));
  EXPECT_FALSE(is_falt(a));
  EXPECT_EQ(pi(a), IntVector::Zero(3));
  EXPECT_FALSE(is_fsym(gen_g(3, 1)));
  EXPECT_EQ(as_finite_perm(a), FinitePerm::transposition(3, {1, 1}, {1, 2}));
  EXPECT_THROW((void)as_finite_perm(gen_g(3, 2)), std::invalid_argument);
}

TEST(HoughtonElem, InverseAndVectors) {
  const HoughtonElem g = gen_g(3, 1);
  EXPECT_TRUE((g * inverse(g)).is_identity());
  EXPECT_TRUE((inverse(g) * g).is_identity());
  EXPECT_EQ((g * g).translation(), vec({-2, 2, 0}));
  EXPECT_EQ(pow(g, 3), g * g * g);
  EXPECT_EQ(pow(g, -2), inverse(g * g));
  EXPECT_TRUE(pow(g, 0).is_identity());
}

TEST(HoughtonElem, CommutatorsGiveAlpha) {
  EXPECT_EQ(commutator(gen_g(3, 1), gen_g(3, 2)), gen_alpha(3));
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(commutator(gen_g(n, i), gen_g(n, j)), gen_alpha(n)) << n << " " << i << " " << j;
      }
  EXPECT_TRUE(commutator(gen_g(4, 2), gen_g(4, 2)).is_identity());
}

TEST(HoughtonElem, AlphaCommutesWithFarConjugate) {
  const HoughtonElem a = gen_alpha(2);
  const HoughtonElem g = gen_g(2, 1);
  EXPECT_TRUE(commutator(a, conjugate(a, g * g)).is_identity());
  EXPECT_FALSE(commutator(a, conjugate(a, g)).is_identity());
}

TEST(HoughtonElem, ReducedVectorIsStandardBasis) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      const IntVector e = IntVector::Unit(n - 1, i - 1);
      EXPECT_EQ(pi_reduced(gen_g(n, i)), e);
    }
}

TEST(HoughtonElem, PiIsAHomomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const HoughtonElem g = word_value(n, oracle::random_word(rng, n, 8));
    const HoughtonElem h = word_value(n, oracle::random_word(rng, n, 8));
    EXPECT_EQ(pi(g * h), IntVector(pi(g) + pi(h)));
    EXPECT_EQ(pi(g).sum(), 0);
  }
}

TEST(HoughtonElem, ThreeCycleIsAlternating) {
  const HoughtonElem a = gen_alpha(3);
  const HoughtonElem c = a * conjugate(a, inverse(gen_g(3, 1)));
  ASSERT_TRUE(is_fsym(c));
  EXPECT_TRUE(is_single_cycle(as_finite_perm(c)));
  EXPECT_EQ(as_finite_perm(c).support_size(), 3u);
  EXPECT_TRUE(is_falt(c));
}

TEST(HoughtonElem, FromPartsValidates) {
  EXPECT_THROW(HoughtonElem::from_parts({1, 0}, {}), std::invalid_argument);
  // (1,1) would be pushed off the ray with no exception listed
  EXPECT_THROW(HoughtonElem::from_parts({-1, 1}, {}), std::invalid_argument);
  // two sources onto (2,1)
  EXPECT_THROW(HoughtonElem::from_parts({-1, 1}, {{{1, 1}, {2, 2}}}), std::invalid_argument);
  const HoughtonElem g = HoughtonElem::from_parts({-1, 1}, {{{1, 1}, {2, 1}}, {{1, 5}, {1, 4}}});
  EXPECT_EQ(g, gen_g(2, 1));
  EXPECT_THROW(HoughtonElem::from_parts({0}, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 2}}}),
               std::invalid_argument);
}

TEST(HoughtonElem, RelabelSwapsRays) {
  const RayPerm s12 = RayPerm::transposition(2, 1, 2);
  const HoughtonElem g = relabel(gen_g(2, 1), s12);
  EXPECT_EQ(g.translation(), vec({1, -1}));
  for (int r = 1; r <= 2; ++r)
    for (Index p = 1; p <= 10; ++p)
      EXPECT_EQ(g(apply(s12, {r, p})), apply(s12, gen_g(2, 1)({r, p})));
}

TEST(HoughtonElem, ProductMatchesPointwiseEvaluation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 4;
    const auto w = oracle::random_word(rng, n, 10);
    EXPECT_TRUE(oracle::agrees_with(word_value(n, w), w, 30));
  }
}

TEST(HoughtonElem, GroupAxiomsOnRandomElements) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const HoughtonElem a = word_value(n, oracle::random_word(rng, n, 6));
    const HoughtonElem b = word_value(n, oracle::random_word(rng, n, 6));
    const HoughtonElem c = word_value(n, oracle::random_word(rng, n, 6));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(inverse(a * b), inverse(b) * inverse(a));
    EXPECT_EQ(a * HoughtonElem(n), a);
    EXPECT_EQ(conjugate(a, b), inverse(b) * a * b);
  }
}
