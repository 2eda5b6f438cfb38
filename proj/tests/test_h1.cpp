#include <random>

#include <gtest/gtest.h>

#include "houghton/shift.hpp"
#include "houghton/twisted.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

FinitePerm zt(Index a, Index b) { return FinitePerm::transposition(1, shift_point(a), shift_point(b)); }

FinitePerm pos_cycle(std::initializer_list<Index> positions) {
  std::vector<Point> pts;
  for (Index p : positions) pts.push_back({1, p});
  return FinitePerm::cycle(1, pts);
}

bool conjugate_by_brute_force(const FinitePerm& a, const FinitePerm& b,
                              const std::vector<Point>& points) {
  for (const auto& h : oracle::all_permutations(1, points))
    if (h * a * inverse(h) == b) return true;
  return false;
}

}  // namespace

TEST(ShiftCoordinates, Interleaving) {
  EXPECT_EQ(shift_point(0), (Point{1, 1}));
  EXPECT_EQ(shift_point(2), (Point{1, 5}));
  EXPECT_EQ(shift_point(-1), (Point{1, 2}));
  EXPECT_EQ(shift_point(-3), (Point{1, 6}));
  for (Index z = -30; z <= 30; ++z) EXPECT_EQ(shift_coordinate(shift_point(z)), z);
  for (Index p = 1; p <= 40; ++p) EXPECT_EQ(shift_point(shift_coordinate({1, p})), (Point{1, p}));
}

TEST(ShiftElem, PureShiftMovesCoordinates) {
  const ShiftElem g = ShiftElem::pure_shift();
  for (Index z = -10; z <= 10; ++z) EXPECT_EQ(g(shift_point(z)), shift_point(z + 1));
  EXPECT_EQ(shift_conjugate(zt(0, 2), 1), zt(1, 3));
  EXPECT_EQ(conjugate(zt(-2, 4), g), zt(-1, 5));
  EXPECT_EQ(shift_conjugate(zt(0, 2), -3), zt(-3, -1));
}

TEST(ShiftElem, ProductsAndInverses) {
  const ShiftElem a(pos_cycle({1, 2, 3}), 2);
  const ShiftElem b(pos_cycle({2, 4}), -1);
  const ShiftElem ab = a * b;
  for (Index z = -12; z <= 12; ++z) {
    EXPECT_EQ(ab(shift_point(z)), b(a(shift_point(z))));
    EXPECT_EQ(inverse(a)(a(shift_point(z))), shift_point(z));
  }
  EXPECT_EQ(ab.power(), 1);
}

TEST(ImageChain, SmallCases) {
  const ShiftElem g = ShiftElem::pure_shift();
  const FinitePerm x = zt(0, 2);
  EXPECT_TRUE(h1_image_class_chain(x, g, 0).is_identity());
  EXPECT_EQ(h1_image_class_chain(x, g, 1), inverse(x));
  FinitePerm y = x;
  for (int i = 0; i < 3; ++i) y = conjugate(y, g);
  EXPECT_TRUE(verify_witness(g, x, y, h1_image_class_chain(x, g, 3)));
}

TEST(ImageChain, VerifiesForGeneralShiftElements) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    const ShiftElem psi(oracle::random_cycle(rng, 1, 1, 2 + trial % 3, 7),
                        static_cast<Index>(trial % 5) - 2);
    const FinitePerm x = oracle::random_cycle(rng, 1, 1, 2 + trial % 4, 9);
    const Index m = static_cast<Index>(trial % 13) - 6;
    FinitePerm y = x;
    for (Index i = 0; i < std::abs(m); ++i) y = conjugate(y, m > 0 ? psi : inverse(psi));
    EXPECT_TRUE(verify_witness(psi, x, y, h1_image_class_chain(x, psi, m)));
  }
}

TEST(H1Transpositions, GapDecides) {
  const ShiftElem g = ShiftElem::pure_shift();
  for (Index l = 1; l <= 4; ++l)
    for (Index m = -5; m <= 5; ++m) {
      const auto r = h1_decide_transpositions(zt(0, l), zt(m, m + l), g);
      ASSERT_TRUE(is_equivalent(r));
      EXPECT_TRUE(verify_witness(g, zt(0, l), zt(m, m + l),
                                 as_finite_perm(std::get<Equivalent>(r).witness)));
    }
  const auto d = h1_decide_transpositions(zt(0, 2), zt(0, 3), g);
  ASSERT_TRUE(is_distinct(d));
  const Certificate expected{InvariantKind::Gap, {2}, {3}};
  EXPECT_EQ(std::get<Distinct>(d).certificate, expected);
  EXPECT_EQ(to_string(expected), "gap=2,3");
  const auto same = h1_decide_transpositions(zt(-1, 3), zt(3, -1), g);
  ASSERT_TRUE(is_equivalent(same));
  EXPECT_TRUE(std::get<Equivalent>(same).witness.is_identity());
}

TEST(H1Transpositions, RejectsOtherInputs) {
  EXPECT_THROW(h1_decide_transpositions(zt(0, 1), zt(0, 1), ShiftElem::pure_shift(2)),
               std::invalid_argument);
  EXPECT_THROW(h1_decide_transpositions(zt(0, 1), pos_cycle({1, 2, 3}), ShiftElem::pure_shift()),
               std::invalid_argument);
}

TEST(H1Disjoint, CycleTypeDecides) {
  const FinitePerm gamma = pos_cycle({1, 2, 3});
  const auto eq = h1_decide_disjoint(pos_cycle({4, 5}), pos_cycle({6, 9}), gamma);
  ASSERT_TRUE(is_equivalent(eq));
  const FinitePerm h = as_finite_perm(std::get<Equivalent>(eq).witness);
  EXPECT_TRUE(verify_witness(ShiftElem(gamma, 0), pos_cycle({4, 5}), pos_cycle({6, 9}), h));
  EXPECT_EQ(conjugate(h, ShiftElem(gamma, 0)), h);

  const auto ne = h1_decide_disjoint(pos_cycle({4, 5}), pos_cycle({4, 5, 6}), gamma);
  ASSERT_TRUE(is_distinct(ne));
  const Certificate expected{InvariantKind::CycleType, {2}, {3}};
  EXPECT_EQ(std::get<Distinct>(ne).certificate, expected);

  EXPECT_TRUE(is_equivalent(h1_decide_disjoint(FinitePerm(1), FinitePerm(1), gamma)));
  EXPECT_THROW(h1_decide_disjoint(pos_cycle({3, 4}), pos_cycle({5, 6}), gamma),
               std::invalid_argument);
}

TEST(H1Disjoint, AgreesWithBruteForceConjugacy) {
  const FinitePerm gamma = pos_cycle({1, 2});
  const std::vector<Point> pts{{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}};
  const auto all = oracle::all_permutations(1, pts);
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const FinitePerm a = all[pick(rng)], b = all[pick(rng)];
    const auto r = h1_decide_disjoint(a, b, gamma);
    EXPECT_EQ(is_equivalent(r), conjugate_by_brute_force(a, b, pts));
    if (is_equivalent(r))
      EXPECT_TRUE(verify_witness(ShiftElem(gamma, 0), a, b,
                                 as_finite_perm(std::get<Equivalent>(r).witness)));
  }
}

TEST(H1Profile, SeparatesCertifiedClasses) {
  const ShiftElem g = ShiftElem::pure_shift();
  EXPECT_NE(h1_coset_profile(g, zt(0, 1)), h1_coset_profile(g, zt(0, 2)));
  EXPECT_EQ(h1_coset_profile(g, zt(0, 2)), h1_coset_profile(g, zt(-4, -2)));
  const ShiftElem f(pos_cycle({1, 2, 3}), 0);
  EXPECT_EQ(h1_coset_profile(f, FinitePerm(1)), (std::map<Index, Index>{{3, 1}}));
}

TEST(H1Profile, ConstantOnWitnessedClasses) {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const ShiftElem psi(oracle::random_cycle(rng, 1, 1, 2 + trial % 2, 6),
                        static_cast<Index>(trial % 3) - 1);
    const FinitePerm x = oracle::random_cycle(rng, 1, 1, 2 + trial % 3, 8);
    const FinitePerm h = oracle::random_cycle(rng, 1, 1, 3, 8);
    const FinitePerm y = h * x * inverse(conjugate(h, psi));
    EXPECT_EQ(h1_coset_profile(psi, x), h1_coset_profile(psi, y));
  }
}

TEST(H1Certificate, PureShift) {
  const auto cert = h1_infinity_certificate(ShiftElem::pure_shift(), 4);
  ASSERT_EQ(cert.representatives.size(), 4u);
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(cert.representatives[d - 1], zt(0, static_cast<Index>(d)));
  EXPECT_EQ(cert.pairs.size(), 6u);
  EXPECT_TRUE(check_certificate(cert).empty());
}

TEST(H1Certificate, FiniteThreeCycle) {
  const ShiftElem psi(pos_cycle({1, 2, 3}), 0);
  const auto cert = h1_infinity_certificate(psi, 3);
  ASSERT_EQ(cert.representatives.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(cert.representatives[i].support_size(), i + 2);
    EXPECT_EQ(support(cert.representatives[i]).front(), (Point{1, 4}));
  }
  EXPECT_TRUE(check_certificate(cert).empty());
}

TEST(H1Certificate, MixedElementsAndSingleClass) {
  for (Index k : {-2, 1, 3}) {
    const auto cert = h1_infinity_certificate(ShiftElem(pos_cycle({1, 4, 2}), k), 5);
    const auto problems = check_certificate(cert);
    EXPECT_TRUE(problems.empty()) << k << ": " << problems.front();
  }
  const auto one = h1_infinity_certificate(ShiftElem::pure_shift(), 1);
  EXPECT_EQ(one.representatives.size(), 1u);
  EXPECT_TRUE(one.pairs.empty());
  EXPECT_TRUE(check_certificate(one).empty());
}

TEST(H1Certificate, TamperingIsRejected) {
  auto cert = h1_infinity_certificate(ShiftElem::pure_shift(), 4);
  cert.pairs[2].certificate.first = {5};
  EXPECT_FALSE(check_certificate(cert).empty());
  auto dup = h1_infinity_certificate(ShiftElem(pos_cycle({1, 2, 3}), 0), 3);
  dup.base[1] = dup.base[0];
  dup.representatives[1] = dup.representatives[0];
  EXPECT_FALSE(check_certificate(dup).empty());
}
