#include <gtest/gtest.h>

#include "houghton/presentation.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

const RelationCheck* find_relation(const PresentationReport& r, const std::string& prefix) {
  for (const auto& rel : r.relations)
    if (rel.relation.rfind(prefix, 0) == 0) return &rel;
  return nullptr;
}

}  // namespace

TEST(Presentation, AllFamiliesHoldForThreeToFiveRays) {
  for (int n = 3; n <= 5; ++n) {
    const auto report = check_presentation(n);
    EXPECT_EQ(report.relations.size(), 5u);
    EXPECT_TRUE(report.all_passed()) << "n = " << n;
  }
}

TEST(Presentation, TwoRayFamilyHolds) {
  const auto report = check_presentation(2, 10);
  EXPECT_TRUE(report.all_passed());
  const auto* fam = find_relation(report, "[alpha, alpha^(g1^k)]");
  ASSERT_NE(fam, nullptr);
  EXPECT_EQ(fam->instances, 18);
}

TEST(Presentation, CorruptedGeneratorIsCaught) {
  GeneratorSet gens = GeneratorSet::standard(3);
  gens.g[0] = inverse(gens.g[0]);
  const auto report = check_presentation(gens);
  EXPECT_FALSE(report.all_passed());
  const auto* comm = find_relation(report, "alpha = [g_i, g_j]");
  ASSERT_NE(comm, nullptr);
  EXPECT_FALSE(comm->passed);
}

TEST(Presentation, CorruptedAlphaIsCaught) {
  GeneratorSet gens = GeneratorSet::standard(2);
  gens.alpha = HoughtonElem::from_finite_perm(FinitePerm::transposition(2, {1, 1}, {1, 3}));
  EXPECT_FALSE(check_presentation(gens).all_passed());
}

TEST(Presentation, RejectsOneRay) {
  EXPECT_THROW(check_presentation(1), std::invalid_argument);
}

TEST(Presentation, RelatorsHoldPointwise) {
  using oracle::Letter;
  using oracle::Word;
  const Letter a{0, false};
  const Letter g1{1, false}, g1i{1, true}, g2{2, false}, g2i{2, true};
  // [g1, g2] alpha^-1
  EXPECT_TRUE(oracle::words_agree(3, {g1, g2, g1i, g2i, a}, {}, 20));
  // (alpha alpha^g1)^3
  Word w;
  for (int i = 0; i < 3; ++i) w.insert(w.end(), {a, g1i, a, g1});
  EXPECT_TRUE(oracle::words_agree(2, w, {}, 20));
  // [alpha, alpha^(g1^2)]
  const Word conj{g1i, g1i, a, g1, g1};
  Word c{a};
  c.insert(c.end(), conj.begin(), conj.end());
  c.push_back(a);
  c.insert(c.end(), conj.begin(), conj.end());
  EXPECT_TRUE(oracle::words_agree(2, c, {}, 20));
}
