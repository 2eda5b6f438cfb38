#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "houghton/normalizer.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

HoughtonElem random_elem(std::mt19937_64& rng, int n, std::size_t len = 6) {
  HoughtonElem g(n);
  for (const auto& l : oracle::random_word(rng, n, len)) {
    const HoughtonElem x = l.gen == 0 ? gen_alpha(n) : gen_g(n, l.gen);
    g = g * (l.inverse ? inverse(x) : x);
  }
  return g;
}

NormElem random_norm(std::mt19937_64& rng, int n) {
  return {random_elem(rng, n), oracle::random_ray_perm(rng, n)};
}

IntMatrix mat(int rows, std::initializer_list<Index> entries) {
  IntMatrix m(rows, rows);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < rows; ++c) m(r, c) = *it++;
  return m;
}

}  // namespace

TEST(NormElem, EmbeddedSubgroups) {
  const HoughtonElem g = gen_g(3, 1), h = gen_g(3, 2);
  EXPECT_EQ(NormElem(g) * NormElem(h), NormElem(g * h));
  const RayPerm s = RayPerm::transposition(3, 1, 2), t = RayPerm::from_cycle(3, {1, 2, 3});
  EXPECT_EQ(NormElem(s) * NormElem(t), NormElem(s * t));
}

TEST(NormElem, InverseAndAction) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const NormElem a = random_norm(rng, n), b = random_norm(rng, n);
    EXPECT_TRUE((a * inverse(a)).is_identity());
    const NormElem ab = a * b;
    for (int r = 1; r <= n; ++r)
      for (Index p = 1; p <= 15; ++p) EXPECT_EQ(ab({r, p}), b(a({r, p})));
  }
}

TEST(NormElem, AutomorphismExamples) {
  const HoughtonElem a = gen_alpha(2);
  EXPECT_EQ(aut_apply(NormElem(2), a), a);
  const NormElem s12(RayPerm::transposition(2, 1, 2));
  EXPECT_EQ(as_finite_perm(aut_apply(s12, a)), FinitePerm::transposition(2, {2, 1}, {2, 2}));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(aut_apply(NormElem(gen_g(4, i)), gen_g(4, i)), gen_g(4, i));
}

TEST(NormElem, AutomorphismIsConjugationPointwise) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const NormElem w = random_norm(rng, n), v = random_norm(rng, n);
    const HoughtonElem x = random_elem(rng, n), y = random_elem(rng, n);
    const HoughtonElem xw = aut_apply(w, x);
    const NormElem winv = inverse(w);
    for (int r = 1; r <= n; ++r)
      for (Index p = 1; p <= 15; ++p) EXPECT_EQ(xw({r, p}), w(x(winv({r, p}))));
    EXPECT_EQ(aut_apply(w, x * y), xw * aut_apply(w, y));
    EXPECT_EQ(aut_apply(w * v, x), aut_apply(v, xw));
    const FinitePerm t = FinitePerm::transposition(n, {1, 2}, {n, 3});
    EXPECT_EQ(HoughtonElem::from_finite_perm(aut_apply(w, t)),
              aut_apply(w, HoughtonElem::from_finite_perm(t)));
  }
}

TEST(NormElem, FactorSwap) {
  const HoughtonElem g = gen_g(3, 2);
  const auto a = factor_swap(NormElem(g));
  EXPECT_TRUE(a.sigma.is_identity());
  EXPECT_EQ(a.gprime, g);
  const RayPerm s = RayPerm::from_cycle(3, {1, 3});
  const auto b = factor_swap(NormElem(s));
  EXPECT_EQ(b.sigma, s);
  EXPECT_TRUE(b.gprime.is_identity());

  const RayPerm s12 = RayPerm::transposition(2, 1, 2);
  const NormElem w(gen_g(2, 1), s12);
  const auto c = factor_swap(w);
  EXPECT_EQ(c.gprime, relabel(gen_g(2, 1), s12));
  for (int r = 1; r <= 2; ++r)
    for (Index p = 1; p <= 10; ++p) EXPECT_EQ(w({r, p}), c.gprime(apply(c.sigma, {r, p})));
}

TEST(Abelianization, Examples) {
  EXPECT_EQ(abelianization_matrix(RayPerm(4)), IntMatrix::Identity(3, 3));
  EXPECT_EQ(abelianization_matrix(RayPerm::from_cycle(3, {1, 2, 3})), mat(2, {-1, -1, 1, 0}));
  EXPECT_EQ(abelianization_matrix(RayPerm::transposition(3, 1, 2)), mat(2, {-1, -1, 0, 1}));
  EXPECT_TRUE(has_eigenvalue_one(IntMatrix::Identity(3, 3)));
  EXPECT_FALSE(has_eigenvalue_one(mat(2, {-1, -1, 1, 0})));
  EXPECT_EQ(exact_determinant(IntMatrix(mat(2, {-1, -1, 1, 0}) - IntMatrix::Identity(2, 2))), 3);
  EXPECT_TRUE(has_eigenvalue_one(mat(2, {-1, -1, 0, 1})));
}

TEST(Abelianization, ColumnsAreImagesOfGenerators) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
      const RayPerm s(images);
      const IntMatrix m = abelianization_matrix(s);
      for (int i = 1; i < n; ++i)
        EXPECT_EQ(IntVector(m.col(i - 1)), pi_reduced(aut_apply(NormElem(s), gen_g(n, i))));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

namespace {

std::vector<RayPerm> all_ray_perms(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<RayPerm> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

// sigma tau acts as sigma first, so its matrix is M(tau) M(sigma)
TEST(Abelianization, CompositionReversesOrder) {
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_ray_perms(n);
    std::vector<IntMatrix> mats;
    for (const auto& s : perms) mats.push_back(abelianization_matrix(s));
    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::size_t j = 0; j < perms.size(); ++j)
        ASSERT_EQ(abelianization_matrix(perms[i] * perms[j]), IntMatrix(mats[j] * mats[i]))
            << to_string(perms[i]) << " " << to_string(perms[j]);
  }
}

TEST(Abelianization, Unimodular) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : all_ray_perms(n)) {
      const Index d = exact_determinant(abelianization_matrix(s));
      EXPECT_TRUE(d == 1 || d == -1) << to_string(s);
    }
}

TEST(Abelianization, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<Index> entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 5;
    IntMatrix m(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m(r, c) = entry(rng);
    if (trial % 7 == 0) m.col(0) = m.col(k - 1);
    EXPECT_EQ(exact_determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Abelianization, EigenvalueOneForNormalizerElements) {
  EXPECT_TRUE(r_bar_infinite(NormElem(3)));
  EXPECT_FALSE(r_bar_infinite(NormElem(gen_g(3, 1), RayPerm::from_cycle(3, {1, 2, 3}))));
  EXPECT_TRUE(r_bar_infinite(NormElem(gen_g(3, 1), RayPerm::transposition(3, 1, 2))));
}

TEST(Abelianization, OnlyFullCyclesAvoidEigenvalueOne) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
      const RayPerm s(images);
      EXPECT_EQ(has_eigenvalue_one(abelianization_matrix(s)), !is_ncycle(s)) << to_string(s);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(NormElem, Formatting) {
  EXPECT_EQ(to_string(NormElem(gen_g(3, 1), RayPerm::from_cycle(3, {1, 2, 3}))),
            "T[-1,1,0]{1.1->2.1};rho[2,3,1]");
  EXPECT_EQ(to_string(NormElem(gen_g(2, 1))), "T[-1,1]{1.1->2.1}");
}
