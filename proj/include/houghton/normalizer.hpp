#pragma once

#include <string>

#include "houghton/element.hpp"
#include "houghton/linalg.hpp"

namespace houghton {

/// An element g*sigma of the normalizer H_n x| Sigma_n, acting on X_n by
/// P -> ((P)g)sigma. Every automorphism of H_n (n >= 2) is conjugation by
/// one of these.
class NormElem {
 public:
  explicit NormElem(int n) : g_(n), sigma_(n) {}
  NormElem(HoughtonElem g, RayPerm sigma);
  explicit NormElem(HoughtonElem g) : NormElem(g, RayPerm(g.n())) {}
  explicit NormElem(RayPerm sigma) : NormElem(HoughtonElem(sigma.n()), sigma) {}

  int n() const { return g_.n(); }
  const HoughtonElem& g() const { return g_; }
  const RayPerm& sigma() const { return sigma_; }
  bool is_identity() const { return g_.is_identity() && sigma_.is_identity(); }

  Point operator()(const Point& p) const { return apply(sigma_, g_(p)); }

  friend bool operator==(const NormElem&, const NormElem&) = default;

 private:
  HoughtonElem g_;
  RayPerm sigma_;
};

/// (g1 s1)(g2 s2) = g1 g2^(s1^-1) s1 s2.
NormElem operator*(const NormElem& a, const NormElem& b);
NormElem inverse(const NormElem& w);

/// mu(w)(x) = x^w = w^-1 x w.
HoughtonElem aut_apply(const NormElem& w, const HoughtonElem& x);
/// t^w for a finitary permutation (stays finitary).
FinitePerm aut_apply(const NormElem& w, const FinitePerm& t);

struct SwappedFactors {
  RayPerm sigma;
  HoughtonElem gprime;
};

/// Rewrites g sigma as sigma g' with g' = g^sigma.
SwappedFactors factor_swap(const NormElem& w);

/// Integer matrix of the automorphism induced by mu(sigma) on
/// Z^{n-1} = <pi(g_1), ..., pi(g_{n-1})>. Column i holds the coordinates of
/// pi(g_i^sigma), so a column vector c maps to M c.
IntMatrix abelianization_matrix(const RayPerm& sigma);
bool has_eigenvalue_one(const IntMatrix& m);
/// True when the induced automorphism of the abelianization has eigenvalue
/// one, which forces infinitely many twisted classes.
bool r_bar_infinite(const NormElem& w);

/// "T[...]{...};rho[...]"; the ray part is omitted when sigma is trivial.
std::string to_string(const NormElem& w);

}  // namespace houghton
