#include "houghton/normalizer.hpp"

#include <stdexcept>

namespace houghton {

NormElem::NormElem(HoughtonElem g, RayPerm sigma) : g_(std::move(g)), sigma_(std::move(sigma)) {
  if (g_.n() != sigma_.n()) throw std::invalid_argument("normalizer element with mismatched ray counts");
}

NormElem operator*(const NormElem& a, const NormElem& b) {
  if (a.n() != b.n()) throw std::invalid_argument("normalizer elements for different n");
  return {a.g() * relabel(b.g(), inverse(a.sigma())), a.sigma() * b.sigma()};
}

NormElem inverse(const NormElem& w) {
  return {relabel(inverse(w.g()), w.sigma()), inverse(w.sigma())};
}

HoughtonElem aut_apply(const NormElem& w, const HoughtonElem& x) {
  if (w.n() != x.n()) throw std::invalid_argument("automorphism and element for different n");
  return relabel(conjugate(x, w.g()), w.sigma());
}

FinitePerm aut_apply(const NormElem& w, const FinitePerm& t) {
  if (w.n() != t.n()) throw std::invalid_argument("automorphism and element for different n");
  return relabel(t, [&](const Point& p) { return w(p); });
}

SwappedFactors factor_swap(const NormElem& w) {
  return {w.sigma(), relabel(w.g(), w.sigma())};
}

IntMatrix abelianization_matrix(const RayPerm& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::invalid_argument("abelianization matrix needs n >= 2");
  IntMatrix m = IntMatrix::Zero(n - 1, n - 1);
  // pi(g_i) = e_{i+1} - e_1 maps to e_{sigma(i+1)} - e_{sigma(1)}; the
  // coordinate on pi(g_j) of a zero-sum vector is its entry j+1.
  for (int i = 1; i <= n - 1; ++i) {
    if (const int hi = sigma(i + 1); hi >= 2) m(hi - 2, i - 1) += 1;
    if (const int lo = sigma(1); lo >= 2) m(lo - 2, i - 1) -= 1;
  }
  return m;
}

bool has_eigenvalue_one(const IntMatrix& m) {
  const IntMatrix shifted = m - IntMatrix::Identity(m.rows(), m.cols());
  return exact_determinant(shifted) == 0;
}

bool r_bar_infinite(const NormElem& w) {
  return has_eigenvalue_one(abelianization_matrix(w.sigma()));
}

std::string to_string(const NormElem& w) {
  std::string out = to_string(w.g());
  if (!w.sigma().is_identity()) out += ";" + to_string(w.sigma());
  return out;
}

}  // namespace houghton
