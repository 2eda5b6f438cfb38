#include "houghton/decide.hpp"

#include <algorithm>
#include <stdexcept>

namespace houghton {

namespace {

Index reach_of(const FinitePerm& f) {
  Index m = 0;
  for (const auto& [src, dst] : f.entries()) m = std::max(m, src.pos);
  return m;
}

std::optional<int> sole_ray(const FinitePerm& f) {
  if (f.is_identity()) return std::nullopt;
  const int ray = f.entries().front().first.ray;
  for (const auto& [src, dst] : f.entries())
    if (src.ray != ray) return std::nullopt;
  return ray;
}

// Ordinary conjugacy of finitary u, v: h with v = h u h^-1, or the cycle types.
TCResult plain_conjugacy(const FinitePerm& u, const FinitePerm& v) {
  const CycleType tu = cycle_type(u);
  const CycleType tv = cycle_type(v);
  if (tu != tv) return Distinct{{InvariantKind::CycleType, tu.lengths(), tv.lengths()}};
  return Equivalent{HoughtonElem::from_finite_perm(inverse(matching_conjugator(u, v)))};
}

SearchLimits limits_of(const DecideOptions& opts) {
  return {opts.support_limit, opts.node_ceiling};
}

}  // namespace

TCResult decide_twisted(const NormElem& w, const HoughtonElem& x, const HoughtonElem& y,
                        const DecideOptions& opts) {
  const int n = w.n();
  if (x.n() != n || y.n() != n) throw std::invalid_argument("decision inputs for different n");
  if (x == y) return Equivalent{HoughtonElem(n)};

  const auto [sigma, gprime] = factor_swap(w);
  const HoughtonElem ginv = inverse(gprime);
  const HoughtonElem x0 = x * ginv;
  const HoughtonElem y0 = y * ginv;
  if (!is_fsym(x0) || !is_fsym(y0)) {
    if (!is_fsym(x) || !is_fsym(y)) return Unknown{0};
    // Finitary inputs stay finitary under mu(w), so search in R[mu(w)] itself.
    const Index depth = std::max({opts.box_depth, reach_of(as_finite_perm(x)),
                                  reach_of(as_finite_perm(y)), Index{2}});
    const auto found = orbit_search(w, x, y, TruncBox(n, depth), limits_of(opts));
    if (found.witness) return Equivalent{*found.witness};
    return Unknown{static_cast<Index>(found.support_limit)};
  }
  const FinitePerm tau = as_finite_perm(x0);
  const FinitePerm tau_prime = as_finite_perm(y0);

  if (sigma.is_identity()) {
    // mu(sigma) is trivial: twisted classes are conjugacy classes, and a
    // finitary pair is conjugate in H_n exactly when the cycle types agree.
    auto r = plain_conjugacy(tau, tau_prime);
    if (const auto* e = std::get_if<Equivalent>(&r); e && !verify_witness(w, x, y, e->witness))
      throw std::logic_error("conjugator fails the twisted relation");
    return r;
  }

  if (is_single_cycle(tau) && is_single_cycle(tau_prime)) {
    const auto r = sole_ray(tau);
    if (r && sole_ray(tau_prime) == r) {
      const RayPerm sigma_cycle = RayPerm::from_cycle(n, cycle_through(sigma, *r));
      if (tau.support_size() == tau_prime.support_size()) {
        const HoughtonElem h = build_witness_equal_cycles(tau, tau_prime, sigma_cycle);
        if (verify_witness(w, x, y, h)) return Equivalent{h};
      } else if (is_cycle(sigma) ||
                 coset_cycle_profile(sigma, tau) != coset_cycle_profile(sigma, tau_prime)) {
        return Distinct{{InvariantKind::CycleLength,
                         {static_cast<Index>(tau.support_size())},
                         {static_cast<Index>(tau_prime.support_size())}}};
      }
    }
  }

  const Index depth = std::max({opts.box_depth, reach_of(tau), reach_of(tau_prime), Index{2}});
  const auto found =
      orbit_search(NormElem(sigma), x0, y0, TruncBox(n, depth), limits_of(opts));
  if (found.witness) {
    if (!verify_witness(w, x, y, *found.witness))
      throw std::logic_error("transported witness fails the twisted relation");
    return Equivalent{*found.witness};
  }
  return Unknown{static_cast<Index>(found.support_limit)};
}

TCResult decide_twisted(const ShiftElem& psi, const FinitePerm& x, const FinitePerm& y,
                        const DecideOptions& opts) {
  if (x.n() != 1 || y.n() != 1) throw std::invalid_argument("expected elements of FSym_1");
  if (x == y) return Equivalent{HoughtonElem(1)};

  const Index k = psi.power();
  if (k == 0) {
    // y = h x f^-1 h^-1 f, i.e. y f^-1 = h (x f^-1) h^-1.
    const FinitePerm finv = inverse(psi.finite());
    auto r = plain_conjugacy(x * finv, y * finv);
    if (const auto* e = std::get_if<Equivalent>(&r);
        e && !verify_witness(psi, x, y, as_finite_perm(e->witness)))
      throw std::logic_error("conjugator fails the twisted relation");
    return r;
  }

  const FinitePerm fprime = shift_conjugate(psi.finite(), k);
  const FinitePerm finv = inverse(fprime);
  const FinitePerm tau = x * finv;
  const FinitePerm tau_prime = y * finv;
  if (tau.support_size() == 2 && tau_prime.support_size() == 2) {
    if (k == 1) {
      auto r = h1_decide_transpositions(tau, tau_prime, ShiftElem::pure_shift());
      if (const auto* e = std::get_if<Equivalent>(&r);
          e && !verify_witness(psi, x, y, as_finite_perm(e->witness)))
        throw std::logic_error("transported witness fails the twisted relation");
      return r;
    }
    const ShiftElem base = ShiftElem::pure_shift(k);
    if (h1_coset_profile(base, tau) != h1_coset_profile(base, tau_prime)) {
      auto gap = [](const FinitePerm& t) {
        return std::abs(shift_coordinate(t.entries()[0].first) -
                        shift_coordinate(t.entries()[1].first));
      };
      return Distinct{{InvariantKind::Gap, {gap(tau)}, {gap(tau_prime)}}};
    }
  }

  Index depth = std::max(opts.box_depth, Index{2});
  for (const auto& f : {x, y})
    for (const auto& [src, dst] : f.entries()) depth = std::max(depth, src.pos + 1);
  const auto found = orbit_search(psi, x, y, TruncBox(1, depth), limits_of(opts));
  if (found.witness) return Equivalent{*found.witness};
  return Unknown{static_cast<Index>(found.support_limit)};
}

}  // namespace houghton
