#include "houghton/twisted.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace houghton {

namespace {

std::optional<int> common_ray(const FinitePerm& f) {
  if (f.is_identity()) return std::nullopt;
  const int ray = f.entries().front().first.ray;
  for (const auto& [src, dst] : f.entries())
    if (src.ray != ray) return std::nullopt;
  return ray;
}

Index max_pos(const FinitePerm& f) {
  Index m = 0;
  for (const auto& [src, dst] : f.entries()) m = std::max(m, src.pos);
  return m;
}

std::string join(const std::vector<Index>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<Index> as_lengths(const CycleType& t) { return t.lengths(); }

// (p_1 q_1 p_2 q_2 ... p_m q_m) for disjoint m-cycles tau = (p_i), tau' = (q_i).
FinitePerm interleaved_cycle(const FinitePerm& tau, const FinitePerm& tau_prime) {
  const auto p = cycle_decomposition(tau).front();
  const auto q = cycle_decomposition(tau_prime).front();
  std::vector<Point> pts;
  pts.reserve(p.size() * 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    pts.push_back(p[i]);
    pts.push_back(q[i]);
  }
  return FinitePerm::cycle(tau.n(), pts);
}

bool disjoint_supports(const FinitePerm& a, const FinitePerm& b) {
  const auto sa = support(a);
  const auto sb = support(b);
  std::vector<Point> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
  return both.empty();
}

void require_same_ray_cycles(const FinitePerm& tau, const FinitePerm& tau_prime,
                             const RayPerm& sigma) {
  if (tau.n() != sigma.n() || tau_prime.n() != sigma.n())
    throw std::invalid_argument("cycles and ray permutation for different n");
  if (!is_cycle(sigma)) throw std::invalid_argument("sigma must have at most one nontrivial cycle");
  if (!is_single_cycle(tau) || !is_single_cycle(tau_prime))
    throw std::invalid_argument("expected single cycles");
  const auto r = common_ray(tau);
  if (!r || common_ray(tau_prime) != r)
    throw std::invalid_argument("cycles must lie on one common ray");
}

HoughtonElem build_disjoint(const FinitePerm& tau, const FinitePerm& tau_prime,
                            const RayPerm& sigma) {
  const int n = sigma.n();
  const int r = *common_ray(tau);
  const FinitePerm h1 = interleaved_cycle(tau, tau_prime);
  if (sigma(r) == r) return HoughtonElem::from_finite_perm(h1);

  // Relabel rays so the sigma-cycle through r becomes (1 2 ... l) with r -> 1.
  const auto cyc = cycle_through(sigma, r);
  const int l = static_cast<int>(cyc.size());
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int k = 0; k < l; ++k) {
    images[static_cast<std::size_t>(cyc[static_cast<std::size_t>(k)] - 1)] = k + 1;
    used[static_cast<std::size_t>(cyc[static_cast<std::size_t>(k)])] = true;
  }
  int next = l + 1;
  for (int ray = 1; ray <= n; ++ray)
    if (!used[static_cast<std::size_t>(ray)]) images[static_cast<std::size_t>(ray - 1)] = next++;
  const RayPerm rho(images);
  const RayPerm s = inverse(rho) * sigma * rho;

  const FinitePerm base = relabel(h1, rho);
  FinitePerm h(n);
  RayPerm sk(n);
  for (int k = 0; k < l; ++k) {
    h = relabel(base, sk) * h;
    sk = sk * s;
  }
  return HoughtonElem::from_finite_perm(relabel(h, inverse(rho)));
}

}  // namespace

std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::CycleLength: return "cycle-length";
    case InvariantKind::Gap: return "gap";
    case InvariantKind::CycleType: return "cycle-type";
  }
  return "?";
}

std::string to_string(const Certificate& c) {
  const char* sep = c.kind == InvariantKind::CycleType ? "+" : ",";
  auto side = [&](const std::vector<Index>& v) {
    return v.empty() ? std::string("1") : join(v, sep);
  };
  return to_string(c.kind) + "=" + side(c.first) + "," + side(c.second);
}

bool verify_witness(const NormElem& w, const HoughtonElem& x, const HoughtonElem& y,
                    const HoughtonElem& h) {
  if (x.n() != w.n() || y.n() != w.n() || h.n() != w.n()) return false;
  return y == h * x * inverse(aut_apply(w, h));
}

bool verify_witness(const ShiftElem& psi, const FinitePerm& x, const FinitePerm& y,
                    const FinitePerm& h) {
  if (x.n() != 1 || y.n() != 1 || h.n() != 1) return false;
  return y == h * x * inverse(conjugate(h, psi));
}

NormElem twisted_to_coset(const HoughtonElem& x, const NormElem& w) {
  return w * NormElem(inverse(x));
}

NormElem coset_conjugate(const NormElem& v, const HoughtonElem& h) {
  const NormElem hh(h);
  return inverse(hh) * v * hh;
}

HoughtonElem transport_class(const HoughtonElem& x, const HoughtonElem& gprime) {
  return x * gprime;
}

HoughtonElem build_witness_equal_cycles(const FinitePerm& tau, const FinitePerm& tau_prime,
                                        const RayPerm& sigma) {
  require_same_ray_cycles(tau, tau_prime, sigma);
  if (cycle_type(tau) != cycle_type(tau_prime))
    throw std::invalid_argument("cycles of different lengths are not twisted-conjugate");
  const int n = sigma.n();
  if (tau == tau_prime) return HoughtonElem(n);

  HoughtonElem h(n);
  if (disjoint_supports(tau, tau_prime)) {
    h = build_disjoint(tau, tau_prime, sigma);
  } else {
    const int r = *common_ray(tau);
    const Index top = std::max(max_pos(tau), max_pos(tau_prime));
    std::vector<Point> pts;
    for (std::size_t i = 1; i <= tau.support_size(); ++i)
      pts.push_back({r, top + static_cast<Index>(i)});
    const FinitePerm mid = FinitePerm::cycle(n, pts);
    h = build_disjoint(mid, tau_prime, sigma) * build_disjoint(tau, mid, sigma);
  }
  const NormElem w(sigma);
  if (!verify_witness(w, HoughtonElem::from_finite_perm(tau),
                      HoughtonElem::from_finite_perm(tau_prime), h))
    throw std::logic_error("constructed witness fails the twisted relation");
  return h;
}

TCResult decide_cycles_same_ray(const FinitePerm& tau, const FinitePerm& tau_prime,
                                const RayPerm& sigma) {
  require_same_ray_cycles(tau, tau_prime, sigma);
  const auto m = static_cast<Index>(tau.support_size());
  const auto mp = static_cast<Index>(tau_prime.support_size());
  if (m == mp) return Equivalent{build_witness_equal_cycles(tau, tau_prime, sigma)};
  return Distinct{{InvariantKind::CycleLength, {m}, {mp}}};
}

std::map<Index, Index> coset_cycle_profile(const RayPerm& sigma, const FinitePerm& x) {
  if (x.n() != sigma.n()) throw std::invalid_argument("profile for mismatched n");
  const RayPerm sinv = inverse(sigma);
  const FinitePerm xinv = inverse(x);
  const auto generic = orbit_lengths(sigma);
  const auto limit = static_cast<Index>(x.support_size()) * sigma.n() + 1;
  std::unordered_set<Point, PointHash> seen;
  std::map<Index, Index> profile;
  for (const auto& entry : x.entries()) {
    const Point start = apply(sinv, entry.first);
    if (seen.contains(start)) continue;
    Index len = 0;
    Point p = start;
    do {
      seen.insert(p);
      p = xinv.image(apply(sigma, p));
      ++len;
    } while (p != start && len <= limit);
    if (p != start) throw std::logic_error("coset orbit failed to close");
    if (std::find(generic.begin(), generic.end(), len) == generic.end()) ++profile[len];
  }
  return profile;
}

RInfCertificate rn_infinity_certificate(const NormElem& w, std::size_t count) {
  if (count == 0) throw std::invalid_argument("certificate needs at least one class");
  const int n = w.n();
  const auto [sigma, gprime] = factor_swap(w);
  int ray = 1;
  if (!is_cycle(sigma)) {
    std::size_t best = 0;
    for (int r = 1; r <= n; ++r) {
      const auto len = cycle_through(sigma, r).size();
      if (len > best) {
        best = len;
        ray = r;
      }
    }
  }
  const RayPerm sigma_cycle = RayPerm::from_cycle(n, cycle_through(sigma, ray));

  RInfCertificate cert{w, sigma, gprime, ray, sigma_cycle, {}, {}, {}};
  for (std::size_t m = 2; m < count + 2; ++m) {
    std::vector<Point> pts;
    for (std::size_t p = 1; p <= m; ++p) pts.push_back({ray, static_cast<Index>(p)});
    cert.base.push_back(FinitePerm::cycle(n, pts));
    cert.representatives.push_back(
        transport_class(HoughtonElem::from_finite_perm(cert.base.back()), gprime));
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto r = decide_cycles_same_ray(cert.base[i], cert.base[j], sigma_cycle);
      cert.pairs.push_back({i, j, std::get<Distinct>(r).certificate});
    }
  }
  return cert;
}

std::vector<std::string> check_certificate(const RInfCertificate& cert) {
  std::vector<std::string> problems;
  const int n = cert.w.n();
  const auto swapped = factor_swap(cert.w);
  if (swapped.sigma != cert.sigma || swapped.gprime != cert.gprime)
    problems.push_back("factor swap does not match w");
  if (cert.ray < 1 || cert.ray > n) {
    problems.push_back("ray out of range");
    return problems;
  }
  if (cert.sigma_cycle != RayPerm::from_cycle(n, cycle_through(cert.sigma, cert.ray)))
    problems.push_back("sigma_cycle is not the cycle of sigma through the chosen ray");
  if (!is_cycle(cert.sigma)) {
    const auto lens = orbit_lengths(cert.sigma);
    if (cycle_through(cert.sigma, cert.ray).size() != static_cast<std::size_t>(lens.back()))
      problems.push_back("chosen ray does not lie on a longest sigma-cycle");
  }
  if (cert.representatives.size() != cert.base.size())
    problems.push_back("representative count differs from base count");

  std::vector<std::map<Index, Index>> profiles;
  for (std::size_t i = 0; i < cert.base.size(); ++i) {
    const auto& b = cert.base[i];
    if (!is_single_cycle(b) || common_ray(b) != cert.ray)
      problems.push_back("base " + std::to_string(i) + " is not a cycle on the chosen ray");
    if (i < cert.representatives.size() &&
        cert.representatives[i] != transport_class(HoughtonElem::from_finite_perm(b), cert.gprime))
      problems.push_back("representative " + std::to_string(i) + " is not base * g'");
    profiles.push_back(coset_cycle_profile(cert.sigma, b));
  }
  if (!problems.empty()) return problems;

  const std::size_t k = cert.base.size();
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (const auto& pc : cert.pairs) {
    if (pc.i >= k || pc.j >= k || pc.i >= pc.j) {
      problems.push_back("malformed pair index");
      continue;
    }
    covered.insert({pc.i, pc.j});
    const auto r = decide_cycles_same_ray(cert.base[pc.i], cert.base[pc.j], cert.sigma_cycle);
    const auto* d = std::get_if<Distinct>(&r);
    if (!d || d->certificate != pc.certificate)
      problems.push_back("certificate for pair " + std::to_string(pc.i) + "," +
                         std::to_string(pc.j) + " does not re-derive");
    if (profiles[pc.i] == profiles[pc.j])
      problems.push_back("pair " + std::to_string(pc.i) + "," + std::to_string(pc.j) +
                         " has equal coset profiles");
  }
  if (covered.size() != k * (k - 1) / 2) problems.push_back("not every pair is certified");
  return problems;
}

FinitePerm h1_image_class_chain(const FinitePerm& x, const ShiftElem& psi, Index m) {
  if (x.n() != 1) throw std::invalid_argument("image chain lives in FSym_1");
  if (m < 0) {
    const ShiftElem psi_inv = inverse(psi);
    FinitePerm y = x;
    for (Index i = 0; i < -m; ++i) y = conjugate(y, psi_inv);
    return inverse(h1_image_class_chain(y, psi, -m));
  }
  FinitePerm z = x;
  FinitePerm h(1);
  for (Index i = 0; i < m; ++i) {
    h = inverse(z) * h;
    z = conjugate(z, psi);
  }
  return h;
}

TCResult h1_decide_transpositions(const FinitePerm& tau, const FinitePerm& tau_prime,
                                  const ShiftElem& psi) {
  if (!psi.is_pure_shift()) throw std::invalid_argument("expected the pure shift");
  auto coords = [](const FinitePerm& t) {
    if (t.n() != 1 || t.support_size() != 2) throw std::invalid_argument("expected a transposition of X_1");
    Index a = shift_coordinate(t.entries()[0].first);
    Index b = shift_coordinate(t.entries()[1].first);
    if (a > b) std::swap(a, b);
    return std::pair{a, b};
  };
  const auto [a, b] = coords(tau);
  const auto [c, d] = coords(tau_prime);
  if (b - a != d - c) return Distinct{{InvariantKind::Gap, {b - a}, {d - c}}};
  const FinitePerm h = h1_image_class_chain(tau, psi, c - a);
  if (!verify_witness(psi, tau, tau_prime, h))
    throw std::logic_error("image chain fails the twisted relation");
  return Equivalent{HoughtonElem::from_finite_perm(h)};
}

TCResult h1_decide_disjoint(const FinitePerm& tau, const FinitePerm& tau_prime,
                            const FinitePerm& gamma) {
  if (tau.n() != 1 || tau_prime.n() != 1 || gamma.n() != 1)
    throw std::invalid_argument("expected elements of FSym_1");
  if (!disjoint_supports(tau, gamma) || !disjoint_supports(tau_prime, gamma))
    throw std::invalid_argument("supports must avoid supp(gamma)");
  const CycleType t = cycle_type(tau);
  const CycleType tp = cycle_type(tau_prime);
  if (t != tp) return Distinct{{InvariantKind::CycleType, as_lengths(t), as_lengths(tp)}};
  const FinitePerm h = inverse(matching_conjugator(tau, tau_prime));
  if (!verify_witness(ShiftElem(gamma, 0), tau, tau_prime, h))
    throw std::logic_error("conjugator fails the twisted relation");
  return Equivalent{HoughtonElem::from_finite_perm(h)};
}

std::map<Index, Index> h1_coset_profile(const ShiftElem& psi, const FinitePerm& x) {
  if (x.n() != 1) throw std::invalid_argument("profile expects an element of FSym_1");
  std::map<Index, Index> profile;
  const Index k = psi.power();
  if (k == 0) {
    const CycleType t = cycle_type(psi.finite() * inverse(x));
    for (Index len : t.lengths()) ++profile[len];
    return profile;
  }
  const FinitePerm xinv = inverse(x);
  auto v = [&](Index z) { return shift_coordinate(xinv.image(psi(shift_point(z)))); };

  Index bound = 0;
  std::vector<Index> starts;
  for (const auto& [src, dst] : psi.finite().entries()) {
    bound = std::max(bound, std::abs(shift_coordinate(src)));
    starts.push_back(shift_coordinate(src));
  }
  const ShiftElem psi_inv = inverse(psi);
  for (const auto& [src, dst] : x.entries()) {
    bound = std::max(bound, std::abs(shift_coordinate(src)));
    starts.push_back(shift_coordinate(psi_inv(src)));
  }
  bound += std::abs(k);
  auto escaped = [&](Index z) { return k > 0 ? z > bound : z < -bound; };

  std::set<Index> seen;
  for (Index s : starts) {
    if (seen.contains(s)) continue;
    Index z = s;
    Index len = 0;
    std::vector<Index> path;
    do {
      path.push_back(z);
      z = v(z);
      ++len;
    } while (z != s && !escaped(z));
    seen.insert(path.begin(), path.end());
    if (z == s) ++profile[len];
  }
  return profile;
}

H1Certificate h1_infinity_certificate(const ShiftElem& psi, std::size_t count) {
  if (count == 0) throw std::invalid_argument("certificate needs at least one class");
  const Index k = psi.power();
  H1Certificate cert;
  cert.psi = psi;
  if (k != 0) {
    cert.fprime = shift_conjugate(psi.finite(), k);
    const Index step = std::abs(k);
    for (std::size_t d = 1; d <= count; ++d) {
      cert.base.push_back(FinitePerm::transposition(1, shift_point(0),
                                                    shift_point(step * static_cast<Index>(d))));
      cert.representatives.push_back(cert.base.back() * cert.fprime);
    }
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        cert.pairs.push_back({i, j,
                              {InvariantKind::Gap,
                               {step * static_cast<Index>(i + 1)},
                               {step * static_cast<Index>(j + 1)}}});
  } else {
    const Index top = max_pos(psi.finite());
    for (std::size_t m = 2; m < count + 2; ++m) {
      std::vector<Point> pts;
      for (std::size_t p = 1; p <= m; ++p) pts.push_back({1, top + static_cast<Index>(p)});
      cert.base.push_back(FinitePerm::cycle(1, pts));
      cert.representatives.push_back(cert.base.back());
    }
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        const auto r = h1_decide_disjoint(cert.base[i], cert.base[j], psi.finite());
        cert.pairs.push_back({i, j, std::get<Distinct>(r).certificate});
      }
  }
  return cert;
}

std::vector<std::string> check_certificate(const H1Certificate& cert) {
  std::vector<std::string> problems;
  const Index k = cert.psi.power();
  const FinitePerm expected_f = k != 0 ? shift_conjugate(cert.psi.finite(), k) : FinitePerm(1);
  if (cert.fprime != expected_f) problems.push_back("f' is not the transported finitary part");
  if (cert.representatives.size() != cert.base.size())
    problems.push_back("representative count differs from base count");
  for (std::size_t i = 0; i < std::min(cert.base.size(), cert.representatives.size()); ++i)
    if (cert.representatives[i] != cert.base[i] * cert.fprime)
      problems.push_back("representative " + std::to_string(i) + " is not base * f'");
  if (!problems.empty()) return problems;

  std::vector<std::map<Index, Index>> profiles;
  for (const auto& r : cert.representatives) profiles.push_back(h1_coset_profile(cert.psi, r));

  const std::size_t n = cert.base.size();
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (const auto& pc : cert.pairs) {
    if (pc.i >= n || pc.j >= n || pc.i >= pc.j) {
      problems.push_back("malformed pair index");
      continue;
    }
    covered.insert({pc.i, pc.j});
    std::optional<TCResult> r;
    if (cert.psi.is_pure_shift())
      r = h1_decide_transpositions(cert.base[pc.i], cert.base[pc.j], cert.psi);
    else if (k == 0)
      r = h1_decide_disjoint(cert.base[pc.i], cert.base[pc.j], cert.psi.finite());
    if (r) {
      const auto* d = std::get_if<Distinct>(&*r);
      if (!d || d->certificate != pc.certificate)
        problems.push_back("certificate for pair " + std::to_string(pc.i) + "," +
                           std::to_string(pc.j) + " does not re-derive");
    }
    if (profiles[pc.i] == profiles[pc.j])
      problems.push_back("pair " + std::to_string(pc.i) + "," + std::to_string(pc.j) +
                         " has equal coset profiles");
  }
  if (covered.size() != n * (n - 1) / 2) problems.push_back("not every pair is certified");
  return problems;
}

FinitePerm matching_conjugator(const FinitePerm& u, const FinitePerm& v) {
  if (u.n() != v.n()) throw std::invalid_argument("permutations for different n");
  if (cycle_type(u) != cycle_type(v)) throw std::invalid_argument("cycle types differ");
  auto by_length = [](const FinitePerm& f) {
    auto cs = cycle_decomposition(f);
    std::stable_sort(cs.begin(), cs.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return cs;
  };
  const auto cu = by_length(u);
  const auto cv = by_length(v);
  std::vector<FinitePerm::Entry> map;
  for (std::size_t i = 0; i < cu.size(); ++i)
    for (std::size_t j = 0; j < cu[i].size(); ++j) map.push_back({cu[i][j], cv[i][j]});

  const auto su = support(u);
  const auto sv = support(v);
  std::vector<Point> only_v, only_u;
  std::set_difference(sv.begin(), sv.end(), su.begin(), su.end(), std::back_inserter(only_v));
  std::set_difference(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(only_u));
  for (std::size_t i = 0; i < only_v.size(); ++i) map.push_back({only_v[i], only_u[i]});
  return FinitePerm::from_map(u.n(), std::move(map));
}

}  // namespace houghton
