#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/finite_perm.hpp"
#include "houghton/normalizer.hpp"
#include "houghton/shift.hpp"

namespace houghton {

// ---------------------------------------------------------------------------
// Results and certificates

enum class InvariantKind { CycleLength, Gap, CycleType };

std::string to_string(InvariantKind k);

/// An invariant of twisted classes that takes different values on two
/// elements. For cycle lengths and gaps each side holds one value; for
/// cycle types each side holds the sorted cycle lengths.
struct Certificate {
  InvariantKind kind = InvariantKind::CycleLength;
  std::vector<Index> first;
  std::vector<Index> second;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// "cycle-length=2,3", "gap=1,4", "cycle-type=2+2,3".
std::string to_string(const Certificate& c);

struct Equivalent {
  HoughtonElem witness;
};
struct Distinct {
  Certificate certificate;
};
struct Unknown {
  Index searched_bound = 0;
};

/// Outcome of a twisted-conjugacy decision. Equivalent always carries a
/// witness h with y = h x phi(h)^-1; Distinct is only produced where the
/// invariant is known to separate classes.
using TCResult = std::variant<Equivalent, Distinct, Unknown>;

inline bool is_equivalent(const TCResult& r) { return std::holds_alternative<Equivalent>(r); }
inline bool is_distinct(const TCResult& r) { return std::holds_alternative<Distinct>(r); }

// ---------------------------------------------------------------------------
// Witnesses, coset form, transport

/// y == h x mu(w)(h)^-1.
bool verify_witness(const NormElem& w, const HoughtonElem& x, const HoughtonElem& y,
                    const HoughtonElem& h);
/// Same relation in FSym_1 twisted by conjugation with psi.
bool verify_witness(const ShiftElem& psi, const FinitePerm& x, const FinitePerm& y,
                    const FinitePerm& h);

/// The coset element w x^-1 of H_n w. Twisted conjugacy by mu(w) becomes
/// ordinary H_n-conjugacy of these: y = h x mu(w)(h)^-1 exactly when
/// coset_conjugate(twisted_to_coset(x, w), h^-1) == twisted_to_coset(y, w).
NormElem twisted_to_coset(const HoughtonElem& x, const NormElem& w);
/// h^-1 v h.
NormElem coset_conjugate(const NormElem& v, const HoughtonElem& h);

/// x -> x g'. Carries classes of mu(sigma) to classes of mu(sigma g') with
/// the same witnesses.
HoughtonElem transport_class(const HoughtonElem& x, const HoughtonElem& gprime);

// ---------------------------------------------------------------------------
// Cycles on one ray under mu(sigma), sigma a ray cycle

/// Witness h for [tau] = [tau'] in R[mu(sigma)], where tau and tau' are
/// cycles of equal length on the same ray and sigma has at most one
/// nontrivial cycle. Throws std::invalid_argument outside that regime.
HoughtonElem build_witness_equal_cycles(const FinitePerm& tau, const FinitePerm& tau_prime,
                                        const RayPerm& sigma);

/// Exact decision for two cycles on the same ray: equal lengths give a
/// constructed witness, different lengths a cycle-length certificate.
TCResult decide_cycles_same_ray(const FinitePerm& tau, const FinitePerm& tau_prime,
                                const RayPerm& sigma);

/// Cycle counts of the coset bijection P -> x^-1(sigma(P)) for finitary x,
/// restricted to lengths that are not ray-orbit lengths of sigma (those
/// occur infinitely often regardless of x). Elements in one twisted class
/// of mu(sigma) have equal profiles.
std::map<Index, Index> coset_cycle_profile(const RayPerm& sigma, const FinitePerm& x);

struct PairCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  Certificate certificate;
};

struct RInfCertificate {
  NormElem w;
  RayPerm sigma;
  HoughtonElem gprime;
  int ray = 1;                          // ray carrying the base cycles
  RayPerm sigma_cycle;                  // the cycle of sigma through `ray`
  std::vector<FinitePerm> base;         // classes of mu(sigma)
  std::vector<HoughtonElem> representatives;  // base transported to mu(w)
  std::vector<PairCertificate> pairs;
};

/// K representatives of pairwise distinct classes in R[mu(w)], with a
/// certificate for each pair. Base cycles of lengths 2..K+1 sit on ray 1
/// when sigma is a single cycle; otherwise on a ray of a longest sigma-cycle.
RInfCertificate rn_infinity_certificate(const NormElem& w, std::size_t count);

/// Re-derives every certificate and returns the list of problems found
/// (empty when the certificate checks out).
std::vector<std::string> check_certificate(const RInfCertificate& cert);

// ---------------------------------------------------------------------------
// H_1

/// Telescoped witness for [x] = [phi^m(x)], phi = mu(psi). m may be negative.
FinitePerm h1_image_class_chain(const FinitePerm& x, const ShiftElem& psi, Index m);

/// Transpositions under the pure shift: equivalent iff the gaps in shift
/// coordinates agree.
TCResult h1_decide_transpositions(const FinitePerm& tau, const FinitePerm& tau_prime,
                                  const ShiftElem& psi);

/// Permutations supported off supp(gamma) under mu(gamma), gamma finitary:
/// equivalent iff the cycle types agree.
TCResult h1_decide_disjoint(const FinitePerm& tau, const FinitePerm& tau_prime,
                            const FinitePerm& gamma);

/// Cycle counts of the coset bijection psi x^-1 (finitary x). For a
/// finitary psi this is the full cycle type; otherwise it lists the finite
/// cycles, all of which pass through the supports involved.
std::map<Index, Index> h1_coset_profile(const ShiftElem& psi, const FinitePerm& x);

struct H1Certificate {
  ShiftElem psi;
  FinitePerm fprime{1};  // psi = gamma^k f'
  std::vector<FinitePerm> base;
  std::vector<FinitePerm> representatives;
  std::vector<PairCertificate> pairs;
};

H1Certificate h1_infinity_certificate(const ShiftElem& psi, std::size_t count);
std::vector<std::string> check_certificate(const H1Certificate& cert);

// ---------------------------------------------------------------------------
// Helpers shared with the decision front end

/// A permutation beta with relabel(u, beta) == v when u and v have the same
/// cycle type, supported on supp(u) and supp(v).
FinitePerm matching_conjugator(const FinitePerm& u, const FinitePerm& v);

}  // namespace houghton
