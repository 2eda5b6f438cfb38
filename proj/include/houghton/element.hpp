#pragma once

#include <span>
#include <string>
#include <vector>

#include "houghton/finite_perm.hpp"
#include "houghton/linalg.hpp"
#include "houghton/point.hpp"

namespace houghton {

/// An eventual translation of X_n: translates ray k by m_k outside a finite
/// set of exceptional points.
///
/// Canonical form: `exceptions()` holds exactly the points whose image is
/// not the translated point (including every point that the translation
/// would push off its ray), sorted by source. Structural equality is
/// therefore group equality.
class HoughtonElem {
 public:
  using Entry = FinitePerm::Entry;

  /// Identity of H_n.
  explicit HoughtonElem(int n);

  /// Validating constructor. Throws std::invalid_argument unless the
  /// translation vector and exception map describe a bijection of X_n.
  static HoughtonElem from_parts(std::vector<Index> translation, std::vector<Entry> exceptions);
  static HoughtonElem from_finite_perm(const FinitePerm& f);

  int n() const { return static_cast<int>(translation_.size()); }
  const std::vector<Index>& translation() const { return translation_; }
  std::span<const Entry> exceptions() const { return exceptions_; }

  /// (P)g; throws std::out_of_range for points outside X_n.
  Point operator()(const Point& p) const;
  Point image(const Point& p) const;
  /// The default image (k, p + m_k), which may have position < 1.
  Point translated(const Point& p) const {
    return {p.ray, p.pos + translation_[static_cast<std::size_t>(p.ray - 1)]};
  }

  bool is_identity() const;

  friend bool operator==(const HoughtonElem&, const HoughtonElem&) = default;
  friend auto operator<=>(const HoughtonElem&, const HoughtonElem&) = default;

 private:
  HoughtonElem(std::vector<Index> translation, std::vector<Entry> exceptions);
  friend HoughtonElem canonical_from_total_map(std::vector<Index> translation,
                                               std::vector<Entry> candidates);

  std::vector<Index> translation_;
  std::vector<Entry> exceptions_;
};

/// Trusted constructor: `candidates` must contain every genuinely
/// exceptional point of a bijection with the given translation. Entries
/// agreeing with the translation are dropped.
HoughtonElem canonical_from_total_map(std::vector<Index> translation,
                                      std::vector<HoughtonElem::Entry> candidates);

/// g_i: translation by one along R_1 joined to R_{i+1}. Requires 1 <= i <= n-1.
HoughtonElem gen_g(int n, int i);
/// alpha: the transposition of (1,1) and (1,2). Requires n >= 2.
HoughtonElem gen_alpha(int n);

/// g then h.
HoughtonElem operator*(const HoughtonElem& g, const HoughtonElem& h);
HoughtonElem inverse(const HoughtonElem& g);
HoughtonElem pow(const HoughtonElem& g, Index k);
/// x^g = g^{-1} x g.
HoughtonElem conjugate(const HoughtonElem& x, const HoughtonElem& g);
/// [g, h] = g h g^{-1} h^{-1}.
HoughtonElem commutator(const HoughtonElem& g, const HoughtonElem& h);
/// g^sigma for an isometric ray permutation.
HoughtonElem relabel(const HoughtonElem& g, const RayPerm& sigma);

/// The translation vector (m_1, ..., m_n).
IntVector pi(const HoughtonElem& g);
/// Coordinates in the basis pi(g_1), ..., pi(g_{n-1}): entry j is m_{j+1}.
IntVector pi_reduced(const HoughtonElem& g);

bool is_fsym(const HoughtonElem& g);
bool is_falt(const HoughtonElem& g);
/// Throws std::invalid_argument when g has a nonzero translation.
FinitePerm as_finite_perm(const HoughtonElem& g);

/// Largest position occurring in the exception map (0 for pure translations).
Index max_exception_pos(const HoughtonElem& g);

/// Canonical text form, e.g. "T[-1,1,0]{1.1->2.1}".
std::string to_string(const HoughtonElem& g);

}  // namespace houghton
