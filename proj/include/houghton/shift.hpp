#pragma once

#include <string>

#include "houghton/finite_perm.hpp"

namespace houghton {

/// Shift coordinates on R_1: the fixed bijection Z -> R_1 sending k >= 0 to
/// (1, 2k+1) and k < 0 to (1, -2k). The standard infinite cycle gamma is
/// the +1 shift in these coordinates.
Index shift_coordinate(const Point& p);
Point shift_point(Index z);

/// A permutation of X_1 of the form f * gamma^k (f first), with f finitary.
/// k = 0 gives FSym_1 itself; f = id, k = 1 is the pure shift.
class ShiftElem {
 public:
  ShiftElem() : finite_(1) {}
  ShiftElem(FinitePerm finite, Index power);

  static ShiftElem pure_shift(Index power = 1) { return {FinitePerm(1), power}; }

  const FinitePerm& finite() const { return finite_; }
  Index power() const { return power_; }
  bool is_pure_shift() const { return finite_.is_identity() && power_ == 1; }

  Point operator()(const Point& p) const;

  friend bool operator==(const ShiftElem&, const ShiftElem&) = default;

 private:
  FinitePerm finite_;
  Index power_ = 0;
};

ShiftElem operator*(const ShiftElem& a, const ShiftElem& b);
ShiftElem inverse(const ShiftElem& s);

/// h^psi = psi^-1 h psi.
FinitePerm conjugate(const FinitePerm& h, const ShiftElem& psi);
/// h^(gamma^k) for the pure shift power gamma^k.
FinitePerm shift_conjugate(const FinitePerm& h, Index k);

/// "T[0]{...};sh^k"
std::string to_string(const ShiftElem& s);

}  // namespace houghton
