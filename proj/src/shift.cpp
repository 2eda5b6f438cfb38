#include "houghton/shift.hpp"

#include <stdexcept>

#include "houghton/element.hpp"

namespace houghton {

Index shift_coordinate(const Point& p) {
  if (p.ray != 1 || p.pos < 1) throw std::out_of_range("shift coordinates live on R_1 only");
  return p.pos % 2 == 1 ? (p.pos - 1) / 2 : -(p.pos / 2);
}

Point shift_point(Index z) { return z >= 0 ? Point{1, 2 * z + 1} : Point{1, -2 * z}; }

ShiftElem::ShiftElem(FinitePerm finite, Index power) : finite_(std::move(finite)), power_(power) {
  if (finite_.n() != 1) throw std::invalid_argument("shift elements act on X_1 only");
}

Point ShiftElem::operator()(const Point& p) const {
  return shift_point(shift_coordinate(finite_(p)) + power_);
}

FinitePerm shift_conjugate(const FinitePerm& h, Index k) {
  return relabel(h, [k](const Point& p) { return shift_point(shift_coordinate(p) + k); });
}

ShiftElem operator*(const ShiftElem& a, const ShiftElem& b) {
  // f1 g^k1 f2 g^k2 = f1 (g^k1 f2 g^-k1) g^(k1+k2)
  return {a.finite() * shift_conjugate(b.finite(), -a.power()), a.power() + b.power()};
}

ShiftElem inverse(const ShiftElem& s) {
  return {shift_conjugate(inverse(s.finite()), s.power()), -s.power()};
}

FinitePerm conjugate(const FinitePerm& h, const ShiftElem& psi) {
  if (h.n() != 1) throw std::invalid_argument("shift conjugation acts on FSym_1 only");
  return relabel(h, [&](const Point& p) { return psi(p); });
}

std::string to_string(const ShiftElem& s) {
  std::string out = to_string(HoughtonElem::from_finite_perm(s.finite()));
  if (s.power() != 0) out += ";sh^" + std::to_string(s.power());
  return out;
}

}  // namespace houghton
