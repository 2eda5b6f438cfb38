#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "houghton/point.hpp"

namespace houghton {

/// Multiset of cycle lengths (each >= 2), kept sorted ascending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<Index> lengths);

  const std::vector<Index>& lengths() const { return lengths_; }
  bool empty() const { return lengths_.empty(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<Index> lengths_;
};

std::string to_string(const CycleType& t);

/// A finite-support bijection of X_n.
///
/// Stored canonically as the sorted list of moved points and their images;
/// fixed points never appear, so equality is structural.
class FinitePerm {
 public:
  using Entry = std::pair<Point, Point>;

  explicit FinitePerm(int n);

  /// Builds from an explicit partial map. Entries mapping a point to itself
  /// are dropped. Throws std::invalid_argument unless the map is a
  /// bijection of its domain.
  static FinitePerm from_map(int n, std::vector<Entry> entries);
  /// A single cycle (p_0 p_1 ... p_k): p_i -> p_{i+1}.
  static FinitePerm cycle(int n, const std::vector<Point>& points);
  /// Product of cycles, composed left to right.
  static FinitePerm from_cycles(int n, const std::vector<std::vector<Point>>& cs);
  /// Transposition of two distinct points.
  static FinitePerm transposition(int n, const Point& a, const Point& b);

  int n() const { return n_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_identity() const { return entries_.empty(); }

  /// Image of p; throws std::out_of_range if p is not a point of X_n.
  Point operator()(const Point& p) const;
  /// Image of p without range checks (p must be a valid point).
  Point image(const Point& p) const;

  friend bool operator==(const FinitePerm&, const FinitePerm&) = default;
  friend auto operator<=>(const FinitePerm&, const FinitePerm&) = default;

 private:
  struct Canonical {};
  FinitePerm(int n, std::vector<Entry> entries, Canonical);

  friend FinitePerm make_canonical(int n, std::vector<Entry> entries);

  int n_;
  std::vector<Entry> entries_;
};

/// Trusted constructor: entries must describe a bijection of their domain.
/// Sorts and strips fixed points.
FinitePerm make_canonical(int n, std::vector<FinitePerm::Entry> entries);

struct FinitePermHash {
  std::size_t operator()(const FinitePerm& f) const noexcept;
};

/// f then g.
FinitePerm operator*(const FinitePerm& f, const FinitePerm& g);
FinitePerm inverse(const FinitePerm& f);
FinitePerm pow(const FinitePerm& f, Index k);

std::vector<Point> support(const FinitePerm& f);
int sign(const FinitePerm& f);

/// Disjoint cycles, each rotated to start at its minimal point, sorted by
/// that point (ray-major, then position).
std::vector<std::vector<Point>> cycle_decomposition(const FinitePerm& f);
CycleType cycle_type(const FinitePerm& f);
/// True iff f is a single cycle of length >= 2.
bool is_single_cycle(const FinitePerm& f);

/// Conjugate by an arbitrary bijection b of X_n: the permutation sending
/// b(P) to b(f(P)). With b = sigma this is f^sigma.
FinitePerm relabel(const FinitePerm& f, const std::function<Point(const Point&)>& b);
/// f^sigma = sigma^{-1} f sigma.
FinitePerm relabel(const FinitePerm& f, const RayPerm& sigma);

/// Cycle notation, e.g. "(1.1 1.2)(2.1 2.3 2.2)"; the identity is "id".
std::string to_string(const FinitePerm& f);

}  // namespace houghton
