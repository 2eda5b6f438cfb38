#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace houghton {

using Index = std::int64_t;

/// A point of X_n: the point at distance `pos` (>= 1) on ray `ray` (1-based).
struct Point {
  int ray = 1;
  Index pos = 1;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    return std::hash<Index>{}(p.pos) * 31u + static_cast<std::size_t>(p.ray);
  }
};

/// Throws std::out_of_range unless 1 <= p.ray <= n and p.pos >= 1.
void check_point(const Point& p, int n);

/// An isometric permutation of the n rays: (l, p) -> (images[l-1], p).
class RayPerm {
 public:
  explicit RayPerm(int n);
  /// 1-based image sequence; throws std::invalid_argument unless it is a
  /// permutation of 1..n.
  explicit RayPerm(std::vector<int> images);

  /// sigma_ij
  static RayPerm transposition(int n, int i, int j);
  /// The cycle (c_0 c_1 ... c_k) on rays, fixing everything else.
  static RayPerm from_cycle(int n, const std::vector<int>& cycle);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int ray) const { return images_[static_cast<std::size_t>(ray - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const RayPerm&, const RayPerm&) = default;
  friend auto operator<=>(const RayPerm&, const RayPerm&) = default;

 private:
  std::vector<int> images_;
};

/// Right action: (ray)(a * b) = b(a(ray)).
RayPerm operator*(const RayPerm& a, const RayPerm& b);
RayPerm inverse(const RayPerm& s);
RayPerm pow(const RayPerm& s, Index k);
Point apply(const RayPerm& s, const Point& p);

/// Nontrivial cycles, each starting at its minimal ray, sorted by start.
std::vector<std::vector<int>> cycles(const RayPerm& s);
/// The orbit of `ray` listed as ray, s(ray), s^2(ray), ...
std::vector<int> cycle_through(const RayPerm& s, int ray);
/// Cycle lengths of s, one entry per cycle (fixed rays give 1), ascending.
std::vector<int> orbit_lengths(const RayPerm& s);
/// At most one nontrivial cycle (the identity counts).
bool is_cycle(const RayPerm& s);
bool is_ncycle(const RayPerm& s);
int order(const RayPerm& s);

std::string to_string(const RayPerm& s);

}  // namespace houghton
