#include "houghton/point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace houghton {

std::string to_string(const Point& p) {
  return std::to_string(p.ray) + "." + std::to_string(p.pos);
}

void check_point(const Point& p, int n) {
  if (p.ray < 1 || p.ray > n)
    throw std::out_of_range("ray index " + std::to_string(p.ray) + " outside 1.." +
                            std::to_string(n));
  if (p.pos < 1)
    throw std::out_of_range("point position must be >= 1, got " + std::to_string(p.pos));
}

RayPerm::RayPerm(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("ray count must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

RayPerm::RayPerm(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw std::invalid_argument("ray permutation needs at least one ray");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("ray images are not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

RayPerm RayPerm::transposition(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw std::invalid_argument("sigma_ij needs distinct rays in 1..n");
  RayPerm s(n);
  std::swap(s.images_[static_cast<std::size_t>(i - 1)], s.images_[static_cast<std::size_t>(j - 1)]);
  return s;
}

RayPerm RayPerm::from_cycle(int n, const std::vector<int>& cycle) {
  RayPerm s(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const int r = cycle[k];
    if (r < 1 || r > n || seen[static_cast<std::size_t>(r - 1)])
      throw std::invalid_argument("ray cycle has a repeated or out-of-range entry");
    seen[static_cast<std::size_t>(r - 1)] = true;
    s.images_[static_cast<std::size_t>(r - 1)] = cycle[(k + 1) % cycle.size()];
  }
  return s;
}

bool RayPerm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

RayPerm operator*(const RayPerm& a, const RayPerm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ray permutations on different ray counts");
  std::vector<int> out(static_cast<std::size_t>(a.n()));
  for (int r = 1; r <= a.n(); ++r) out[static_cast<std::size_t>(r - 1)] = b(a(r));
  return RayPerm(std::move(out));
}

RayPerm inverse(const RayPerm& s) {
  std::vector<int> out(static_cast<std::size_t>(s.n()));
  for (int r = 1; r <= s.n(); ++r) out[static_cast<std::size_t>(s(r) - 1)] = r;
  return RayPerm(std::move(out));
}

RayPerm pow(const RayPerm& s, Index k) {
  RayPerm base = k < 0 ? inverse(s) : s;
  Index e = k < 0 ? -k : k;
  e %= order(s);
  RayPerm out(s.n());
  for (Index i = 0; i < e; ++i) out = out * base;
  return out;
}

Point apply(const RayPerm& s, const Point& p) {
  check_point(p, s.n());
  return {s(p.ray), p.pos};
}

std::vector<int> cycle_through(const RayPerm& s, int ray) {
  std::vector<int> out{ray};
  for (int r = s(ray); r != ray; r = s(r)) out.push_back(r);
  return out;
}

std::vector<std::vector<int>> cycles(const RayPerm& s) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(s.n()), false);
  for (int r = 1; r <= s.n(); ++r) {
    if (seen[static_cast<std::size_t>(r - 1)]) continue;
    auto c = cycle_through(s, r);
    for (int x : c) seen[static_cast<std::size_t>(x - 1)] = true;
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> orbit_lengths(const RayPerm& s) {
  std::vector<int> out;
  std::vector<bool> seen(static_cast<std::size_t>(s.n()), false);
  for (int r = 1; r <= s.n(); ++r) {
    if (seen[static_cast<std::size_t>(r - 1)]) continue;
    auto c = cycle_through(s, r);
    for (int x : c) seen[static_cast<std::size_t>(x - 1)] = true;
    out.push_back(static_cast<int>(c.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cycle(const RayPerm& s) { return cycles(s).size() <= 1; }

bool is_ncycle(const RayPerm& s) {
  return static_cast<int>(cycle_through(s, 1).size()) == s.n();
}

int order(const RayPerm& s) {
  int l = 1;
  for (int len : orbit_lengths(s)) l = std::lcm(l, len);
  return l;
}

std::string to_string(const RayPerm& s) {
  std::string out = "rho[";
  for (int r = 1; r <= s.n(); ++r) {
    if (r > 1) out += ",";
    out += std::to_string(s(r));
  }
  return out + "]";
}

}  // namespace houghton
