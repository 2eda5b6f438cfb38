// Independent reference implementations used to check the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/finite_perm.hpp"
#include "houghton/linalg.hpp"
#include "houghton/point.hpp"

namespace oracle {

using houghton::Index;
using houghton::Point;

// A generator letter: gen = 0 is alpha, gen = i >= 1 is g_i.
struct Letter {
  int gen = 0;
  bool inverse = false;
};
using Word = std::vector<Letter>;

// Generators straight from their defining formulas, one point at a time.
inline Point apply_letter(const Letter& l, const Point& p) {
  if (l.gen == 0) {
    if (p == Point{1, 1}) return {1, 2};
    if (p == Point{1, 2}) return {1, 1};
    return p;
  }
  const int partner = l.gen + 1;
  if (!l.inverse) {
    if (p.ray == 1) return p.pos >= 2 ? Point{1, p.pos - 1} : Point{partner, 1};
    if (p.ray == partner) return {partner, p.pos + 1};
    return p;
  }
  if (p.ray == 1) return {1, p.pos + 1};
  if (p.ray == partner) return p.pos == 1 ? Point{1, 1} : Point{partner, p.pos - 1};
  return p;
}

// Words act on the right: the first letter is applied first.
inline Point apply_word(const Word& w, Point p) {
  for (const auto& l : w) p = apply_letter(l, p);
  return p;
}

inline bool words_agree(int n, const Word& a, const Word& b, Index depth) {
  for (int r = 1; r <= n; ++r)
    for (Index p = 1; p <= depth; ++p)
      if (apply_word(a, {r, p}) != apply_word(b, {r, p})) return false;
  return true;
}

inline bool agrees_with(const houghton::HoughtonElem& g, const Word& w, Index depth) {
  for (int r = 1; r <= g.n(); ++r)
    for (Index p = 1; p <= depth; ++p)
      if (g({r, p}) != apply_word(w, {r, p})) return false;
  return true;
}

inline Word random_word(std::mt19937_64& rng, int n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, n - 1);
  std::bernoulli_distribution inv(0.5);
  Word w(len(rng));
  for (auto& l : w) {
    l.gen = gen(rng);
    l.inverse = l.gen != 0 && inv(rng);
  }
  return w;
}

// Determinant by the Leibniz expansion over all permutations.
inline Index leibniz_det(const houghton::IntMatrix& m) {
  const auto k = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Index total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Index term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < k; ++i)
      term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Cycle lengths by walking the orbit of every moved point.
inline std::vector<Index> orbit_scan_lengths(const houghton::FinitePerm& f) {
  std::set<Point> seen;
  std::vector<Index> lengths;
  for (const auto& [src, dst] : f.entries()) {
    if (seen.contains(src)) continue;
    Index len = 0;
    Point p = src;
    do {
      seen.insert(p);
      p = f(p);
      ++len;
    } while (p != src);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline houghton::RayPerm random_ray_perm(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return houghton::RayPerm(images);
}

// An m-cycle on `ray` through m distinct positions drawn from 1..span, in
// random cyclic order.
inline houghton::FinitePerm random_cycle(std::mt19937_64& rng, int n, int ray, std::size_t m,
                                         Index span) {
  std::vector<Index> positions(static_cast<std::size_t>(span));
  std::iota(positions.begin(), positions.end(), 1);
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < m; ++i) pts.push_back({ray, positions[i]});
  return houghton::FinitePerm::cycle(n, pts);
}

// Every permutation of `points`, as explicit maps.
inline std::vector<houghton::FinitePerm> all_permutations(int n, const std::vector<Point>& points) {
  std::vector<std::size_t> img(points.size());
  std::iota(img.begin(), img.end(), 0);
  std::vector<houghton::FinitePerm> out;
  do {
    std::vector<houghton::FinitePerm::Entry> map;
    for (std::size_t i = 0; i < points.size(); ++i) map.push_back({points[i], points[img[i]]});
    out.push_back(houghton::FinitePerm::from_map(n, map));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace oracle
