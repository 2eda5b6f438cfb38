#include "houghton/finite_perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace houghton {

namespace {

using Entry = FinitePerm::Entry;

bool by_source(const Entry& a, const Entry& b) { return a.first < b.first; }

}  // namespace

CycleType::CycleType(std::vector<Index> lengths) : lengths_(std::move(lengths)) {
  for (Index l : lengths_)
    if (l < 2) throw std::invalid_argument("cycle lengths must be >= 2");
  std::sort(lengths_.begin(), lengths_.end());
}

std::string to_string(const CycleType& t) {
  if (t.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.lengths().size(); ++i) {
    if (i) out += "+";
    out += std::to_string(t.lengths()[i]);
  }
  return out;
}

FinitePerm::FinitePerm(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ray count must be >= 1");
}

FinitePerm::FinitePerm(int n, std::vector<Entry> entries, Canonical)
    : n_(n), entries_(std::move(entries)) {}

FinitePerm make_canonical(int n, std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.first == e.second; });
  std::sort(entries.begin(), entries.end(), by_source);
  return FinitePerm(n, std::move(entries), FinitePerm::Canonical{});
}

FinitePerm FinitePerm::from_map(int n, std::vector<Entry> entries) {
  if (n < 1) throw std::invalid_argument("ray count must be >= 1");
  for (const auto& [src, dst] : entries) {
    check_point(src, n);
    check_point(dst, n);
  }
  std::sort(entries.begin(), entries.end(), by_source);
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw std::invalid_argument("point " + to_string(entries[i].first) + " has two images");
  std::vector<Point> dom, img;
  for (const auto& [src, dst] : entries) {
    dom.push_back(src);
    img.push_back(dst);
  }
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end())
    throw std::invalid_argument("map is not injective");
  if (dom != img) throw std::invalid_argument("map is not a bijection of its domain");
  return make_canonical(n, std::move(entries));
}

FinitePerm FinitePerm::cycle(int n, const std::vector<Point>& points) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < points.size(); ++i)
    entries.emplace_back(points[i], points[(i + 1) % points.size()]);
  return from_map(n, std::move(entries));
}

FinitePerm FinitePerm::from_cycles(int n, const std::vector<std::vector<Point>>& cs) {
  FinitePerm out(n);
  for (const auto& c : cs) out = out * cycle(n, c);
  return out;
}

FinitePerm FinitePerm::transposition(int n, const Point& a, const Point& b) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct points");
  return cycle(n, {a, b});
}

Point FinitePerm::image(const Point& p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, const Point& q) { return e.first < q; });
  if (it != entries_.end() && it->first == p) return it->second;
  return p;
}

Point FinitePerm::operator()(const Point& p) const {
  check_point(p, n_);
  return image(p);
}

std::size_t FinitePermHash::operator()(const FinitePerm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.n());
  PointHash ph;
  for (const auto& [a, b] : f.entries()) {
    h = h * 1000003u ^ ph(a);
    h = h * 1000003u ^ ph(b);
  }
  return h;
}

FinitePerm operator*(const FinitePerm& f, const FinitePerm& g) {
  if (f.n() != g.n()) throw std::invalid_argument("permutations on different ray counts");
  std::vector<Entry> out;
  out.reserve(f.support_size() + g.support_size());
  // Candidates: supp(f) and supp(g); every other point is fixed by f g.
  auto fi = f.entries().begin(), fe = f.entries().end();
  auto gi = g.entries().begin(), ge = g.entries().end();
  while (fi != fe || gi != ge) {
    Point p;
    if (gi == ge || (fi != fe && fi->first < gi->first)) {
      p = (fi++)->first;
    } else if (fi == fe || gi->first < fi->first) {
      p = (gi++)->first;
    } else {
      p = fi->first;
      ++fi;
      ++gi;
    }
    const Point q = g.image(f.image(p));
    if (q != p) out.emplace_back(p, q);
  }
  return make_canonical(f.n(), std::move(out));
}

FinitePerm inverse(const FinitePerm& f) {
  std::vector<Entry> out;
  out.reserve(f.support_size());
  for (const auto& [a, b] : f.entries()) out.emplace_back(b, a);
  return make_canonical(f.n(), std::move(out));
}

FinitePerm pow(const FinitePerm& f, Index k) {
  FinitePerm base = k < 0 ? inverse(f) : f;
  Index e = k < 0 ? -k : k;
  FinitePerm out(f.n());
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

std::vector<Point> support(const FinitePerm& f) {
  std::vector<Point> out;
  out.reserve(f.support_size());
  for (const auto& e : f.entries()) out.push_back(e.first);
  return out;
}

std::vector<std::vector<Point>> cycle_decomposition(const FinitePerm& f) {
  std::vector<std::vector<Point>> out;
  std::set<Point> seen;
  // Entries are sorted by source, so the first unseen point of a cycle is
  // its minimum and cycles come out sorted by starting point.
  for (const auto& [start, next] : f.entries()) {
    if (seen.contains(start)) continue;
    std::vector<Point> c{start};
    seen.insert(start);
    for (Point p = next; p != start; p = f.image(p)) {
      c.push_back(p);
      seen.insert(p);
    }
    out.push_back(std::move(c));
  }
  return out;
}

CycleType cycle_type(const FinitePerm& f) {
  std::vector<Index> lengths;
  for (const auto& c : cycle_decomposition(f)) lengths.push_back(static_cast<Index>(c.size()));
  return CycleType(std::move(lengths));
}

int sign(const FinitePerm& f) {
  Index s = 0;
  for (const auto& c : cycle_decomposition(f)) s += static_cast<Index>(c.size()) - 1;
  return s % 2 == 0 ? 1 : -1;
}

bool is_single_cycle(const FinitePerm& f) { return cycle_decomposition(f).size() == 1; }

FinitePerm relabel(const FinitePerm& f, const std::function<Point(const Point&)>& b) {
  std::vector<Entry> out;
  out.reserve(f.support_size());
  for (const auto& [p, q] : f.entries()) out.emplace_back(b(p), b(q));
  return make_canonical(f.n(), std::move(out));
}

FinitePerm relabel(const FinitePerm& f, const RayPerm& sigma) {
  if (f.n() != sigma.n()) throw std::invalid_argument("relabel: ray counts differ");
  return relabel(f, [&](const Point& p) { return apply(sigma, p); });
}

std::string to_string(const FinitePerm& f) {
  if (f.is_identity()) return "id";
  std::string out;
  for (const auto& c : cycle_decomposition(f)) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += to_string(c[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace houghton
