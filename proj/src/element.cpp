#include "houghton/element.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace houghton {

namespace {

using Entry = HoughtonElem::Entry;

bool by_source(const Entry& a, const Entry& b) { return a.first < b.first; }

bool contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

void check_same_n(const HoughtonElem& g, const HoughtonElem& h) {
  if (g.n() != h.n()) throw std::invalid_argument("elements of H_n for different n");
}

}  // namespace

HoughtonElem::HoughtonElem(int n) : translation_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("ray count must be >= 1");
}

HoughtonElem::HoughtonElem(std::vector<Index> translation, std::vector<Entry> exceptions)
    : translation_(std::move(translation)), exceptions_(std::move(exceptions)) {}

HoughtonElem canonical_from_total_map(std::vector<Index> translation, std::vector<Entry> candidates) {
  std::sort(candidates.begin(), candidates.end(), by_source);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [&](const Entry& e) {
    const Point& p = e.first;
    return e.second == Point{p.ray, p.pos + translation[static_cast<std::size_t>(p.ray - 1)]};
  });
  return HoughtonElem(std::move(translation), std::move(candidates));
}

HoughtonElem HoughtonElem::from_parts(std::vector<Index> translation, std::vector<Entry> exceptions) {
  const int n = static_cast<int>(translation.size());
  if (n < 1) throw std::invalid_argument("ray count must be >= 1");
  if (std::accumulate(translation.begin(), translation.end(), Index{0}) != 0)
    throw std::invalid_argument("translation amounts must sum to zero");
  for (const auto& [p, q] : exceptions) {
    check_point(p, n);
    check_point(q, n);
  }
  std::sort(exceptions.begin(), exceptions.end(), by_source);
  std::vector<Point> dom, img;
  for (const auto& [p, q] : exceptions) {
    dom.push_back(p);
    img.push_back(q);
  }
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
    throw std::invalid_argument("exception map assigns two images to one point");
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end())
    throw std::invalid_argument("exception map is not injective");

  auto shift = [&](int ray) { return translation[static_cast<std::size_t>(ray - 1)]; };
  for (int k = 1; k <= n; ++k) {
    // Points pushed off the ray need an exceptional image; points below the
    // translated range need an exceptional preimage.
    for (Index p = 1; p <= -shift(k); ++p)
      if (!contains(dom, {k, p}))
        throw std::invalid_argument("point " + to_string(Point{k, p}) + " has no image");
    for (Index p = 1; p <= shift(k); ++p)
      if (!contains(img, {k, p}))
        throw std::invalid_argument("point " + to_string(Point{k, p}) + " has no preimage");
  }
  for (const Point& q : img) {
    const Point pre{q.ray, q.pos - shift(q.ray)};
    if (pre.pos >= 1 && !contains(dom, pre))
      throw std::invalid_argument("point " + to_string(q) + " has two preimages");
  }
  for (const Point& p : dom) {
    const Point t{p.ray, p.pos + shift(p.ray)};
    if (t.pos >= 1 && !contains(img, t))
      throw std::invalid_argument("point " + to_string(t) + " has no preimage");
  }
  return canonical_from_total_map(std::move(translation), std::move(exceptions));
}

HoughtonElem HoughtonElem::from_finite_perm(const FinitePerm& f) {
  std::vector<Entry> entries(f.entries().begin(), f.entries().end());
  return HoughtonElem(std::vector<Index>(static_cast<std::size_t>(f.n()), 0), std::move(entries));
}

Point HoughtonElem::image(const Point& p) const {
  auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(), p,
                             [](const Entry& e, const Point& q) { return e.first < q; });
  if (it != exceptions_.end() && it->first == p) return it->second;
  return translated(p);
}

Point HoughtonElem::operator()(const Point& p) const {
  check_point(p, n());
  return image(p);
}

bool HoughtonElem::is_identity() const {
  return exceptions_.empty() &&
         std::all_of(translation_.begin(), translation_.end(), [](Index m) { return m == 0; });
}

HoughtonElem gen_g(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("g_i needs 1 <= i <= n-1 (n = " + std::to_string(n) + ")");
  std::vector<Index> t(static_cast<std::size_t>(n), 0);
  t[0] = -1;
  t[static_cast<std::size_t>(i)] = 1;
  return HoughtonElem::from_parts(std::move(t), {{{1, 1}, {i + 1, 1}}});
}

HoughtonElem gen_alpha(int n) {
  return HoughtonElem::from_finite_perm(FinitePerm::transposition(n, {1, 1}, {1, 2}));
}

HoughtonElem operator*(const HoughtonElem& g, const HoughtonElem& h) {
  check_same_n(g, h);
  const int n = g.n();
  std::vector<Index> t(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = g.translation()[k] + h.translation()[k];

  // Preimages under g of h's exceptional points.
  std::vector<Entry> g_rev;
  g_rev.reserve(g.exceptions().size());
  for (const auto& [p, q] : g.exceptions()) g_rev.emplace_back(q, p);
  std::sort(g_rev.begin(), g_rev.end(), by_source);
  auto g_preimage = [&](const Point& q) -> Point {
    auto it = std::lower_bound(g_rev.begin(), g_rev.end(), q,
                               [](const Entry& e, const Point& x) { return e.first < x; });
    if (it != g_rev.end() && it->first == q) return it->second;
    return {q.ray, q.pos - g.translation()[static_cast<std::size_t>(q.ray - 1)]};
  };

  std::vector<Point> candidates;
  for (const auto& e : g.exceptions()) candidates.push_back(e.first);
  for (const auto& e : h.exceptions()) candidates.push_back(g_preimage(e.first));
  for (int k = 1; k <= n; ++k)
    for (Index p = 1; p <= -t[static_cast<std::size_t>(k - 1)]; ++p) candidates.push_back({k, p});

  std::vector<Entry> entries;
  entries.reserve(candidates.size());
  for (const Point& p : candidates) entries.emplace_back(p, h.image(g.image(p)));
  return canonical_from_total_map(std::move(t), std::move(entries));
}

HoughtonElem inverse(const HoughtonElem& g) {
  std::vector<Index> t(g.translation());
  for (auto& m : t) m = -m;
  std::vector<Entry> entries;
  entries.reserve(g.exceptions().size());
  for (const auto& [p, q] : g.exceptions()) entries.emplace_back(q, p);
  return canonical_from_total_map(std::move(t), std::move(entries));
}

HoughtonElem pow(const HoughtonElem& g, Index k) {
  HoughtonElem base = k < 0 ? inverse(g) : g;
  Index e = k < 0 ? -k : k;
  HoughtonElem out(g.n());
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

HoughtonElem conjugate(const HoughtonElem& x, const HoughtonElem& g) {
  return inverse(g) * x * g;
}

HoughtonElem commutator(const HoughtonElem& g, const HoughtonElem& h) {
  return g * h * inverse(g) * inverse(h);
}

HoughtonElem relabel(const HoughtonElem& g, const RayPerm& sigma) {
  if (g.n() != sigma.n()) throw std::invalid_argument("relabel: ray counts differ");
  std::vector<Index> t(g.translation().size());
  for (int k = 1; k <= g.n(); ++k)
    t[static_cast<std::size_t>(sigma(k) - 1)] = g.translation()[static_cast<std::size_t>(k - 1)];
  std::vector<Entry> entries;
  for (const auto& [p, q] : g.exceptions()) entries.emplace_back(apply(sigma, p), apply(sigma, q));
  return canonical_from_total_map(std::move(t), std::move(entries));
}

IntVector pi(const HoughtonElem& g) {
  IntVector v(g.n());
  for (int k = 0; k < g.n(); ++k) v(k) = g.translation()[static_cast<std::size_t>(k)];
  return v;
}

IntVector pi_reduced(const HoughtonElem& g) {
  return pi(g).tail(g.n() - 1);
}

bool is_fsym(const HoughtonElem& g) {
  return std::all_of(g.translation().begin(), g.translation().end(), [](Index m) { return m == 0; });
}

FinitePerm as_finite_perm(const HoughtonElem& g) {
  if (!is_fsym(g)) throw std::invalid_argument("element has a nonzero translation: " + to_string(g));
  return make_canonical(g.n(), std::vector<Entry>(g.exceptions().begin(), g.exceptions().end()));
}

bool is_falt(const HoughtonElem& g) { return is_fsym(g) && sign(as_finite_perm(g)) == 1; }

Index max_exception_pos(const HoughtonElem& g) {
  Index m = 0;
  for (const auto& [p, q] : g.exceptions()) m = std::max({m, p.pos, q.pos});
  return m;
}

std::string to_string(const HoughtonElem& g) {
  std::string out = "T[";
  for (int k = 0; k < g.n(); ++k) {
    if (k) out += ",";
    out += std::to_string(g.translation()[static_cast<std::size_t>(k)]);
  }
  out += "]{";
  bool first = true;
  for (const auto& [p, q] : g.exceptions()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(p) + "->" + to_string(q);
  }
  return out + "}";
}

}  // namespace houghton
