#include "houghton/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "houghton/twisted.hpp"

namespace houghton {

CeilingExceeded::CeilingExceeded(std::size_t ceiling)
    : std::runtime_error("node ceiling of " + std::to_string(ceiling) + " exceeded"),
      ceiling_(ceiling) {}

TruncBox::TruncBox(int n, Index depth) : n_(n), depth_(depth) {
  if (n < 1) throw std::invalid_argument("box needs at least one ray");
  if (depth < 2) throw std::invalid_argument("box depth must be at least 2");
}

bool TruncBox::contains(const Point& p) const {
  return p.ray >= 1 && p.ray <= n_ && p.pos >= 1 && p.pos <= depth_;
}

bool TruncBox::contains(const FinitePerm& f) const {
  if (f.n() != n_) return false;
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [&](const auto& e) { return contains(e.first); });
}

std::vector<Point> TruncBox::points() const {
  std::vector<Point> pts;
  pts.reserve(size());
  for (int r = 1; r <= n_; ++r)
    for (Index p = 1; p <= depth_; ++p) pts.push_back({r, p});
  return pts;
}

std::vector<FinitePerm> TruncBox::adjacent_transpositions() const {
  const auto pts = points();
  std::vector<FinitePerm> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    out.push_back(FinitePerm::transposition(n_, pts[i], pts[i + 1]));
  return out;
}

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = saturating_mul(r, n - k + i) / i;
  return r;
}

std::size_t derangements(std::size_t k) {
  // D(0) = 1, D(1) = 0, D(k) = (k-1)(D(k-1) + D(k-2))
  std::size_t a = 1, b = 0;
  if (k == 0) return 1;
  for (std::size_t i = 2; i <= k; ++i) {
    const std::size_t c = saturating_mul(i - 1, saturating_add(a, b));
    a = b;
    b = c;
  }
  return b;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t count_fsym(const TruncBox& box, std::size_t support_limit) {
  std::size_t total = 0;
  const std::size_t limit = std::min(support_limit, box.size());
  for (std::size_t k = 0; k <= limit; ++k)
    total = saturating_add(total, saturating_mul(binomial(box.size(), k), derangements(k)));
  return total;
}

std::vector<FinitePerm> enumerate_fsym(const TruncBox& box, std::size_t support_limit,
                                       std::size_t ceiling) {
  if (count_fsym(box, support_limit) > ceiling) throw CeilingExceeded(ceiling);
  const auto pts = box.points();
  const std::size_t limit = std::min(support_limit, pts.size());
  std::vector<FinitePerm> out;
  out.emplace_back(box.n());
  for (std::size_t k = 2; k <= limit; ++k) {
    for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<std::size_t> img = idx;
      do {
        bool deranged = true;
        for (std::size_t i = 0; i < k && deranged; ++i) deranged = img[i] != idx[i];
        if (!deranged) continue;
        std::vector<FinitePerm::Entry> entries;
        entries.reserve(k);
        for (std::size_t i = 0; i < k; ++i) entries.push_back({pts[idx[i]], pts[img[i]]});
        out.push_back(make_canonical(box.n(), std::move(entries)));
      } while (std::next_permutation(img.begin(), img.end()));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Twist twist_of(const NormElem& w) {
  return [w](const FinitePerm& t) { return aut_apply(w, t); };
}

Twist twist_of(const ShiftElem& psi) {
  return [psi](const FinitePerm& t) { return conjugate(t, psi); };
}

std::vector<FinitePerm> shift_window_generators(Index lo, Index hi) {
  std::vector<FinitePerm> out;
  for (Index z = lo; z < hi; ++z)
    out.push_back(FinitePerm::transposition(1, shift_point(z), shift_point(z + 1)));
  return out;
}

std::size_t TwistedOrbit::IndexHash::operator()(std::size_t i) const {
  return FinitePermHash{}((*nodes)[i].state);
}

bool TwistedOrbit::IndexEq::operator()(std::size_t a, std::size_t b) const {
  return (*nodes)[a].state == (*nodes)[b].state;
}

TwistedOrbit::TwistedOrbit(Twist twist, std::vector<FinitePerm> generators, FinitePerm root,
                           SearchLimits limits)
    : gens_(std::move(generators)),
      limits_(limits),
      index_(64, IndexHash{&nodes_}, IndexEq{&nodes_}) {
  for (const auto& t : gens_) {
    if (t.n() != root.n()) throw std::invalid_argument("generator and root for different n");
    twisted_inv_.push_back(inverse(twist(t)));
  }
  nodes_.push_back({std::move(root), -1, -1});
  index_.insert(0);
}

std::optional<std::size_t> TwistedOrbit::find(const FinitePerm& z) const {
  nodes_.push_back({z, -1, -1});
  const auto it = index_.find(nodes_.size() - 1);
  nodes_.pop_back();
  if (it == index_.end()) return std::nullopt;
  return *it;
}

bool TwistedOrbit::contains(const FinitePerm& z) const { return find(z).has_value(); }

bool TwistedOrbit::expand_next(const FinitePerm* target) {
  const std::size_t cur = frontier_++;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    FinitePerm next = gens_[g] * nodes_[cur].state * twisted_inv_[g];
    if (next.support_size() > limits_.support_limit) continue;
    nodes_.push_back({std::move(next), static_cast<std::ptrdiff_t>(cur),
                      static_cast<std::ptrdiff_t>(g)});
    if (!index_.insert(nodes_.size() - 1).second) {
      nodes_.pop_back();
      continue;
    }
    if (nodes_.size() > limits_.node_ceiling) throw CeilingExceeded(limits_.node_ceiling);
    if (target && nodes_.back().state == *target) return true;
  }
  return false;
}

bool TwistedOrbit::reach(const FinitePerm& target) {
  if (contains(target)) return true;
  while (!exhausted())
    if (expand_next(&target)) return true;
  return false;
}

void TwistedOrbit::exhaust() {
  while (!exhausted()) expand_next(nullptr);
}

FinitePerm TwistedOrbit::witness(const FinitePerm& z) const {
  const auto at = find(z);
  if (!at) throw std::invalid_argument("state not visited");
  FinitePerm h(nodes_.front().state.n());
  for (auto i = static_cast<std::ptrdiff_t>(*at); nodes_[static_cast<std::size_t>(i)].parent >= 0;
       i = nodes_[static_cast<std::size_t>(i)].parent)
    h = h * gens_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(i)].generator)];
  return h;
}

namespace {

std::vector<FinitePerm> box_shift_generators(const TruncBox& box) {
  if (box.n() != 1) throw std::invalid_argument("shift search needs a box on X_1");
  const Index lo = -(box.depth() / 2);
  const Index hi = (box.depth() + 1) / 2 - 1;
  return shift_window_generators(lo, hi);
}

OrbitSearchResult run_search(const Twist& twist, std::vector<FinitePerm> gens,
                             const FinitePerm& x, const FinitePerm& y, SearchLimits limits) {
  limits.support_limit = std::max({limits.support_limit, x.support_size(), y.support_size()});
  TwistedOrbit orbit(twist, std::move(gens), x, limits);
  OrbitSearchResult result;
  result.support_limit = limits.support_limit;
  if (orbit.reach(y)) result.witness = HoughtonElem::from_finite_perm(orbit.witness(y));
  result.explored = orbit.size();
  return result;
}

template <class Group>
ClassTable build_table(const Group& phi, const TruncBox& box, std::vector<FinitePerm> gens,
                       std::size_t support_limit, std::size_t conj_support_limit,
                       std::size_t ceiling) {
  if (conj_support_limit < support_limit)
    throw std::invalid_argument("conjugator support limit below element support limit");
  ClassTable table;
  table.elements = enumerate_fsym(box, support_limit, ceiling);
  std::vector<bool> assigned(table.elements.size(), false);
  const Twist twist = twist_of(phi);
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    if (assigned[i]) continue;
    TwistedOrbit orbit(twist, gens, table.elements[i], {conj_support_limit, ceiling});
    orbit.exhaust();
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < orbit.size(); ++s) {
      const auto& z = orbit.state(s);
      if (z.support_size() > support_limit || !box.contains(z)) continue;
      const auto it = std::lower_bound(table.elements.begin(), table.elements.end(), z);
      const auto idx = static_cast<std::size_t>(it - table.elements.begin());
      assigned[idx] = true;
      members.push_back(idx);
    }
    std::sort(members.begin(), members.end());
    table.classes.push_back(std::move(members));
  }
  return table;
}

}  // namespace

OrbitSearchResult orbit_search(const NormElem& w, const HoughtonElem& x, const HoughtonElem& y,
                               const TruncBox& box, SearchLimits limits) {
  if (w.n() != box.n() || x.n() != box.n() || y.n() != box.n())
    throw std::invalid_argument("search inputs for different n");
  auto result = run_search(twist_of(w), box.adjacent_transpositions(), as_finite_perm(x),
                           as_finite_perm(y), limits);
  if (result.witness && !verify_witness(w, x, y, *result.witness))
    throw std::logic_error("orbit search produced an invalid witness");
  return result;
}

OrbitSearchResult orbit_search(const ShiftElem& psi, const FinitePerm& x, const FinitePerm& y,
                               const TruncBox& box, SearchLimits limits) {
  auto result = run_search(twist_of(psi), box_shift_generators(box), x, y, limits);
  if (result.witness && !verify_witness(psi, x, y, as_finite_perm(*result.witness)))
    throw std::logic_error("orbit search produced an invalid witness");
  return result;
}

std::size_t ClassTable::merged_pairs() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size() * (c.size() - 1) / 2;
  return total;
}

ClassTable class_table(const NormElem& w, const TruncBox& box, std::size_t support_limit,
                       std::size_t conj_support_limit, std::size_t ceiling) {
  if (w.n() != box.n()) throw std::invalid_argument("automorphism and box for different n");
  return build_table(w, box, box.adjacent_transpositions(), support_limit, conj_support_limit,
                     ceiling);
}

ClassTable class_table(const ShiftElem& psi, const TruncBox& box, std::size_t support_limit,
                       std::size_t conj_support_limit, std::size_t ceiling) {
  return build_table(psi, box, box_shift_generators(box), support_limit, conj_support_limit,
                     ceiling);
}

}  // namespace houghton
