#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/finite_perm.hpp"
#include "houghton/normalizer.hpp"
#include "houghton/shift.hpp"

namespace houghton {

inline constexpr std::size_t kDefaultNodeCeiling = 1'000'000;

/// Raised when an exhaustive enumeration would visit more nodes than allowed.
class CeilingExceeded : public std::runtime_error {
 public:
  explicit CeilingExceeded(std::size_t ceiling);
  std::size_t ceiling() const { return ceiling_; }

 private:
  std::size_t ceiling_;
};

/// Positions 1..depth on each of the n rays.
class TruncBox {
 public:
  TruncBox(int n, Index depth);

  int n() const { return n_; }
  Index depth() const { return depth_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(depth_); }
  bool contains(const Point& p) const;
  bool contains(const FinitePerm& f) const;
  /// Ray-major order.
  std::vector<Point> points() const;
  /// Transpositions of consecutive points in ray-major order; they generate
  /// the symmetric group on the box.
  std::vector<FinitePerm> adjacent_transpositions() const;

 private:
  int n_;
  Index depth_;
};

/// Every permutation supported in the box moving at most `support_limit`
/// points. Throws CeilingExceeded if the count would exceed `ceiling`.
std::vector<FinitePerm> enumerate_fsym(const TruncBox& box, std::size_t support_limit,
                                       std::size_t ceiling = kDefaultNodeCeiling);
/// Number of such permutations, without building them.
std::size_t count_fsym(const TruncBox& box, std::size_t support_limit);

/// The automorphism t -> phi(t) restricted to finitary permutations.
using Twist = std::function<FinitePerm(const FinitePerm&)>;
Twist twist_of(const NormElem& w);
Twist twist_of(const ShiftElem& psi);

/// Transpositions of X_1 whose shift coordinates are z and z+1 for
/// lo <= z < hi.
std::vector<FinitePerm> shift_window_generators(Index lo, Index hi);

struct SearchLimits {
  std::size_t support_limit = 6;  // largest support of a visited state
  std::size_t node_ceiling = kDefaultNodeCeiling;
};

/// Breadth-first exploration of the twisted orbit {h x phi(h)^-1} of a
/// finitary root, moving by z -> t z phi(t)^-1 for the given generators
/// and discarding states whose support exceeds the limit. Every visited
/// state comes with a witness.
class TwistedOrbit {
 public:
  TwistedOrbit(Twist twist, std::vector<FinitePerm> generators, FinitePerm root,
               SearchLimits limits);
  TwistedOrbit(const TwistedOrbit&) = delete;
  TwistedOrbit& operator=(const TwistedOrbit&) = delete;

  /// Explores until `target` is reached or the bounded orbit is exhausted.
  /// Throws CeilingExceeded past the node ceiling.
  bool reach(const FinitePerm& target);
  void exhaust();

  bool contains(const FinitePerm& z) const;
  /// h with z = h root phi(h)^-1; z must have been visited.
  FinitePerm witness(const FinitePerm& z) const;
  std::size_t size() const { return nodes_.size(); }
  const FinitePerm& state(std::size_t i) const { return nodes_[i].state; }
  bool exhausted() const { return frontier_ == nodes_.size(); }

 private:
  struct Node {
    FinitePerm state;
    std::ptrdiff_t parent;
    std::ptrdiff_t generator;
  };
  struct IndexHash {
    const std::vector<Node>* nodes;
    std::size_t operator()(std::size_t i) const;
  };
  struct IndexEq {
    const std::vector<Node>* nodes;
    bool operator()(std::size_t a, std::size_t b) const;
  };

  std::optional<std::size_t> find(const FinitePerm& z) const;
  bool expand_next(const FinitePerm* target);

  std::vector<FinitePerm> gens_;
  std::vector<FinitePerm> twisted_inv_;
  SearchLimits limits_;
  mutable std::vector<Node> nodes_;
  std::unordered_set<std::size_t, IndexHash, IndexEq> index_;
  std::size_t frontier_ = 0;
};

struct OrbitSearchResult {
  std::optional<HoughtonElem> witness;
  std::size_t explored = 0;
  std::size_t support_limit = 0;
  bool found() const { return witness.has_value(); }
};

/// Searches for h with y = h x mu(w)(h)^-1 inside FSym_n, using the box's
/// adjacent transpositions as moves. x and y must be finitary. A found
/// witness is always re-verified; failure to find proves nothing.
OrbitSearchResult orbit_search(const NormElem& w, const HoughtonElem& x, const HoughtonElem& y,
                               const TruncBox& box, SearchLimits limits);
/// The same search twisted by conjugation with psi on X_1, moving by the
/// shift-window transpositions covering the box.
OrbitSearchResult orbit_search(const ShiftElem& psi, const FinitePerm& x, const FinitePerm& y,
                               const TruncBox& box, SearchLimits limits);

struct ClassTable {
  std::vector<FinitePerm> elements;              // enumerated, sorted
  std::vector<std::vector<std::size_t>> classes; // indices into elements
  std::size_t merged_pairs() const;
};

/// Partitions the enumerated permutations (support <= support_limit) by
/// bounded orbit connectivity, exploring states of support up to
/// conj_support_limit. Two elements in one class are provably twisted
/// conjugate; elements in different classes may still be conjugate through
/// larger states.
ClassTable class_table(const NormElem& w, const TruncBox& box, std::size_t support_limit,
                       std::size_t conj_support_limit,
                       std::size_t ceiling = kDefaultNodeCeiling);
ClassTable class_table(const ShiftElem& psi, const TruncBox& box, std::size_t support_limit,
                       std::size_t conj_support_limit,
                       std::size_t ceiling = kDefaultNodeCeiling);

}  // namespace houghton
