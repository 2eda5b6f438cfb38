#pragma once

#include "houghton/oracle.hpp"
#include "houghton/twisted.hpp"

namespace houghton {

struct DecideOptions {
  Index box_depth = 6;            // widened to cover the inputs
  std::size_t support_limit = 6;  // state bound for the fallback search
  std::size_t node_ceiling = kDefaultNodeCeiling;
};

/// Decides [x] = [y] in R[mu(w)].
///
/// Exact paths: x == y; inner automorphisms by finitary elements (ordinary
/// conjugacy, cycle types); cycles on one ray after pulling back along
/// w = sigma g'. Other finitary inputs go to a bounded orbit search, which
/// can only report Equivalent or Unknown. Non-finitary inputs outside the
/// exact paths are Unknown with bound 0.
TCResult decide_twisted(const NormElem& w, const HoughtonElem& x, const HoughtonElem& y,
                        const DecideOptions& opts = {});

/// Decides [x] = [y] in R[mu(psi)] on FSym_1.
TCResult decide_twisted(const ShiftElem& psi, const FinitePerm& x, const FinitePerm& y,
                        const DecideOptions& opts = {});

}  // namespace houghton
