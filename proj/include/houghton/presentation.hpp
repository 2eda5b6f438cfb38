#pragma once

#include <string>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

struct RelationCheck {
  std::string relation;
  bool passed = true;
  int instances = 0;  // how many concrete equations were evaluated
};

struct PresentationReport {
  int n = 0;
  std::vector<RelationCheck> relations;

  bool all_passed() const;
};

/// Generators g_1..g_{n-1} and alpha; substitutable for mutation tests.
struct GeneratorSet {
  std::vector<HoughtonElem> g;
  HoughtonElem alpha;

  static GeneratorSet standard(int n);
};

/// Evaluates the defining relations of H_n on the standard generators.
/// For n >= 3 these are the five finite families; for n = 2 the infinite
/// family [alpha, alpha^(g1^k)] = 1 is checked for 1 < |k| <= k_bound.
/// Throws std::invalid_argument for n < 2.
PresentationReport check_presentation(int n, int k_bound = 10);
PresentationReport check_presentation(const GeneratorSet& gens, int k_bound = 10);

}  // namespace houghton
