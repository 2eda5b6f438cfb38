#include "houghton/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace houghton {

bool PresentationReport::all_passed() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationCheck& r) { return r.passed; });
}

GeneratorSet GeneratorSet::standard(int n) {
  if (n < 2) throw std::invalid_argument("H_n has a finite generating set only for n >= 2");
  GeneratorSet s{{}, gen_alpha(n)};
  for (int i = 1; i <= n - 1; ++i) s.g.push_back(gen_g(n, i));
  return s;
}

PresentationReport check_presentation(int n, int k_bound) {
  return check_presentation(GeneratorSet::standard(n), k_bound);
}

PresentationReport check_presentation(const GeneratorSet& gens, int k_bound) {
  const int n = gens.alpha.n();
  if (n < 2) throw std::invalid_argument("presentation check needs n >= 2");
  if (static_cast<int>(gens.g.size()) != n - 1)
    throw std::invalid_argument("expected n-1 translation generators");

  const HoughtonElem one(n);
  const HoughtonElem& a = gens.alpha;
  const HoughtonElem& g1 = gens.g.front();
  PresentationReport report{n, {}};

  auto single = [&](std::string name, bool ok) {
    report.relations.push_back({std::move(name), ok, 1});
  };

  single("alpha^2 = 1", a * a == one);
  single("(alpha alpha^g1)^3 = 1", pow(a * conjugate(a, g1), 3) == one);

  if (n >= 3) {
    single("[alpha, alpha^(g1^2)] = 1", commutator(a, conjugate(a, pow(g1, 2))) == one);
    RelationCheck comm{"alpha = [g_i, g_j], i != j", true, 0};
    RelationCheck conj{"alpha^(g_i^-1) = alpha^(g_j^-1), i != j", true, 0};
    for (int i = 0; i < n - 1; ++i) {
      for (int j = 0; j < n - 1; ++j) {
        if (i == j) continue;
        const auto& gi = gens.g[static_cast<std::size_t>(i)];
        const auto& gj = gens.g[static_cast<std::size_t>(j)];
        ++comm.instances;
        comm.passed = comm.passed && commutator(gi, gj) == a;
        ++conj.instances;
        conj.passed = conj.passed && conjugate(a, inverse(gi)) == conjugate(a, inverse(gj));
      }
    }
    report.relations.push_back(comm);
    report.relations.push_back(conj);
  } else {
    RelationCheck fam{"[alpha, alpha^(g1^k)] = 1, 1 < |k| <= " + std::to_string(k_bound), true, 0};
    for (int k = 2; k <= k_bound; ++k) {
      for (int s : {k, -k}) {
        ++fam.instances;
        fam.passed = fam.passed && commutator(a, conjugate(a, pow(g1, s))) == one;
      }
    }
    report.relations.push_back(fam);
  }
  return report;
}

}  // namespace houghton
