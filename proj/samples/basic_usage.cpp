// Walks through the main entry points on the weights (1, 1, -1, -1).

#include <iostream>

#include "s1redux.hpp"

int main() {
  using namespace s1redux;

  const WeightVector w = normalize_effective({1, 1, -1, -1});

  const auto d = cone_link_decomposition(w);
  std::cout << "zero fiber: " << to_string(d.kind) << " over " << d.link_description() << "\n";
  std::cout << "reduced dimension at 0: " << reduced_dimension(w, 0.0) << "\n";

  const auto basis = invariant_monoid_basis(w);
  std::cout << basis.generators.size() << " invariant generators:";
  for (const auto& g : real_generators(basis)) std::cout << " " << g.label;
  std::cout << "\n";

  for (const auto& s : enumerate_orbit_types(w))
    std::cout << "stratum " << s.stabilizer.to_string() << ": dim " << s.dimension_in_quotient << ", depth " << s.depth
              << "\n";

  const auto search = obstruction_search(d.l_minus, d.l_plus, 15);
  std::cout << "obstruction search: " << search.status() << "\n";
  for (const auto& entry : search.log) {
    if (entry.provenance.rfind("H=", 0) == 0) break;
    std::cout << "  " << entry.constraint << "\n";
  }

  const auto v = main_theorem_verdict(w, 0.0);
  std::cout << "verdict: " << to_string(v.outcome) << "\n";

  const auto s3 = group_groupoid(FiniteGroup::s3());
  std::cout << "pi_1 B(S_3): " << pi1_of_classifying_space(s3, 0).to_string() << "\n";
}
