#pragma once

#include <string>

#include "s1redux/abelian_group.hpp"
#include "s1redux/sphere_table.hpp"

namespace s1redux {

/// A homotopy group known either exactly or only up to rank (torsion
/// unknown, e.g. beyond the sphere table).
struct HomotopyValue {
  FgAbelianGroup group;
  bool exact = true;

  static HomotopyValue known(FgAbelianGroup g) { return {std::move(g), true}; }
  static HomotopyValue rank_only(int rank) { return {FgAbelianGroup::integers(rank), false}; }

  int rank() const { return group.rank(); }
  bool known_trivial() const { return exact && group.is_trivial(); }

  std::string to_string() const { return exact ? group.to_string() : "rank " + std::to_string(group.rank()) + " (torsion unknown)"; }
};

enum class Comparison { Equal, Different, Undetermined };

inline Comparison compare(const HomotopyValue& a, const HomotopyValue& b) {
  if (a.exact && b.exact) return a.group == b.group ? Comparison::Equal : Comparison::Different;
  if (a.rank() != b.rank()) return Comparison::Different;
  return Comparison::Undetermined;
}

inline HomotopyValue direct_sum(const HomotopyValue& a, const HomotopyValue& b) {
  if (a.exact && b.exact) return HomotopyValue::known(direct_sum(a.group, b.group));
  return HomotopyValue::rank_only(a.rank() + b.rank());
}

/// Table value when available, otherwise the rational rank.
inline HomotopyValue sphere_pi_value(int p, int k) {
  if (sphere_pi_in_table(p, k)) return HomotopyValue::known(sphere_pi(p, k));
  if (p < k) return HomotopyValue::known(FgAbelianGroup::trivial());
  if (k == 1) return HomotopyValue::known(p == 1 ? FgAbelianGroup::integers() : FgAbelianGroup::trivial());
  return HomotopyValue::rank_only(sphere_pi_rank(p, k));
}

}  // namespace s1redux
