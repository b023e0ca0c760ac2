#pragma once

// Compact Lie groups H = (T^q x K) / Gamma with K a product of SU(2)
// factors, described by the homotopy data the obstruction search needs.

#include <algorithm>
#include <string>
#include <vector>

#include "s1redux/abelian_group.hpp"
#include "s1redux/error.hpp"
#include "s1redux/homotopy_value.hpp"

namespace s1redux {

struct CompactGroupDescriptor {
  std::string name;
  int dim = 0;
  FgAbelianGroup pi0;  // component group, finite
  FgAbelianGroup pi1;  // of the identity component
  FgAbelianGroup pi2;  // always trivial for compact Lie groups
  int pi3_rank = 0;    // number of simple factors of K
  bool semisimple_factor = false;
  int torus_rank = 0;

  /// Builds and validates the structure rule: dim = q + 3 * (#SU(2)
  /// factors), rank pi_1 = q, pi_2 = 1, semisimple iff pi_3 is infinite.
  static CompactGroupDescriptor make(std::string name, int torus_rank, int su2_factors, FgAbelianGroup pi0,
                                     FgAbelianGroup pi1) {
    CompactGroupDescriptor h;
    h.name = std::move(name);
    h.torus_rank = torus_rank;
    h.dim = torus_rank + 3 * su2_factors;
    h.pi0 = std::move(pi0);
    h.pi1 = std::move(pi1);
    h.pi3_rank = su2_factors;
    h.semisimple_factor = su2_factors > 0;
    h.validate();
    return h;
  }

  void validate() const {
    if (!pi0.is_finite()) throw Error(Errc::InvalidInput, name + ": component group must be finite");
    if (!pi2.is_trivial()) throw Error(Errc::InvalidInput, name + ": pi_2 of a compact Lie group is trivial");
    if (semisimple_factor && pi3_rank < 1) throw Error(Errc::InvalidInput, name + ": semisimple factor needs pi_3 rank >= 1");
    if (pi1.rank() != torus_rank) throw Error(Errc::InvalidInput, name + ": rank of pi_1 must equal the torus rank");
    if (dim != torus_rank + 3 * pi3_rank) throw Error(Errc::InvalidInput, name + ": dimension inconsistent with factors");
  }

  bool finite() const { return dim == 0; }

  /// pi_q(H); for q >= 2 this is pi_q of the SU(2)^r cover, i.e. pi_q(S^3)^r.
  HomotopyValue pi(int q) const {
    if (q == 0) return HomotopyValue::known(pi0);
    if (q == 1) return HomotopyValue::known(pi1);
    if (q == 2) return HomotopyValue::known(pi2);
    HomotopyValue out = HomotopyValue::known(FgAbelianGroup::trivial());
    for (int i = 0; i < pi3_rank; ++i) out = direct_sum(out, sphere_pi_value(q, 3));
    return out;
  }
};

inline CompactGroupDescriptor trivial_group() {
  return CompactGroupDescriptor::make("1", 0, 0, FgAbelianGroup::trivial(), FgAbelianGroup::trivial());
}
inline CompactGroupDescriptor finite_cyclic(int q) {
  return CompactGroupDescriptor::make("Z_" + std::to_string(q), 0, 0, FgAbelianGroup::cyclic(q), FgAbelianGroup::trivial());
}
inline CompactGroupDescriptor circle_group() {
  return CompactGroupDescriptor::make("S1", 1, 0, FgAbelianGroup::trivial(), FgAbelianGroup::integers());
}
inline CompactGroupDescriptor torus2() {
  return CompactGroupDescriptor::make("T2", 2, 0, FgAbelianGroup::trivial(), FgAbelianGroup::integers(2));
}
inline CompactGroupDescriptor su2() {
  return CompactGroupDescriptor::make("SU2", 0, 1, FgAbelianGroup::trivial(), FgAbelianGroup::trivial());
}
inline CompactGroupDescriptor so3() {
  return CompactGroupDescriptor::make("SO3", 0, 1, FgAbelianGroup::trivial(), FgAbelianGroup::cyclic(2));
}
/// U(2) = (S^1 x SU(2)) / Z_2.
inline CompactGroupDescriptor u2() {
  return CompactGroupDescriptor::make("U2", 1, 1, FgAbelianGroup::trivial(), FgAbelianGroup::integers());
}

inline CompactGroupDescriptor product(const CompactGroupDescriptor& a, const CompactGroupDescriptor& b) {
  return CompactGroupDescriptor::make(a.name + "x" + b.name, a.torus_rank + b.torus_rank, a.pi3_rank + b.pi3_rank,
                                      direct_sum(a.pi0, b.pi0), direct_sum(a.pi1, b.pi1));
}

/// trivial, Z_2..Z_12, S^1, T^2, SU(2), SO(3), U(2), and every product of
/// two nontrivial entries among Z_q, S^1, T^2, SU(2), SO(3).
inline std::vector<CompactGroupDescriptor> default_catalog() {
  std::vector<CompactGroupDescriptor> base;
  for (int q = 2; q <= 12; ++q) base.push_back(finite_cyclic(q));
  base.push_back(circle_group());
  base.push_back(torus2());
  base.push_back(su2());
  base.push_back(so3());

  std::vector<CompactGroupDescriptor> out;
  out.push_back(trivial_group());
  out.insert(out.end(), base.begin(), base.end());
  out.push_back(u2());
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) out.push_back(product(base[i], base[j]));
  return out;
}

}  // namespace s1redux
