#pragma once

// Homotopy groups pi_p(S^k) for 1 <= k <= 15, 0 <= p <= 15, through the
// 7-stem (Toda's tables).  Rational information (Serre) is available for
// every (p, k).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "s1redux/abelian_group.hpp"
#include "s1redux/error.hpp"

namespace s1redux {

inline constexpr int kSphereTableMaxDim = 15;
inline constexpr int kSphereTableMaxDegree = 15;
inline constexpr int kSphereTableMaxStem = 7;

namespace detail {

struct StemEntry {
  int rank;
  std::vector<std::int64_t> torsion;
};

/// pi_{k+stem}(S^k) for stem 1..7, k >= 2.  Stable from k = stem + 2 on.
inline StemEntry stem_entry(int stem, int k) {
  switch (stem) {
    case 1:
      if (k == 2) return {1, {}};
      return {0, {2}};
    case 2:
      return {0, {2}};
    case 3:
      if (k == 2) return {0, {2}};
      if (k == 3) return {0, {12}};
      if (k == 4) return {1, {12}};
      return {0, {24}};
    case 4:
      if (k == 2) return {0, {12}};
      if (k == 3) return {0, {2}};
      if (k == 4) return {0, {2, 2}};
      if (k == 5) return {0, {2}};
      return {0, {}};
    case 5:
      if (k == 2) return {0, {2}};
      if (k == 3) return {0, {2}};
      if (k == 4) return {0, {2, 2}};
      if (k == 5) return {0, {2}};
      if (k == 6) return {1, {}};
      return {0, {}};
    case 6:
      if (k == 2) return {0, {2}};
      if (k == 3) return {0, {3}};
      if (k == 4) return {0, {24, 3}};
      return {0, {2}};
    case 7:
      if (k == 2) return {0, {3}};
      if (k == 3) return {0, {15}};
      if (k == 4) return {0, {15}};
      if (k == 5) return {0, {30}};
      if (k == 6) return {0, {60}};
      if (k == 7) return {0, {120}};
      if (k == 8) return {1, {120}};
      return {0, {240}};
    default:
      break;
  }
  throw Error(Errc::OutOfTable, "stem " + std::to_string(stem));
}

}  // namespace detail

/// Serre: pi_p(S^k) is infinite exactly when p = k, or k is even and p = 2k - 1.
inline bool sphere_pi_finite(int p, int k) {
  if (p < 0 || k < 1) throw Error(Errc::InvalidInput, "sphere_pi_finite needs p >= 0, k >= 1");
  return !(p == k || (k % 2 == 0 && p == 2 * k - 1));
}

inline int sphere_pi_rank(int p, int k) { return sphere_pi_finite(p, k) ? 0 : 1; }

inline bool sphere_pi_in_table(int p, int k) {
  if (k < 1 || k > kSphereTableMaxDim || p < 0 || p > kSphereTableMaxDegree) return false;
  return p <= k || k == 1 || p - k <= kSphereTableMaxStem;
}

/// Throws OutOfTable outside the shipped range.
inline FgAbelianGroup sphere_pi(int p, int k) {
  if (!sphere_pi_in_table(p, k))
    throw Error(Errc::OutOfTable, "pi_" + std::to_string(p) + "(S^" + std::to_string(k) + ")");
  if (p < k) return FgAbelianGroup::trivial();
  if (p == k) return FgAbelianGroup::integers();
  if (k == 1) return FgAbelianGroup::trivial();  // universal cover R
  const auto e = detail::stem_entry(p - k, k);
  return FgAbelianGroup::from_cyclic_orders(e.rank, e.torsion);
}

}  // namespace s1redux
