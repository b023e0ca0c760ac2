#pragma once

// Finitely generated abelian groups Z^r + Z_{d_1} + ... + Z_{d_s} in
// invariant-factor normal form (d_1 | d_2 | ... | d_s, every d_i >= 2).

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "s1redux/error.hpp"
#include "s1redux/smith.hpp"

namespace s1redux {

class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup integers(int rank = 1) { return from_cyclic_orders(rank, {}); }
  static FgAbelianGroup cyclic(std::int64_t order) { return from_cyclic_orders(0, {order}); }

  /// Z^rank + Z_{o_1} + ... in any order; orders <= 1 contribute nothing.
  static FgAbelianGroup from_cyclic_orders(int rank, const std::vector<std::int64_t>& orders) {
    if (rank < 0) throw Error(Errc::InvalidInput, "negative rank");
    const std::size_t s = orders.size();
    IntMatrix rel(s, std::vector<std::int64_t>(s, 0));
    for (std::size_t i = 0; i < s; ++i) {
      if (orders[i] < 0) throw Error(Errc::InvalidInput, "negative cyclic order");
      rel[i][i] = orders[i];
    }
    FgAbelianGroup g = from_relations(rel, s);
    g.rank_ += rank;
    return g;
  }

  /// Cokernel of the relation rows acting on Z^generators.
  static FgAbelianGroup from_relations(const IntMatrix& relations, std::size_t generators) {
    for (const auto& r : relations)
      if (r.size() != generators) throw Error(Errc::InvalidInput, "relation row length mismatch");
    const auto diag = smith_diagonal(relations);
    FgAbelianGroup g;
    g.rank_ = static_cast<int>(generators - diag.size());
    for (auto d : diag)
      if (d > 1) g.torsion_.push_back(d);
    return g;
  }

  int rank() const noexcept { return rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }

  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_cyclic() const noexcept { return rank_ + static_cast<int>(torsion_.size()) <= 1; }

  /// Order of a finite group; 0 when infinite.
  std::int64_t order() const noexcept {
    if (rank_ > 0) return 0;
    std::int64_t o = 1;
    for (auto d : torsion_) o *= d;
    return o;
  }

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

  std::string to_string() const {
    if (is_trivial()) return "1";
    std::string s;
    auto add = [&](const std::string& t) { s += (s.empty() ? "" : " ⊕ ") + t; };
    if (rank_ == 1) add("Z");
    else if (rank_ > 1) add("Z^" + std::to_string(rank_));
    for (auto d : torsion_) add("Z_" + std::to_string(d));
    return s;
  }

 private:
  int rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<std::int64_t> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbelianGroup::from_cyclic_orders(a.rank() + b.rank(), orders);
}

inline FgAbelianGroup direct_sum(std::initializer_list<FgAbelianGroup> gs) {
  FgAbelianGroup out;
  for (const auto& g : gs) out = direct_sum(out, g);
  return out;
}

inline FgAbelianGroup power(const FgAbelianGroup& g, int times) {
  FgAbelianGroup out;
  for (int i = 0; i < times; ++i) out = direct_sum(out, g);
  return out;
}

inline bool is_finite(const FgAbelianGroup& g) { return g.is_finite(); }
inline bool is_trivial(const FgAbelianGroup& g) { return g.is_trivial(); }
inline bool equals(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

}  // namespace s1redux
