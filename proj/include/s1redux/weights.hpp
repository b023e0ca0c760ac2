#pragma once

// Weight vectors of linear circle actions on C^n, their sign profiles,
// stabilizers of coordinate supports and the orbit-type stratification.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "s1redux/error.hpp"

namespace s1redux {

/// Integer weights (alpha_1, ..., alpha_n) of an effective linear circle
/// action.  Only obtainable through normalize_effective, so every instance
/// has gcd 1 over its nonzero entries.
class WeightVector {
 public:
  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }

  WeightVector negated() const {
    WeightVector out = *this;
    for (int& a : out.entries_) a = -a;
    return out;
  }

  int max_abs() const noexcept {
    int m = 0;
    for (int a : entries_) m = std::max(m, a < 0 ? -a : a);
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  friend WeightVector normalize_effective(std::span<const int> raw);

 private:
  explicit WeightVector(std::vector<int> e) : entries_(std::move(e)) {}
  std::vector<int> entries_;
};

/// Divides out the gcd of the nonzero entries.  Throws AllZeroWeights.
inline WeightVector normalize_effective(std::span<const int> raw) {
  int g = 0;
  for (int a : raw) g = std::gcd(g, a < 0 ? -a : a);
  if (g == 0) throw Error(Errc::AllZeroWeights, "weight vector has no nonzero entry");
  std::vector<int> e(raw.begin(), raw.end());
  for (int& a : e) a /= g;
  return WeightVector(std::move(e));
}

inline WeightVector normalize_effective(std::initializer_list<int> raw) {
  return normalize_effective(std::span<const int>(raw.begin(), raw.size()));
}

inline bool is_effective(std::span<const int> raw) {
  int g = 0;
  for (int a : raw) g = std::gcd(g, a < 0 ? -a : a);
  return g == 1;
}

struct SignProfile {
  std::size_t num_negative = 0;
  std::size_t num_zero = 0;
  std::size_t num_positive = 0;

  std::size_t num_nonzero() const noexcept { return num_negative + num_positive; }
  bool mixed() const noexcept { return num_negative > 0 && num_positive > 0; }
  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

inline SignProfile classify_signs(const WeightVector& w) {
  SignProfile p;
  for (int a : w.entries()) {
    if (a < 0) ++p.num_negative;
    else if (a == 0) ++p.num_zero;
    else ++p.num_positive;
  }
  return p;
}

/// Zero-based sorted coordinate indices.
using Support = std::vector<std::size_t>;

/// Stabilizer of a point with exactly the given support: either the whole
/// circle, or the cyclic group of the stated order (order 1 = trivial).
struct Stabilizer {
  bool full_circle = false;
  std::int64_t order = 1;

  static Stabilizer circle() { return {true, 0}; }
  static Stabilizer cyclic(std::int64_t n) { return {false, n}; }

  /// Subgroup containment between stabilizers (Z_m <= Z_n iff m | n).
  bool contained_in(const Stabilizer& other) const noexcept {
    if (other.full_circle) return true;
    if (full_circle) return false;
    return other.order % order == 0;
  }

  std::string to_string() const {
    return full_circle ? "S1" : (order == 1 ? "1" : "Z_" + std::to_string(order));
  }

  friend bool operator==(const Stabilizer&, const Stabilizer&) = default;
};

inline Stabilizer stabilizer(const WeightVector& w, const Support& support) {
  int g = 0;
  for (std::size_t i : support) {
    if (i >= w.size()) throw Error(Errc::DimensionMismatch, "support index out of range");
    const int a = w[i];
    g = std::gcd(g, a < 0 ? -a : a);
  }
  if (g == 0) return Stabilizer::circle();
  return Stabilizer::cyclic(g);
}

/// One orbit-type stratum of C^n (and of C^n / S^1): all points whose
/// stabilizer is the given group, merged across supports.
struct StratumDescriptor {
  std::vector<Support> support_class;  // every exact support realizing the stabilizer
  Stabilizer stabilizer;
  int dimension_in_m = 0;         // real dimension inside C^n
  int dimension_in_quotient = 0;  // real dimension inside C^n / S^1
  int depth = 0;
  std::vector<std::size_t> frontier_of;  // strata whose closure contains this one
};

/// Strict frontier order between stabilizer classes: stratum A lies in the
/// closure of stratum B iff Stab(B) is a proper subgroup of Stab(A).
inline bool frontier_below(const Stabilizer& a, const Stabilizer& b) {
  return !(a == b) && b.contained_in(a);
}

namespace detail {
inline constexpr std::size_t kMaxSupportEnumeration = 20;
}

/// Enumerates all 2^n exact supports, groups them by stabilizer and
/// populates frontier and depth.  Sorted by quotient dimension, then by
/// stabilizer (circle first, then larger orders first).
inline std::vector<StratumDescriptor> enumerate_orbit_types(const WeightVector& w) {
  const std::size_t n = w.size();
  if (n > detail::kMaxSupportEnumeration)
    throw Error(Errc::InvalidInput, "orbit-type enumeration limited to n <= 20");

  std::vector<StratumDescriptor> strata;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Support s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const Stabilizer st = stabilizer(w, s);
    auto it = std::find_if(strata.begin(), strata.end(),
                           [&](const StratumDescriptor& d) { return d.stabilizer == st; });
    if (it == strata.end()) {
      strata.push_back({});
      it = std::prev(strata.end());
      it->stabilizer = st;
    }
    it->dimension_in_m = std::max(it->dimension_in_m, 2 * static_cast<int>(s.size()));
    it->support_class.push_back(std::move(s));
  }
  for (auto& d : strata) {
    d.dimension_in_quotient = d.stabilizer.full_circle ? d.dimension_in_m : d.dimension_in_m - 1;
    std::sort(d.support_class.begin(), d.support_class.end());
  }
  std::sort(strata.begin(), strata.end(), [](const StratumDescriptor& a, const StratumDescriptor& b) {
    if (a.dimension_in_quotient != b.dimension_in_quotient)
      return a.dimension_in_quotient < b.dimension_in_quotient;
    if (a.stabilizer.full_circle != b.stabilizer.full_circle) return a.stabilizer.full_circle;
    return a.stabilizer.order > b.stabilizer.order;
  });

  for (std::size_t i = 0; i < strata.size(); ++i)
    for (std::size_t j = 0; j < strata.size(); ++j)
      if (frontier_below(strata[i].stabilizer, strata[j].stabilizer)) strata[i].frontier_of.push_back(j);

  // Longest chain upward; strata above have strictly larger quotient
  // dimension, so a reverse sweep sees every successor first.
  for (std::size_t r = strata.size(); r-- > 0;) {
    int best = 0;
    for (std::size_t j : strata[r].frontier_of) best = std::max(best, strata[j].depth + 1);
    strata[r].depth = best;
  }
  return strata;
}

}  // namespace s1redux
