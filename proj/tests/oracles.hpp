#pragma once

// Independent reference computations shared by the unit and acceptance
// suites.  Deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "s1redux/abelian_group.hpp"
#include "s1redux/hilbert.hpp"

namespace oracle {

/// Minimal nonzero invariant exponents (a; b) of total degree <= bound,
/// by enumerating every exponent vector and discarding those that
/// dominate a smaller invariant one.
inline std::set<s1redux::MonomialExponent> brute_force_basis(const std::vector<int>& w, int bound) {
  const std::size_t n = w.size(), q = 2 * n;
  std::vector<std::vector<int>> by_degree_invariant;
  std::vector<int> x(q, 0);
  // enumerate compositions of every degree d <= bound
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == q) {
      std::int64_t s = 0;
      int deg = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<std::int64_t>(w[k]) * (x[k] - x[n + k]);
      for (int v : x) deg += v;
      if (s == 0 && deg > 0) by_degree_invariant.push_back(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
    x[i] = 0;
  };
  rec(0, bound);
  auto degree = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(by_degree_invariant.begin(), by_degree_invariant.end(),
                   [&](const auto& a, const auto& b) { return degree(a) < degree(b); });
  std::vector<std::vector<int>> minimal;
  for (const auto& v : by_degree_invariant) {
    bool reducible = false;
    for (const auto& m : minimal) {
      bool dom = true;
      for (std::size_t i = 0; i < q && dom; ++i) dom = v[i] >= m[i];
      if (dom) {
        reducible = true;
        break;
      }
    }
    if (!reducible) minimal.push_back(v);
  }
  std::set<s1redux::MonomialExponent> out;
  for (const auto& m : minimal)
    out.insert({std::vector<int>(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n)),
                std::vector<int>(m.begin() + static_cast<std::ptrdiff_t>(n), m.end())});
  return out;
}

/// Element-order histogram of Z_{n_1} x ... x Z_{n_k} by enumeration.
inline std::map<std::int64_t, std::int64_t> cyclic_product_order_counts(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::int64_t> counts;
  std::vector<std::int64_t> x(orders.size(), 0);
  while (true) {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) o = std::lcm(o, orders[i] / std::gcd(orders[i], x[i]));
    ++counts[o];
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == orders[i]) x[i++] = 0;
    if (i == x.size()) break;
  }
  return counts;
}

}  // namespace oracle
