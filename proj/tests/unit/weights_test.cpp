#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>
#include <random>

#include "s1redux/weights.hpp"

using namespace s1redux;

namespace {

// Stabilizer by brute force: which N-th roots of unity fix a point with the
// given support, for N = lcm of the weights on the support (1 if none).
Stabilizer brute_stabilizer(const std::vector<int>& w, const Support& support) {
  bool all_zero = true;
  for (auto i : support) all_zero = all_zero && w[i] == 0;
  if (all_zero) return Stabilizer::circle();
  long n = 1;
  for (auto i : support)
    if (w[i] != 0) n = std::lcm(n, static_cast<long>(std::abs(w[i])));
  long fixing = 0;
  for (long k = 0; k < n; ++k) {
    bool fixes = true;
    for (auto i : support) {
      const auto c = std::polar(1.0, 2.0 * M_PI * k * w[i] / n);
      fixes = fixes && std::abs(c - 1.0) < 1e-9;
    }
    fixing += fixes;
  }
  return Stabilizer::cyclic(fixing);
}

std::vector<std::vector<int>> small_vectors(int max_n, int max_w) {
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> v(n, -max_w);
    while (true) {
      if (is_effective(v)) out.push_back(v);
      int i = n - 1;
      while (i >= 0 && ++v[i] > max_w) v[i--] = -max_w;
      if (i < 0) break;
    }
  }
  return out;
}

}  // namespace

TEST(WeightVector, NormalizesByGcd) {
  const auto w = normalize_effective({2, -4, 0, 6});
  EXPECT_EQ(w.to_string(), "[1,-2,0,3]");
  EXPECT_EQ(w.max_abs(), 3);
}

TEST(WeightVector, AllZeroThrows) {
  try {
    normalize_effective({0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AllZeroWeights);
  }
}

TEST(WeightVector, SignProfile) {
  const auto p = classify_signs(normalize_effective({-1, 0, 2, 3}));
  EXPECT_EQ(p.num_negative, 1u);
  EXPECT_EQ(p.num_zero, 1u);
  EXPECT_EQ(p.num_positive, 2u);
  EXPECT_TRUE(p.mixed());
  EXPECT_FALSE(classify_signs(normalize_effective({1, 2})).mixed());
}

TEST(Stabilizer, WorkedExamples) {
  const auto w = normalize_effective({2, 3});
  EXPECT_EQ(stabilizer(w, {0}), Stabilizer::cyclic(2));
  EXPECT_EQ(stabilizer(w, {}), Stabilizer::circle());
  EXPECT_EQ(stabilizer(w, {0, 1}), Stabilizer::cyclic(1));
  EXPECT_EQ(stabilizer(w, {0, 1}).to_string(), "1");
}

TEST(Stabilizer, MatchesRootsOfUnityOracle) {
  for (const auto& raw : small_vectors(3, 4)) {
    const auto w = normalize_effective(raw);
    const std::size_t n = raw.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Support s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      EXPECT_EQ(stabilizer(w, s), brute_stabilizer(raw, s)) << w.to_string();
    }
  }
}

TEST(OrbitTypes, WorkedExamples) {
  auto t = enumerate_orbit_types(normalize_effective({1, -1}));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(t[0].stabilizer.full_circle);
  EXPECT_EQ(t[0].dimension_in_m, 0);
  EXPECT_EQ(t[1].stabilizer, Stabilizer::cyclic(1));
  EXPECT_EQ(t[1].dimension_in_m, 4);
  EXPECT_EQ(t[1].dimension_in_quotient, 3);
  EXPECT_EQ(t[0].depth, 1);
  EXPECT_EQ(t[1].depth, 0);

  t = enumerate_orbit_types(normalize_effective({2, 3}));
  ASSERT_EQ(t.size(), 4u);
  std::vector<std::string> names;
  for (const auto& s : t) names.push_back(s.stabilizer.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"S1", "Z_3", "Z_2", "1"}));
  EXPECT_EQ(t[0].depth, 2);  // S1 < Z_3 < 1

  t = enumerate_orbit_types(normalize_effective({1}));
  ASSERT_EQ(t.size(), 2u);
}

TEST(OrbitTypes, FrontierIsStrictPartialOrderAndDepthIsLongestChain) {
  for (const auto& raw : small_vectors(3, 4)) {
    const auto t = enumerate_orbit_types(normalize_effective(raw));
    const std::size_t m = t.size();
    auto below = [&](std::size_t i, std::size_t j) {
      return std::find(t[i].frontier_of.begin(), t[i].frontier_of.end(), j) != t[i].frontier_of.end();
    };
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_FALSE(below(i, i));
      for (std::size_t j = 0; j < m; ++j) {
        if (below(i, j)) {
          EXPECT_FALSE(below(j, i));
          EXPECT_LT(t[i].dimension_in_quotient, t[j].dimension_in_quotient);
        }
        for (std::size_t k = 0; k < m; ++k)
          if (below(i, j) && below(j, k)) {
            EXPECT_TRUE(below(i, k));
          }
      }
    }
    // Longest chain by explicit DFS.
    std::function<int(std::size_t)> chain = [&](std::size_t i) {
      int best = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (below(i, j)) best = std::max(best, 1 + chain(j));
      return best;
    };
    for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(t[i].depth, chain(i));
  }
}

TEST(OrbitTypes, EverySupportAppearsOnce) {
  const auto t = enumerate_orbit_types(normalize_effective({2, -4, 3, 0}));
  std::size_t total = 0;
  for (const auto& s : t) total += s.support_class.size();
  EXPECT_EQ(total, 16u);
}
