#pragma once

// Nerve of a finite groupoid.  Level 0 holds objects, level n >= 1 holds
// chains (g_1, ..., g_n) with s(g_i) = t(g_{i+1}).
//
//   d_0(g_1..g_n) = (g_2..g_n)
//   d_i(g_1..g_n) = (g_1, .., g_i g_{i+1}, .., g_n)    0 < i < n
//   d_n(g_1..g_n) = (g_1..g_{n-1})
//   d^1_0 = s, d^1_1 = t
//   e_i inserts u(s(g_i)) after g_i; e_0 inserts u(t(g_1)) in front;
//   on level 0, e_0(x) = u(x).

#include <optional>
#include <string>
#include <vector>

#include "s1redux/error.hpp"
#include "s1redux/groupoid.hpp"

namespace s1redux {

inline constexpr int kMaxNerveLevel = 6;
inline constexpr int kMaxSimplicialCheckLevel = 5;

/// A simplex of the nerve: object ids on level 0, arrow ids otherwise.
/// An entry of -1 marks an undefined composite.
using Simplex = std::vector<int>;

inline Simplex face(const FiniteGroupoid& g, int n, int i, const Simplex& x) {
  if (n < 1 || i < 0 || i > n || static_cast<int>(x.size()) != n)
    throw Error(Errc::InvalidInput, "face index out of range");
  auto bad = [&](int a) { return a < 0; };
  if (n == 1) {
    if (bad(x[0])) return {-1};
    return {i == 0 ? g.s(x[0]) : g.t(x[0])};
  }
  if (i == 0) return Simplex(x.begin() + 1, x.end());
  if (i == n) return Simplex(x.begin(), x.end() - 1);
  Simplex out;
  for (int k = 0; k < n; ++k) {
    if (k == i - 1) {
      out.push_back(bad(x[k]) || bad(x[k + 1]) ? -1 : g.compose(x[k], x[k + 1]));
      ++k;
    } else {
      out.push_back(x[k]);
    }
  }
  return out;
}

inline Simplex degeneracy(const FiniteGroupoid& g, int n, int i, const Simplex& x) {
  if (n < 0 || i < 0 || i > n || static_cast<int>(x.size()) != (n == 0 ? 1 : n))
    throw Error(Errc::InvalidInput, "degeneracy index out of range");
  if (n == 0) return {x[0] < 0 ? -1 : g.unit(x[0])};
  Simplex out = x;
  if (i == 0) {
    out.insert(out.begin(), x[0] < 0 ? -1 : g.unit(g.t(x[0])));
  } else {
    out.insert(out.begin() + i, x[i - 1] < 0 ? -1 : g.unit(g.s(x[i - 1])));
  }
  return out;
}

struct NerveLevel {
  int n = 0;
  std::vector<Simplex> tuples;
  const FiniteGroupoid* groupoid = nullptr;

  std::size_t size() const { return tuples.size(); }
  Simplex face(int i, const Simplex& x) const { return s1redux::face(*groupoid, n, i, x); }
  Simplex degeneracy(int i, const Simplex& x) const { return s1redux::degeneracy(*groupoid, n, i, x); }
};

/// The groupoid must outlive the returned level.
inline NerveLevel nerve_level(const FiniteGroupoid& g, int n) {
  if (n < 0) throw Error(Errc::InvalidInput, "nerve level must be >= 0");
  if (n > kMaxNerveLevel) throw Error(Errc::LevelTooLarge, "nerve level " + std::to_string(n) + " > " + std::to_string(kMaxNerveLevel));
  NerveLevel lvl;
  lvl.n = n;
  lvl.groupoid = &g;
  if (n == 0) {
    for (int x = 0; x < g.num_objects(); ++x) lvl.tuples.push_back({x});
    return lvl;
  }
  // Extend chains to the right: g_{k+1} must satisfy t(g_{k+1}) = s(g_k).
  std::vector<Simplex> cur;
  for (int a = 0; a < g.num_arrows(); ++a) cur.push_back({a});
  for (int k = 1; k < n; ++k) {
    std::vector<Simplex> next;
    for (const auto& c : cur)
      for (int a = 0; a < g.num_arrows(); ++a)
        if (g.t(a) == g.s(c.back())) {
          next.push_back(c);
          next.back().push_back(a);
        }
    cur = std::move(next);
  }
  lvl.tuples = std::move(cur);
  return lvl;
}

inline std::string simplex_to_string(const FiniteGroupoid& g, int n, const Simplex& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ", ";
    if (x[k] < 0) out += "?";
    else out += n == 0 ? g.objects()[x[k]] : g.arrows()[x[k]].name;
  }
  return out + ")";
}

struct SimplicialViolation {
  int level = 0;         // level of the intermediate simplex
  int source_level = 0;  // level of the simplex the identity was applied to
  std::string identity;  // e.g. "d_1 d_2 = d_1 d_1"
  std::string simplex;
  std::string lhs, rhs;
};

struct SimplicialReport {
  int n_max = 0;
  std::size_t identities_checked = 0;
  std::optional<SimplicialViolation> violation;

  bool ok() const { return !violation; }
};

/// Checks, for every simplex on levels up to n_max:
///   d_i d_j = d_{j-1} d_i               (i < j)
///   d_i e_j = e_{j-1} d_i               (i < j)
///   d_j e_j = d_{j+1} e_j = id
///   d_i e_j = e_j d_{i-1}               (i > j + 1)
///   e_i e_j = e_{j+1} e_i               (i <= j)
/// whenever every simplex involved lies on a level <= n_max.  Levels are
/// visited in increasing order of the intermediate simplex, so the first
/// violation reported is the lowest one.
inline SimplicialReport check_simplicial_identities(const FiniteGroupoid& g, int n_max) {
  if (n_max < 0) throw Error(Errc::InvalidInput, "n_max must be >= 0");
  if (n_max > kMaxSimplicialCheckLevel)
    throw Error(Errc::LevelTooLarge, "simplicial check level " + std::to_string(n_max) + " > " +
                                         std::to_string(kMaxSimplicialCheckLevel));
  SimplicialReport rep;
  rep.n_max = n_max;
  auto d = [&](int n, int i, const Simplex& x) { return face(g, n, i, x); };
  auto e = [&](int n, int i, const Simplex& x) { return degeneracy(g, n, i, x); };
  auto name = [](char a, int i, char b, int j) {
    return std::string(1, a) + "_" + std::to_string(i) + " " + std::string(1, b) + "_" + std::to_string(j);
  };

  // mid: level of the intermediate simplex.
  for (int mid = 0; mid <= n_max && !rep.violation; ++mid) {
    auto expect = [&](int src, const Simplex& x, const std::string& id, const Simplex& lhs, const Simplex& rhs,
                      int out_level) {
      ++rep.identities_checked;
      if (rep.violation || lhs == rhs) return;
      rep.violation = SimplicialViolation{mid, src, id, simplex_to_string(g, src, x),
                                          simplex_to_string(g, out_level, lhs), simplex_to_string(g, out_level, rhs)};
    };

    // d d on level mid + 1 (intermediate level mid >= 0).
    if (mid + 1 <= n_max && mid + 1 >= 2) {
      const int n = mid + 1;
      for (const auto& x : nerve_level(g, n).tuples)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            expect(n, x, name('d', i, 'd', j) + " = " + name('d', j - 1, 'd', i), d(n - 1, i, d(n, j, x)),
                   d(n - 1, j - 1, d(n, i, x)), n - 2);
    }
    // d e on level mid - 1 (intermediate level mid).
    if (mid >= 1) {
      const int n = mid - 1;
      for (const auto& x : nerve_level(g, n).tuples)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            const Simplex lhs = d(n + 1, i, e(n, j, x));
            if (i == j || i == j + 1) {
              expect(n, x, name('d', i, 'e', j) + " = id", lhs, x, n);
            } else if (i < j) {
              expect(n, x, name('d', i, 'e', j) + " = " + name('e', j - 1, 'd', i), lhs, e(n - 1, j - 1, d(n, i, x)), n);
            } else {
              expect(n, x, name('d', i, 'e', j) + " = " + name('e', j, 'd', i - 1), lhs, e(n - 1, j, d(n, i - 1, x)), n);
            }
          }
    }
    // e e on level mid - 1 (lands on mid + 1).
    if (mid >= 1 && mid + 1 <= n_max) {
      const int n = mid - 1;
      for (const auto& x : nerve_level(g, n).tuples)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            expect(n, x, name('e', i, 'e', j) + " = " + name('e', j + 1, 'e', i), e(n + 1, i, e(n, j, x)),
                   e(n + 1, j + 1, e(n, i, x)), n + 2);
    }
  }
  return rep;
}

}  // namespace s1redux
