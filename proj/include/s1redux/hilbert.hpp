#pragma once

// Minimal generators of the monoid of circle-invariant monomial exponents
// z^a zbar^b (sum alpha_i (a_i - b_i) = 0), their real forms, and a numeric
// check that the resulting Hilbert map separates circle orbits.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "s1redux/momentum.hpp"
#include "s1redux/weights.hpp"

namespace s1redux {

struct MonomialExponent {
  std::vector<int> a;  // holomorphic
  std::vector<int> b;  // anti-holomorphic

  int degree() const {
    int d = 0;
    for (int x : a) d += x;
    for (int x : b) d += x;
    return d;
  }
  MonomialExponent conjugate() const { return {b, a}; }
  bool self_conjugate() const { return a == b; }

  friend bool operator==(const MonomialExponent&, const MonomialExponent&) = default;
  friend auto operator<=>(const MonomialExponent&, const MonomialExponent&) = default;
};

inline bool is_invariant(const WeightVector& w, const MonomialExponent& e) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<std::int64_t>(w[i]) * (e.a[i] - e.b[i]);
  return s == 0;
}

/// Graded lexicographic: lower total degree first, then lexicographically
/// larger (a, b) first.
inline bool graded_lex_less(const MonomialExponent& x, const MonomialExponent& y) {
  const int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  return y < x;
}

struct HilbertBasis {
  std::vector<MonomialExponent> generators;  // graded-lex order
  int embedding_dim = 0;                     // number of real generators
  bool complete = true;                      // false if the frontier was cut at the degree cap
  int degree_cap = 0;
};

/// Default cap 2 * sum|alpha_i| + 2.
inline int default_degree_cap(const WeightVector& w) {
  int s = 0;
  for (int a : w.entries()) s += a < 0 ? -a : a;
  return 2 * s + 2;
}

namespace detail {

inline bool dominates(const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

}  // namespace detail

/// Frontier completion for the single homogeneous equation c . x = 0 with
/// c = (alpha, -alpha) over x in N^{2n}.  A frontier vector with defect
/// c . x != 0 is only extended along coordinates whose coefficient has the
/// opposite sign, and never beyond an already found solution, so every
/// solution reached is minimal and every minimal solution is reached.
inline HilbertBasis invariant_monoid_basis(const WeightVector& w, std::optional<int> degree_cap = std::nullopt) {
  const std::size_t n = w.size();
  const std::size_t q = 2 * n;
  std::vector<std::int64_t> c(q);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = w[i];
    c[n + i] = -w[i];
  }
  HilbertBasis out;
  out.degree_cap = degree_cap ? *degree_cap : default_degree_cap(w);

  auto defect = [&](const std::vector<int>& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < q; ++i) s += c[i] * x[i];
    return s;
  };

  std::vector<std::vector<int>> solutions;
  std::set<std::vector<int>> frontier;
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<int> e(q, 0);
    e[i] = 1;
    frontier.insert(std::move(e));
  }

  for (int degree = 1; !frontier.empty(); ++degree) {
    if (degree > out.degree_cap) {
      out.complete = false;
      break;
    }
    std::vector<std::vector<int>> open;
    for (const auto& x : frontier) {
      if (defect(x) == 0) solutions.push_back(x);
      else open.push_back(x);
    }
    std::set<std::vector<int>> next;
    for (const auto& x : open) {
      const std::int64_t d = defect(x);
      for (std::size_t i = 0; i < q; ++i) {
        if ((d > 0 && c[i] >= 0) || (d < 0 && c[i] <= 0)) continue;
        std::vector<int> y = x;
        ++y[i];
        const bool reducible = std::any_of(solutions.begin(), solutions.end(),
                                           [&](const std::vector<int>& s) { return detail::dominates(y, s); });
        if (!reducible) next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& s : solutions) {
    MonomialExponent e;
    e.a.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
    e.b.assign(s.begin() + static_cast<std::ptrdiff_t>(n), s.end());
    out.generators.push_back(std::move(e));
  }
  std::sort(out.generators.begin(), out.generators.end(), graded_lex_less);
  // A self-conjugate generator gives one real coordinate, a conjugate pair two.
  out.embedding_dim = static_cast<int>(out.generators.size());
  return out;
}

enum class RealForm { ModulusSquared, RealPart, ImagPart };

/// One real coordinate of the Hilbert map: |z^a|^2 for a self-conjugate
/// generator (a; a), otherwise Re or Im of z^a zbar^b.
struct RealGeneratorDescriptor {
  RealForm form = RealForm::ModulusSquared;
  MonomialExponent exponent;
  std::string label;

  double evaluate(const Point& z) const {
    std::complex<double> v{1.0, 0.0};
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (int p = 0; p < exponent.a[i]; ++p) v *= z[i];
      for (int p = 0; p < exponent.b[i]; ++p) v *= std::conj(z[i]);
    }
    return form == RealForm::ImagPart ? v.imag() : v.real();
  }
};

namespace detail {

inline std::string monomial_label(const std::vector<int>& a, const std::vector<int>& b) {
  std::string s;
  auto factor = [&](const std::string& base, int p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += base;
    if (p > 1) s += "^" + std::to_string(p);
  };
  for (std::size_t i = 0; i < a.size(); ++i) factor("z" + std::to_string(i + 1), a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) factor("conj(z" + std::to_string(i + 1) + ")", b[i]);
  return s.empty() ? "1" : s;
}

inline std::string modulus_label(const std::vector<int>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "|z" + std::to_string(i + 1) + "|^" + std::to_string(2 * a[i]);
  }
  return s;
}

}  // namespace detail

/// Re before Im; a conjugate pair contributes once, through the member
/// with the lexicographically larger holomorphic part.
inline std::vector<RealGeneratorDescriptor> real_generators(const HilbertBasis& h) {
  std::vector<RealGeneratorDescriptor> out;
  for (const auto& g : h.generators) {
    if (g.self_conjugate()) {
      out.push_back({RealForm::ModulusSquared, g, detail::modulus_label(g.a)});
    } else if (g.a > g.b) {
      const std::string mono = detail::monomial_label(g.a, g.b);
      out.push_back({RealForm::RealPart, g, "Re(" + mono + ")"});
      out.push_back({RealForm::ImagPart, g, "Im(" + mono + ")"});
    }
  }
  return out;
}

inline std::vector<double> evaluate_all(const std::vector<RealGeneratorDescriptor>& gens, const Point& z) {
  std::vector<double> v;
  v.reserve(gens.size());
  for (const auto& g : gens) v.push_back(g.evaluate(z));
  return v;
}

/// min over 2048 grid angles of |e^{i theta} . z - z'|.
inline double orbit_distance(const WeightVector& w, const Point& z, const Point& zp, int grid = 2048) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const Point r = act(w, 2.0 * M_PI * k / grid, z);
    double d2 = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) d2 += std::norm(r[i] - zp[i]);
    best = std::min(best, std::sqrt(d2));
  }
  return best;
}

struct SeparationWitness {
  Point z;
  Point z_prime;
  std::string reason;
};

struct SeparationReport {
  int trials = 0;
  int pairs_checked = 0;
  int agreeing_pairs = 0;  // pairs whose generator values agree to 1e-6
  std::optional<SeparationWitness> failure;
  bool ok() const { return !failure.has_value(); }
};

/// Per trial, three pairs are examined: z against a rotated copy (values
/// must agree), against a copy with independently re-drawn phases, and
/// against an unrelated point.  Whenever values agree to 1e-6 the orbits
/// must meet up to the angular resolution of the grid.
inline SeparationReport embedding_separation_check(const WeightVector& w,
                                                   const std::vector<RealGeneratorDescriptor>& gens, int trials,
                                                   std::uint64_t seed) {
  constexpr int kGrid = 2048;
  constexpr double kInvariantTol = 1e-9;
  constexpr double kAgreeTol = 1e-6;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  auto random_point = [&] {
    Point z(w.size());
    for (auto& c : z) c = {gauss(rng), gauss(rng)};
    return z;
  };
  auto max_diff = [](const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]) / std::max(1.0, std::abs(x[i])));
    return m;
  };
  auto norm = [](const Point& z) {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return std::sqrt(s);
  };

  SeparationReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials && rep.ok(); ++t) {
    const Point z = random_point();
    const auto gz = evaluate_all(gens, z);
    // Nearest grid angle is within pi/grid; each coordinate moves by at most |alpha| * angle.
    const double grid_slack = w.max_abs() * norm(z) * (2.0 * M_PI / kGrid) + 1e-9;

    const Point rotated = act(w, angle(rng), z);
    Point rephased = z;
    for (auto& c : rephased) c = std::polar(std::abs(c), angle(rng));
    const Point other = random_point();

    for (const Point* zp : std::initializer_list<const Point*>{&rotated, &rephased, &other}) {
      ++rep.pairs_checked;
      const auto gzp = evaluate_all(gens, *zp);
      const double diff = max_diff(gz, gzp);
      if (zp == &rotated && diff > kInvariantTol) {
        rep.failure = SeparationWitness{z, *zp, "generator values differ on one orbit"};
        break;
      }
      if (diff <= kAgreeTol) {
        ++rep.agreeing_pairs;
        if (orbit_distance(w, z, *zp, kGrid) > grid_slack) {
          rep.failure = SeparationWitness{z, *zp, "generator values agree on distinct orbits"};
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace s1redux
