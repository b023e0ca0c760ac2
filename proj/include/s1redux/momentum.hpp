#pragma once

// Quadratic momentum map of a linear circle action, regularity of levels,
// the cone/link structure of the zero fiber and reduced-space dimensions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "s1redux/error.hpp"
#include "s1redux/weights.hpp"

namespace s1redux {

using Point = std::vector<std::complex<double>>;

/// Absolute tolerance for membership in the zero fiber.
inline constexpr double kFiberTolerance = 1e-9;

/// Phi(z) = 1/2 * sum alpha_i |z_i|^2.
inline double momentum(const WeightVector& w, const Point& z) {
  if (z.size() != w.size())
    throw Error(Errc::DimensionMismatch,
                "point has " + std::to_string(z.size()) + " coordinates, weights " + std::to_string(w.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += w[i] * std::norm(z[i]);
  return 0.5 * sum;
}

/// The circle-fixed set {z_i = 0 whenever alpha_i != 0} always lies in the
/// zero fiber, so exactly the nonzero levels are regular.
inline bool is_regular_value(const WeightVector& /*w*/, double a) { return a != 0.0; }

enum class FiberKind { PointFiber, FlatFiber, Cone };

inline std::string to_string(FiberKind k) {
  switch (k) {
    case FiberKind::PointFiber: return "POINT_FIBER";
    case FiberKind::FlatFiber: return "FLAT_FIBER";
    case FiberKind::Cone: return "CONE";
  }
  return "?";
}

/// Phi^{-1}(0) = Cone(S^{l_minus} x S^{l_plus}) x C^{n-j}, or the flat
/// factor alone when the nonzero weights are one-sided.  The ellipsoids are
/// kept only through their sphere dimensions; S^{-1} is empty.
struct ConeLinkDecomposition {
  FiberKind kind = FiberKind::PointFiber;
  int m = 0;  // negative weights
  int j = 0;  // nonzero weights
  int l_minus = -1;
  int l_plus = -1;
  int flat_factor_dim = 0;

  std::string link_description() const {
    return "(S^" + std::to_string(l_minus) + " x S^" + std::to_string(l_plus) + ")/S^1";
  }
  int fiber_dimension() const {
    return kind == FiberKind::Cone ? l_minus + l_plus + 1 + flat_factor_dim : flat_factor_dim;
  }
  friend bool operator==(const ConeLinkDecomposition&, const ConeLinkDecomposition&) = default;
};

inline ConeLinkDecomposition cone_link_decomposition(const WeightVector& w) {
  const SignProfile sp = classify_signs(w);
  ConeLinkDecomposition d;
  d.m = static_cast<int>(sp.num_negative);
  d.j = static_cast<int>(sp.num_nonzero());
  d.l_minus = 2 * d.m - 1;
  d.l_plus = 2 * (d.j - d.m) - 1;
  d.flat_factor_dim = 2 * static_cast<int>(sp.num_zero);
  if (sp.mixed()) d.kind = FiberKind::Cone;
  else if (sp.num_zero == 0) d.kind = FiberKind::PointFiber;
  else d.kind = FiberKind::FlatFiber;
  return d;
}

/// Real dimension of Phi^{-1}(a)/S^1.  Throws EmptyLevelSet when no weight
/// has the sign of a.
inline int reduced_dimension(const WeightVector& w, double a) {
  const SignProfile sp = classify_signs(w);
  const int n = static_cast<int>(w.size());
  if ((a > 0 && sp.num_positive == 0) || (a < 0 && sp.num_negative == 0))
    throw Error(Errc::EmptyLevelSet, "level " + std::to_string(a) + " not attained by weights " + w.to_string());
  if (a != 0.0) return 2 * n - 2;
  if (sp.mixed()) return 2 * n - 2;
  return 2 * static_cast<int>(sp.num_zero);
}

/// Deterministic points of Phi^{-1}(0): a uniform sphere sample is scaled
/// onto each ellipsoid sum |alpha_i| |z_i|^2 = 1, the pair is placed at cone
/// height t, and the zero-weight coordinates are filled freely.
inline std::vector<Point> sample_zero_fiber(const WeightVector& w, std::size_t count, std::uint64_t seed) {
  const ConeLinkDecomposition d = cone_link_decomposition(w);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> height(0.0, 2.0);

  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    Point z(w.size(), {0.0, 0.0});
    if (d.kind == FiberKind::Cone) {
      const double t = height(rng);
      for (int sign : {-1, 1}) {
        double norm2 = 0.0;
        std::vector<std::complex<double>> u(w.size(), {0.0, 0.0});
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] * sign > 0) {
            u[i] = {gauss(rng), gauss(rng)};
            norm2 += std::norm(u[i]);
          }
        }
        const double r = std::sqrt(norm2);
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i] * sign > 0) z[i] = t * u[i] / (r * std::sqrt(static_cast<double>(std::abs(w[i]))));
      }
    }
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == 0) z[i] = {gauss(rng), gauss(rng)};
    out.push_back(std::move(z));
  }
  return out;
}

/// e^{i theta} . z with the weights as rotation speeds.
inline Point act(const WeightVector& w, double theta, const Point& z) {
  if (z.size() != w.size()) throw Error(Errc::DimensionMismatch, "point/weight size mismatch");
  Point out(z);
  for (std::size_t i = 0; i < z.size(); ++i) out[i] *= std::polar(1.0, w[i] * theta);
  return out;
}

}  // namespace s1redux
