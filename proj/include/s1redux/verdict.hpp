#pragma once

// Representability verdict for the reduced space Phi^{-1}(a)/S^1 of a linear
// circle action, the HSS dimension criterion, and exhaustive audits.

#include <optional>
#include <string>
#include <vector>

#include "s1redux/error.hpp"
#include "s1redux/hilbert.hpp"
#include "s1redux/momentum.hpp"
#include "s1redux/obstruction.hpp"
#include "s1redux/weights.hpp"

namespace s1redux {

enum class Outcome { RegularOrbifold, SmoothModel, WeaklyUnrepresentable, OrbifoldCandidate };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::RegularOrbifold: return "REGULAR_ORBIFOLD";
    case Outcome::SmoothModel: return "SMOOTH_MODEL";
    case Outcome::WeaklyUnrepresentable: return "WEAKLY_UNREPRESENTABLE";
    case Outcome::OrbifoldCandidate: return "ORBIFOLD_CANDIDATE";
  }
  return "?";
}

struct VerdictEvidence {
  std::string clause;
  SignProfile signs;
  double level = 0.0;
  std::vector<std::string> notes;
};

struct Verdict {
  Outcome outcome = Outcome::RegularOrbifold;
  std::optional<bool> hss_orbifold;  // only when every weight is nonzero
  int reduced_dim = 0;
  VerdictEvidence evidence;
};

/// Throws EmptyLevelSet if no weight has the sign of a.
inline Verdict main_theorem_verdict(const WeightVector& w, double a) {
  Verdict v;
  v.reduced_dim = reduced_dimension(w, a);
  const SignProfile sp = classify_signs(w);
  v.evidence.signs = sp;
  v.evidence.level = a;
  if (sp.num_zero == 0) v.hss_orbifold = v.reduced_dim < 4;

  if (is_regular_value(w, a)) {
    v.outcome = Outcome::RegularOrbifold;
    v.evidence.clause = "a != 0 is a regular value: the circle acts locally freely on the level set";
    return v;
  }
  v.evidence.notes.push_back(
      "the only fixed point on the level set is the origin, so the condition at each fixed point is the condition on w");
  if (!sp.mixed()) {
    v.outcome = Outcome::SmoothModel;
    v.evidence.clause = "nonzero weights are one-sided: the quotient is C^" + std::to_string(sp.num_zero);
    return v;
  }
  if (sp.num_positive >= 2 && sp.num_negative >= 2) {
    v.outcome = Outcome::WeaklyUnrepresentable;
    v.evidence.clause = "at least two positive and two negative weights: the link is (S^" +
                        std::to_string(2 * sp.num_negative - 1) + " x S^" + std::to_string(2 * sp.num_positive - 1) +
                        ")/S^1 with both spheres of dimension >= 3";
    return v;
  }
  v.outcome = Outcome::OrbifoldCandidate;
  v.evidence.clause = "exactly one weight of one sign: representability is not excluded";
  v.evidence.notes.push_back("sufficiency for an orbifold is not asserted");
  return v;
}

/// True iff the reduced space at 0 has dimension < 4.  Throws
/// HypothesisViolated unless every weight is nonzero and both signs occur.
inline bool hss_cross_check(const WeightVector& w) {
  const SignProfile sp = classify_signs(w);
  if (sp.num_zero > 0) throw Error(Errc::HypothesisViolated, "weights must all be nonzero: " + w.to_string());
  if (!sp.mixed()) throw Error(Errc::HypothesisViolated, "weights must have both signs: " + w.to_string());
  return reduced_dimension(w, 0.0) < 4;
}

struct AuditViolation {
  std::string weights;
  std::string check;
  std::string detail;
};

struct AuditReport {
  int max_n = 0;
  int max_weight = 0;
  std::size_t vectors_checked = 0;
  std::size_t weakly_unrepresentable = 0;
  std::vector<AuditViolation> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

/// Calls f(raw) for every vector of length 1..max_n with entries in
/// [-max_weight, max_weight] (zero allowed when allow_zero).
template <class F>
void for_each_weight_vector(int max_n, int max_weight, bool allow_zero, F&& f) {
  std::vector<int> values;
  for (int v = -max_weight; v <= max_weight; ++v)
    if (v != 0 || allow_zero) values.push_back(v);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::size_t> idx(n, 0);
    std::vector<int> raw(n);
    while (true) {
      for (int i = 0; i < n; ++i) raw[i] = values[idx[i]];
      f(raw);
      int i = n - 1;
      while (i >= 0 && ++idx[i] == values.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
}

}  // namespace detail

/// Over every effective mixed-sign vector with nonzero entries, n <= max_n,
/// |alpha| <= max_weight, checks at level 0:
///   (i)   WEAKLY_UNREPRESENTABLE implies hss_cross_check is false
///   (ii)  the outcome is unchanged by swapping adjacent weights
///   (iii) the outcome is unchanged by w -> -w
///   (iv)  WEAKLY_UNREPRESENTABLE exactly when min(#pos, #neg) >= 2
inline AuditReport consistency_audit(int max_n = 5, int max_weight = 4) {
  if (max_n < 1 || max_weight < 1) throw Error(Errc::InvalidInput, "audit bounds must be >= 1");
  AuditReport rep;
  rep.max_n = max_n;
  rep.max_weight = max_weight;
  detail::for_each_weight_vector(max_n, max_weight, false, [&](const std::vector<int>& raw) {
    if (!is_effective(raw)) return;
    const WeightVector w = normalize_effective(raw);
    const SignProfile sp = classify_signs(w);
    if (!sp.mixed()) return;
    ++rep.vectors_checked;
    const Outcome o = main_theorem_verdict(w, 0.0).outcome;
    auto flag = [&](std::string check, std::string detail) {
      rep.violations.push_back({w.to_string(), std::move(check), std::move(detail)});
    };
    if (o == Outcome::WeaklyUnrepresentable) {
      ++rep.weakly_unrepresentable;
      if (hss_cross_check(w)) flag("(i) hss", "weakly unrepresentable but reduced dimension < 4");
    }
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      std::vector<int> swapped = raw;
      std::swap(swapped[i], swapped[i + 1]);
      const Outcome os = main_theorem_verdict(normalize_effective(swapped), 0.0).outcome;
      if (os != o) flag("(ii) permutation", "swap " + std::to_string(i + 1) + " gives " + to_string(os));
    }
    const Outcome on = main_theorem_verdict(w.negated(), 0.0).outcome;
    if (on != o) flag("(iii) negation", "-w gives " + to_string(on));
    const bool expect_wu = std::min(sp.num_positive, sp.num_negative) >= 2;
    if ((o == Outcome::WeaklyUnrepresentable) != expect_wu) flag("(iv) sign count", "outcome " + to_string(o));
  });
  return rep;
}

inline constexpr int kAnalysisKMax = 15;

struct HilbertSummary {
  int k = 0;
  std::size_t generator_count = 0;
  bool complete = true;
  int degree_cap = 0;
};

struct AnalysisBundle {
  WeightVector weights;
  double level = 0.0;
  SignProfile signs;
  ConeLinkDecomposition decomposition;
  int reduced_dim = 0;
  HilbertBasis basis;
  HilbertSummary hilbert;
  std::optional<SearchResult> obstruction;  // a = 0 and the fiber is a cone
  Verdict verdict;
};

/// Everything the library can say about (w, a) in one record.
inline AnalysisBundle analyze(const WeightVector& w, double a, std::optional<int> degree_cap = std::nullopt) {
  AnalysisBundle b{w, a, classify_signs(w), cone_link_decomposition(w), 0, {}, {}, std::nullopt, {}};
  b.verdict = main_theorem_verdict(w, a);
  b.reduced_dim = b.verdict.reduced_dim;
  b.basis = invariant_monoid_basis(w, degree_cap);
  b.hilbert = {b.basis.embedding_dim, b.basis.generators.size(), b.basis.complete, b.basis.degree_cap};
  if (a == 0.0 && b.decomposition.kind == FiberKind::Cone)
    b.obstruction = obstruction_search(b.decomposition.l_minus, b.decomposition.l_plus, kAnalysisKMax);
  return b;
}

}  // namespace s1redux
