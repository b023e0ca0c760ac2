// Runs the seven acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "s1redux.hpp"

using namespace s1redux;

namespace {

// Pinned tolerances and budgets.
constexpr double kTruthTableSeconds = 10.0;
constexpr double kObstructionSeconds = 5.0;
constexpr double kHilbertSeconds = 30.0;
constexpr double kHomotopySeconds = 1.0;
constexpr double kNerveSeconds = 10.0;
constexpr double kMomentumSeconds = 5.0;
constexpr double kFiberAbsTol = 1e-9;
constexpr double kHomogeneityTol = 1e-12;
constexpr std::size_t kSamplesPerVector = 10000;
constexpr int kObstructionKMax = 15;

struct Result {
  bool pass = true;
  std::string detail;
};

// `check` collects failures; only the first few are reported.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    return failures_ > 3 ? detail_ + "; ... " + std::to_string(failures_) + " failures" : detail_;
  }

 private:
  int failures_ = 0;
  std::string detail_;
};

std::string seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s << " s";
  return o.str();
}

int run(int id, const std::string& title, double limit, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= limit) {
    out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the ") + seconds(limit) + " limit";
  }
  std::cout << (out.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << seconds(dt) << ")";
  if (!out.detail.empty()) std::cout << ": " << out.detail;
  std::cout << std::endl;
  return out.pass ? 0 : 1;
}

Result truth_table() {
  Check c;
  std::size_t vectors = 0, wu = 0;
  detail::for_each_weight_vector(5, 4, true, [&](const std::vector<int>& raw) {
    if (!is_effective(raw)) return;
    // Non-primitive vectors normalize to one already visited.
    int g = 0;
    for (int v : raw) g = std::gcd(g, std::abs(v));
    if (g != 1) return;
    ++vectors;
    const WeightVector w = normalize_effective(raw);
    const SignProfile sp = classify_signs(w);
    const bool expect_wu = std::min(sp.num_positive, sp.num_negative) >= 2;
    const s1redux::Outcome o = main_theorem_verdict(w, 0.0).outcome;
    wu += o == s1redux::Outcome::WeaklyUnrepresentable;
    c.expect((o == s1redux::Outcome::WeaklyUnrepresentable) == expect_wu, w.to_string() + " gives " + to_string(o));
  });
  return {c.ok(), c.ok() ? std::to_string(vectors) + " vectors, " + std::to_string(wu) + " weakly unrepresentable"
                         : c.detail()};
}

Result obstruction_replay() {
  Check c;
  const std::vector<std::string> chain{
      "1 ≅ π_1(X) ≅ π_0(H)",
      "Z ≅ π_2(X) ≅ π_1(H)",
      "π_p(S^{l_1}) × π_p(S^{l_2}) ≅ π_p(X) ≅ π_{p-1}(H) for 2 < p < k",
  };
  int cases = 0;
  // Every ordered pair from {3, 5, 7}: nine searches.
  for (int l1 : {3, 5, 7})
    for (int l2 : {3, 5, 7}) {
      ++cases;
      const auto r = obstruction_search(l1, l2, kObstructionKMax);
      const std::string tag = "(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
      c.expect(r.no_solution(), tag + " has " + std::to_string(r.survivors.size()) + " survivors");
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const bool in_order = r.log.size() > i && r.log[i].constraint == chain[i] && !r.log[i].provenance.empty();
        c.expect(in_order, tag + " log entry " + std::to_string(i) + " is not '" + chain[i] + "'");
      }
      for (const auto& s : r.survivors) c.expect(s.k - s.dim_h == r.l1 + r.l2 - 1, tag + " dimension ledger");
      for (const auto& e : r.eliminated)
        c.expect(e.candidate.k - e.candidate.dim_h == r.l1 + r.l2 - 1, tag + " dimension ledger");
    }
  for (int l2 : {3, 5, 7}) {
    ++cases;
    const auto r = obstruction_search(1, l2, kObstructionKMax);
    c.expect(!r.survivors.empty(), "(1," + std::to_string(l2) + ") has no survivors");
    for (const auto& s : r.survivors)
      c.expect(s.dim_h == 0, "(1," + std::to_string(l2) + ") survivor " + s.group + " has positive dimension");
  }
  return {c.ok(), c.ok() ? std::to_string(cases) + " searches" : c.detail()};
}

Result hilbert_oracle() {
  Check c;
  std::size_t vectors = 0;
  detail::for_each_weight_vector(3, 4, true, [&](const std::vector<int>& raw) {
    if (!is_effective(raw)) return;
    int g = 0;
    for (int v : raw) g = std::gcd(g, std::abs(v));
    if (g != 1) return;
    ++vectors;
    const WeightVector w = normalize_effective(raw);
    const auto h = invariant_monoid_basis(w);
    const std::set<MonomialExponent> got(h.generators.begin(), h.generators.end());
    const auto want = oracle::brute_force_basis(raw, 2 * w.max_abs() + 2);
    c.expect(h.complete && got == want, w.to_string() + ": " + std::to_string(got.size()) + " generators vs " +
                                            std::to_string(want.size()) + " from brute force");
  });
  const auto h = invariant_monoid_basis(normalize_effective({1, -1}));
  const std::set<MonomialExponent> got(h.generators.begin(), h.generators.end());
  const std::set<MonomialExponent> listed{{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{1, 1}, {0, 0}}, {{0, 0}, {1, 1}}};
  c.expect(got == listed, "[1,-1] basis differs from the listed generators");
  c.expect(h.embedding_dim == 4 && real_generators(h).size() == 4, "[1,-1] does not give k = 4");
  return {c.ok(), c.ok() ? std::to_string(vectors) + " vectors match brute force; [1,-1] gives k=4" : c.detail()};
}

Result hss_consistency() {
  Check c;
  const auto audit = consistency_audit(5, 4);
  for (const auto& v : audit.violations) c.expect(false, v.weights + " " + v.check);
  detail::for_each_weight_vector(5, 4, false, [&](const std::vector<int>& raw) {
    if (!is_effective(raw)) return;
    const WeightVector w = normalize_effective(raw);
    if (!classify_signs(w).mixed()) return;
    const auto v = main_theorem_verdict(w, 0.0);
    if (v.outcome != s1redux::Outcome::WeaklyUnrepresentable) return;
    c.expect(v.reduced_dim >= 6, w.to_string() + " has reduced dimension " + std::to_string(v.reduced_dim));
    c.expect(!hss_cross_check(w), w.to_string() + " passes the dimension criterion");
  });
  const auto base = main_theorem_verdict(normalize_effective({1, -1}), 0.0);
  c.expect(base.reduced_dim == 2, "[1,-1] reduced dimension " + std::to_string(base.reduced_dim));
  c.expect(base.hss_orbifold == true, "[1,-1] hssOrbifold is not true");
  c.expect(hss_cross_check(normalize_effective({1, -1})), "[1,-1] fails the dimension criterion");
  return {c.ok(), c.ok() ? std::to_string(audit.vectors_checked) + " audited vectors, 0 violations" : c.detail()};
}

Result homotopy_tables() {
  Check c;
  const auto hopf = hopf_constraints(kSphereTableMaxDegree);
  bool saw2 = false, saw3 = false;
  for (const auto& k : hopf) {
    if (k.relation != Relation::Iso) continue;
    const auto v = k.rhs.value();
    if (!v || !v->exact) continue;
    if (k.degree == 2) {
      saw2 = true;
      c.expect(v->group == FgAbelianGroup::integers() && sphere_pi(2, 2) == v->group, "π_2(S^2) is not Z");
    }
    if (k.degree == 3) {
      saw3 = true;
      c.expect(v->group == sphere_pi(3, 3) && sphere_pi(3, 2) == sphere_pi(3, 3), "π_3(S^2) differs from π_3(S^3)");
    }
    if (k.degree >= 3 && sphere_pi_in_table(k.degree, 2))
      c.expect(v->group == sphere_pi(k.degree, 2), "Hopf LES disagrees with the table at p=" + std::to_string(k.degree));
  }
  c.expect(saw2 && saw3, "Hopf constraints at p=2,3 missing");
  int entries = 0;
  for (int k = 1; k <= kSphereTableMaxDim; ++k)
    for (int p = 0; p <= kSphereTableMaxDegree; ++p) {
      if (!sphere_pi_in_table(p, k)) continue;
      ++entries;
      const auto g = sphere_pi(p, k);
      if (p < k) c.expect(g.is_trivial(), "π_" + std::to_string(p) + "(S^" + std::to_string(k) + ") nonzero");
      c.expect(g.is_finite() == sphere_pi_finite(p, k),
               "finiteness of π_" + std::to_string(p) + "(S^" + std::to_string(k) + ")");
    }
  return {c.ok(), c.ok() ? std::to_string(entries) + " table entries consistent" : c.detail()};
}

Result nerve_lab() {
  Check c;
  // pi_1(B Γ) against Γ.
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::klein(),
                        FiniteGroup::s3()}) {
    const auto s = pi1_summary(group_groupoid(g), 0);
    std::vector<int> all(g.order());
    for (int a = 0; a < g.order(); ++a) all[a] = a;
    const auto want = summarize_subgroup(g, all);
    c.expect(s.order == want.order && s.exponent == want.exponent && s.abelian == want.abelian &&
                 s.abelian_form == want.abelian_form,
             g.name + ": got " + s.to_string());
  }
  // Simplicial identities on the corpus.
  std::vector<std::pair<std::string, FiniteGroupoid>> corpus{
      {"Z_2", group_groupoid(FiniteGroup::cyclic(2))},   {"Z_3", group_groupoid(FiniteGroup::cyclic(3))},
      {"Z_4", group_groupoid(FiniteGroup::cyclic(4))},   {"Z_2xZ_2", group_groupoid(FiniteGroup::klein())},
      {"S_3", group_groupoid(FiniteGroup::s3())},        {"pair(2)", pair_groupoid(2)},
      {"pair(3)", pair_groupoid(3)},                     {"trivial(3)", trivial_groupoid({"a", "b", "c"})},
  };
  for (const char* f : {"s3_group.json", "pair_groupoid_3.json", "z4_on_two_points.json", "z2_swap.json"}) {
    std::ifstream in(std::string(S1REDUX_SAMPLES_DIR) + "/" + f);
    corpus.emplace_back(f, groupoid_from_json(json::parse(in)));
  }
  for (const auto& [name, g] : corpus) {
    const auto rep = check_simplicial_identities(g, 4);
    c.expect(rep.ok(), name + ": " + (rep.ok() ? "" : rep.violation->identity));
  }
  // Morita pairs.
  const auto z2 = FiniteGroup::cyclic(2);
  const auto point = trivial_groupoid({"*"});
  const auto m1 = morita_pi1_check(pair_groupoid(3), point, {{0, 0, 0}, std::vector<int>(9, 0)});
  const auto m2 = morita_pi1_check(action_groupoid(z2, {"p"}, {{0}, {0}}), group_groupoid(z2), {{0}, {0, 1}});
  const auto m3 = morita_pi1_check(action_groupoid(z2, {"p", "q"}, {{0, 1}, {1, 0}}), point, {{0, 0}, {0, 0, 0, 0}});
  c.expect(m1.ok() && m1.components[0].source.order == 1, "pair groupoid vs point");
  c.expect(m2.ok() && m2.components[0].source.order == 2, "trivial Z_2 action vs Z_2");
  c.expect(m3.ok() && m3.components[0].source.order == 1, "Z_2 swap vs point");
  return {c.ok(), c.ok() ? "5 groups, " + std::to_string(corpus.size()) + " groupoids to level 4, 3 Morita pairs"
                         : c.detail()};
}

Result momentum_samples() {
  Check c;
  const std::vector<std::vector<int>> vectors{{1, -1},       {-1, 1, 1},       {1, 1, -1, -1}, {2, -3, 0},
                                              {-4, 3, 1, 2}, {3, -1, -1, 0, 2}, {1, 2, -3},     {4, -4, 1, -2, 3}};
  double worst_phi = 0, worst_hom = 0;
  int cones = 0;
  for (const auto& raw : vectors) {
    const WeightVector w = normalize_effective(raw);
    if (cone_link_decomposition(w).kind != FiberKind::Cone) continue;
    ++cones;
    for (const auto& z : sample_zero_fiber(w, kSamplesPerVector, 20260101 + cones)) {
      const double phi = momentum(w, z);
      worst_phi = std::max(worst_phi, std::abs(phi));
      for (double t : {0.25, 3.0}) {
        Point tz = z;
        for (auto& v : tz) v *= t;
        worst_hom = std::max(worst_hom, std::abs(momentum(w, tz) - t * t * phi));
      }
    }
  }
  c.expect(cones == static_cast<int>(vectors.size()), "a test vector is not of cone type");
  c.expect(worst_phi <= kFiberAbsTol, "max |Φ| = " + std::to_string(worst_phi));
  c.expect(worst_hom <= kHomogeneityTol, "homogeneity error " + std::to_string(worst_hom));
  std::ostringstream o;
  o << cones << " cone vectors x " << kSamplesPerVector << " samples, max |Φ| " << std::scientific
    << std::setprecision(1) << worst_phi << ", homogeneity " << worst_hom;
  return {c.ok(), c.ok() ? o.str() : c.detail()};
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "verdict truth table, n <= 5, |α| <= 4", kTruthTableSeconds, truth_table);
  failed += run(2, "obstruction search replay, k_max = 15", kObstructionSeconds, obstruction_replay);
  failed += run(3, "Hilbert basis vs brute force, n <= 3, |α| <= 4", kHilbertSeconds, hilbert_oracle);
  failed += run(4, "dimension criterion consistency", 1e9, hss_consistency);
  failed += run(5, "sphere table self-consistency", kHomotopySeconds, homotopy_tables);
  failed += run(6, "nerve lab", kNerveSeconds, nerve_lab);
  failed += run(7, "zero-fiber sampling", kMomentumSeconds, momentum_samples);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed;
}
