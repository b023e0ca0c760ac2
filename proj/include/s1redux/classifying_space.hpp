#pragma once

// Fundamental group of the classifying space of a finite groupoid from the
// 2-skeleton of its nerve, plus Morita and Borel comparison checks.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "s1redux/coset_enumeration.hpp"
#include "s1redux/error.hpp"
#include "s1redux/groupoid.hpp"

namespace s1redux {

struct Pi1Result {
  int basepoint = 0;
  std::vector<int> component;  // objects in the basepoint's component
  std::vector<int> tree_arrows;
  GroupPresentation presentation;
  std::optional<FiniteGroupSummary> summary;  // empty if enumeration ran out of budget

  bool identified() const { return summary.has_value(); }
  bool trivial() const { return summary && summary->order == 1; }

  std::string to_string() const {
    return summary ? summary->to_string() : "presentation " + presentation.to_string();
  }
};

/// Generators: non-unit arrows of the component off a BFS spanning tree.
/// Relators: one per composable pair (g, h), the boundary of the 2-simplex
/// with edges h, g and g*h.  With `budget` cosets exhausted the result
/// carries the presentation only.
inline Pi1Result pi1_of_classifying_space(const FiniteGroupoid& g, int basepoint,
                                          std::size_t budget = kDefaultCosetBudget) {
  if (basepoint < 0 || basepoint >= g.num_objects()) throw Error(Errc::InvalidInput, "basepoint out of range");
  for (int x = 0; x < g.num_objects(); ++x)
    if (g.unit(x) < 0) throw Error(Errc::InvalidGroupoid, "object " + g.objects()[x] + " has no unit");

  Pi1Result res;
  res.basepoint = basepoint;
  std::vector<bool> in_comp(g.num_objects(), false);
  std::vector<bool> is_tree(g.num_arrows(), false);
  std::deque<int> q{basepoint};
  in_comp[basepoint] = true;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    res.component.push_back(x);
    for (int a = 0; a < g.num_arrows(); ++a) {
      if (g.is_unit(a)) continue;
      int y = -1;
      if (g.s(a) == x && !in_comp[g.t(a)]) y = g.t(a);
      else if (g.t(a) == x && !in_comp[g.s(a)]) y = g.s(a);
      if (y < 0) continue;
      in_comp[y] = true;
      is_tree[a] = true;
      res.tree_arrows.push_back(a);
      q.push_back(y);
    }
  }

  // letter[a]: 0 for arrows that are trivial in pi_1, else generator index + 1.
  std::vector<int> letter(g.num_arrows(), 0);
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (!in_comp[g.s(a)] || g.is_unit(a) || is_tree[a]) continue;
    res.presentation.generators.push_back(g.arrows()[a].name);
    letter[a] = static_cast<int>(res.presentation.generators.size());
  }
  auto push = [&](Word& w, int a, bool inverse) {
    if (a < 0) throw Error(Errc::InvalidGroupoid, "undefined composite in the 2-skeleton");
    if (letter[a]) w.push_back(inverse ? -letter[a] : letter[a]);
  };
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (!in_comp[g.s(a)]) continue;
    for (int b = 0; b < g.num_arrows(); ++b) {
      if (!g.composable(a, b)) continue;
      Word w;
      push(w, b, false);
      push(w, a, false);
      push(w, g.compose(a, b), true);
      if (!w.empty()) res.presentation.relators.push_back(std::move(w));
    }
  }

  try {
    res.summary = summarize(enumerate_cosets(res.presentation, budget));
  } catch (const Error& e) {
    if (e.code() != Errc::EnumerationBudgetExceeded) throw;
  }
  return res;
}

/// As above, but a presentation that cannot be enumerated is an error.
inline FiniteGroupSummary pi1_summary(const FiniteGroupoid& g, int basepoint, std::size_t budget = kDefaultCosetBudget) {
  auto r = pi1_of_classifying_space(g, basepoint, budget);
  if (!r.summary)
    throw Error(Errc::EnumerationBudgetExceeded, "pi_1 at " + g.objects()[basepoint] + ": " + r.presentation.to_string());
  return *r.summary;
}

/// Same invariants as the summary: order, exponent, commutativity, and the
/// normal form when abelian.
inline bool same_group(const FiniteGroupSummary& a, const FiniteGroupSummary& b) {
  return a.order == b.order && a.exponent == b.exponent && a.abelian == b.abelian &&
         a.abelian_form == b.abelian_form && a.order_counts == b.order_counts;
}

struct GroupoidFunctor {
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};

struct ComponentComparison {
  int source_object = 0;
  int target_object = 0;
  FiniteGroupSummary source, target;
  bool agree = false;
};

struct MoritaReport {
  std::vector<ComponentComparison> components;

  bool ok() const {
    for (const auto& c : components)
      if (!c.agree) return false;
    return true;
  }
};

/// Throws NotAWeakEquivalence unless `f` is a functor G1 -> G2 that is
/// fully faithful and essentially surjective.
inline void check_weak_equivalence(const FiniteGroupoid& g1, const FiniteGroupoid& g2, const GroupoidFunctor& f) {
  auto fail = [](const std::string& m) { throw Error(Errc::NotAWeakEquivalence, m); };
  if (static_cast<int>(f.object_map.size()) != g1.num_objects() || static_cast<int>(f.arrow_map.size()) != g1.num_arrows())
    fail("functor data has the wrong size");
  for (int v : f.object_map)
    if (v < 0 || v >= g2.num_objects()) fail("object image out of range");
  for (int v : f.arrow_map)
    if (v < 0 || v >= g2.num_arrows()) fail("arrow image out of range");
  for (int a = 0; a < g1.num_arrows(); ++a)
    if (g2.s(f.arrow_map[a]) != f.object_map[g1.s(a)] || g2.t(f.arrow_map[a]) != f.object_map[g1.t(a)])
      fail("arrow " + g1.arrows()[a].name + " is not sent between the images of its endpoints");
  for (int x = 0; x < g1.num_objects(); ++x)
    if (f.arrow_map[g1.unit(x)] != g2.unit(f.object_map[x])) fail("units are not preserved");
  for (int a = 0; a < g1.num_arrows(); ++a)
    for (int b = 0; b < g1.num_arrows(); ++b)
      if (g1.composable(a, b) && f.arrow_map[g1.compose(a, b)] != g2.compose(f.arrow_map[a], f.arrow_map[b]))
        fail("composition is not preserved");
  for (int x = 0; x < g1.num_objects(); ++x)
    for (int y = 0; y < g1.num_objects(); ++y) {
      const auto src = g1.hom(x, y);
      const auto dst = g2.hom(f.object_map[x], f.object_map[y]);
      std::vector<bool> hit(g2.num_arrows(), false);
      for (int a : src) hit[f.arrow_map[a]] = true;
      for (int b : dst)
        if (!hit[b]) fail("not full on Hom(" + g1.objects()[x] + ", " + g1.objects()[y] + ")");
      if (src.size() != dst.size())
        fail("not faithful on Hom(" + g1.objects()[x] + ", " + g1.objects()[y] + ")");
    }
  std::vector<bool> reached(g2.num_objects(), false);
  for (int v : f.object_map)
    for (int y = 0; y < g2.num_objects(); ++y)
      if (!g2.hom(v, y).empty()) reached[y] = true;
  for (int y = 0; y < g2.num_objects(); ++y)
    if (!reached[y]) fail("object " + g2.objects()[y] + " is not isomorphic to any image");
}

/// Compares pi_1 of B(G1) and B(G2) at one object of every component of G1
/// and at its image.
inline MoritaReport morita_pi1_check(const FiniteGroupoid& g1, const FiniteGroupoid& g2, const GroupoidFunctor& f) {
  check_weak_equivalence(g1, g2, f);
  MoritaReport rep;
  const auto comp = g1.components();
  std::vector<bool> done(g1.num_objects(), false);
  for (int x = 0; x < g1.num_objects(); ++x) {
    if (done[comp[x]]) continue;
    done[comp[x]] = true;
    ComponentComparison c;
    c.source_object = x;
    c.target_object = f.object_map[x];
    c.source = pi1_summary(g1, x);
    c.target = pi1_summary(g2, c.target_object);
    c.agree = same_group(c.source, c.target);
    rep.components.push_back(std::move(c));
  }
  return rep;
}

/// Summary of a finite group computed from its table.
inline FiniteGroupSummary summarize_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  FiniteGroupSummary s;
  s.order = static_cast<std::int64_t>(elements.size());
  for (int a : elements) {
    const std::int64_t k = g.element_order(a);
    ++s.order_counts[k];
    s.exponent = std::lcm(s.exponent, k);
  }
  for (int a : elements)
    for (int b : elements)
      if (g.mul[a][b] != g.mul[b][a]) s.abelian = false;
  if (s.abelian) s.abelian_form = abelian_from_order_counts(s.order_counts);
  return s;
}

struct BorelReport {
  int object = 0;
  std::vector<int> stabilizer;  // elements of G fixing the object
  FiniteGroupSummary stabilizer_summary;
  FiniteGroupSummary pi1;
  bool agree = false;
  std::string justification =
      "a finite G-set is a disjoint union of orbits G/Stab, and the component of the Borel construction "
      "EG x_G (G/Stab) is B(Stab); the action groupoid is homotopy equivalent to the Borel construction";
};

/// pi_1 of the component of B(G ⋉ X) at `object` against Stab(object).
inline BorelReport borel_stabilizer_check(const FiniteGroup& g, const std::vector<std::string>& set,
                                          const ActionTable& act, int object) {
  const FiniteGroupoid gpd = action_groupoid(g, set, act);
  if (object < 0 || object >= gpd.num_objects()) throw Error(Errc::InvalidInput, "object out of range");
  BorelReport rep;
  rep.object = object;
  for (int a = 0; a < g.order(); ++a)
    if (act[a][object] == object) rep.stabilizer.push_back(a);
  rep.stabilizer_summary = summarize_subgroup(g, rep.stabilizer);
  rep.pi1 = pi1_summary(gpd, object);
  rep.agree = same_group(rep.stabilizer_summary, rep.pi1);
  return rep;
}

}  // namespace s1redux
