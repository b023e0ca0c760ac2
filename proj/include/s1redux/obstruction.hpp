#pragma once

// Search for a compact group H and sphere S^k whose Borel quotient
// EH x_H S^k could be homotopy equivalent to ES^1 x_{S^1} (S^{l1} x S^{l2}).
// Both principal fibrations feed constraints on pi_p(X); a candidate
// (H, k) with k = l1 + l2 - 1 + dim H survives only if the two constraint
// sets can be met simultaneously in every degree up to the bound.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "s1redux/error.hpp"
#include "s1redux/les.hpp"
#include "s1redux/lie_catalog.hpp"

namespace s1redux {

struct Candidate {
  std::string group;
  int dim_h = 0;
  int k = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct Elimination {
  Candidate candidate;
  int degree = 0;
  std::string reason;
};

struct DerivationEntry {
  int degree = 0;
  std::string constraint;
  std::string provenance;
};

struct SearchResult {
  int l1 = 1, l2 = 1, k_max = 0;
  std::vector<Candidate> survivors;    // sorted by (dim H, name, k)
  std::vector<Elimination> eliminated;  // same order
  std::vector<DerivationEntry> log;

  bool no_solution() const { return survivors.empty(); }
  std::string status() const { return no_solution() ? "NoSolution" : "Survivors"; }
};

/// True when g is isomorphic to a subgroup of h (both exact).
inline bool embeds_into(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  if (g.rank() > h.rank()) return false;
  // Finite parts: compare p-primary partitions termwise, largest first.
  auto primary = [](const FgAbelianGroup& x) {
    std::map<std::int64_t, std::vector<std::int64_t>> parts;
    for (auto d : x.torsion()) {
      std::int64_t n = d;
      for (std::int64_t p = 2; n > 1; ++p) {
        std::int64_t pk = 1;
        while (n % p == 0) {
          n /= p;
          pk *= p;
        }
        if (pk > 1) parts[p].push_back(pk);
      }
    }
    for (auto& [p, v] : parts) std::sort(v.rbegin(), v.rend());
    return parts;
  };
  const auto pg = primary(g), ph = primary(h);
  for (const auto& [p, v] : pg) {
    const auto it = ph.find(p);
    if (it == ph.end() || it->second.size() < v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] > it->second[i]) return false;
  }
  return true;
}

namespace detail {

enum class Verdict3 { Consistent, Contradiction, Undetermined };

struct DegreeCheck {
  Verdict3 verdict = Verdict3::Consistent;
  std::string reason;
};

/// Everything known about pi_p(X) from the non-five-term constraints.
struct DegreeKnowledge {
  std::vector<std::pair<HomotopyValue, const LesConstraint*>> isos;
  std::vector<std::pair<HomotopyValue, const LesConstraint*>> bounds;  // pi_p(X) <= bound
};

inline DegreeCheck check_isos(const std::vector<const LesConstraint*>& cs, DegreeKnowledge& know) {
  DegreeCheck out;
  for (const LesConstraint* c : cs) {
    if (c->relation == Relation::FiveTerm) continue;
    const auto v = c->rhs.value();
    if (!v) continue;
    (c->relation == Relation::Iso ? know.isos : know.bounds).emplace_back(*v, c);
  }
  for (std::size_t i = 0; i < know.isos.size(); ++i) {
    for (std::size_t j = i + 1; j < know.isos.size(); ++j) {
      const auto& [a, ca] = know.isos[i];
      const auto& [b, cb] = know.isos[j];
      if (ca->rhs.same_as(cb->rhs)) continue;
      const Comparison cmp = compare(a, b);
      if (cmp == Comparison::Different) {
        return {Verdict3::Contradiction, ca->text() + " = " + a.to_string() + " but " + cb->text() + " = " + b.to_string()};
      }
      if (cmp == Comparison::Undetermined) {
        out = {Verdict3::Undetermined, ca->text() + " vs " + cb->text() + " beyond the sphere table"};
      }
    }
  }
  for (const auto& [g, cg] : know.isos) {
    for (const auto& [h, ch] : know.bounds) {
      if (!g.exact || !h.exact) {
        if (g.rank() > h.rank()) return {Verdict3::Contradiction, cg->text() + " has larger rank than " + ch->text()};
        out = {Verdict3::Undetermined, cg->text() + " ≤ " + ch->text() + " beyond the sphere table"};
        continue;
      }
      if (!embeds_into(g.group, h.group))
        return {Verdict3::Contradiction,
                cg->text() + " = " + g.group.to_string() + " does not embed in " + ch->text() + " = " + h.group.to_string()};
    }
  }
  return out;
}

/// Does some group G satisfy the isos/bounds gathered for one degree?
/// `accepts` decides membership for an exact candidate G.
template <class Pred>
Verdict3 admits(const DegreeKnowledge& know, const FgAbelianGroup& sample, Pred accepts) {
  if (!know.isos.empty()) {
    const auto& g = know.isos.front().first;
    if (!g.exact) return Verdict3::Undetermined;
    return accepts(g.group) ? Verdict3::Consistent : Verdict3::Contradiction;
  }
  for (const auto& [h, c] : know.bounds) {
    if (!h.exact) return Verdict3::Undetermined;
    if (!embeds_into(sample, h.group)) return Verdict3::Contradiction;
  }
  return Verdict3::Consistent;
}

/// 1 -> pi_2 -> Z -> Z^r -> pi_1 -> 1: either (Z, Z^r) or (1, Z^{r-1} + Z_d).
inline DegreeCheck check_five_term(const LesConstraint& c, const DegreeKnowledge& deg1, const DegreeKnowledge& deg2) {
  const int r = c.five_term_rank;
  const auto free_r = FgAbelianGroup::integers(r);
  const auto free_r1 = FgAbelianGroup::integers(r - 1);

  const Verdict3 a2 = admits(deg2, FgAbelianGroup::integers(), [](const FgAbelianGroup& g) {
    return g == FgAbelianGroup::integers();
  });
  const Verdict3 a1 = admits(deg1, free_r, [&](const FgAbelianGroup& g) { return g == free_r; });
  const Verdict3 b2 = admits(deg2, FgAbelianGroup::trivial(), [](const FgAbelianGroup& g) { return g.is_trivial(); });
  const Verdict3 b1 = admits(deg1, free_r1, [&](const FgAbelianGroup& g) {
    return g.rank() == r - 1 && g.torsion().size() <= 1;
  });

  auto both = [](Verdict3 x, Verdict3 y) {
    if (x == Verdict3::Contradiction || y == Verdict3::Contradiction) return Verdict3::Contradiction;
    if (x == Verdict3::Undetermined || y == Verdict3::Undetermined) return Verdict3::Undetermined;
    return Verdict3::Consistent;
  };
  const Verdict3 opt_a = both(a2, a1), opt_b = both(b2, b1);
  if (opt_a == Verdict3::Consistent || opt_b == Verdict3::Consistent) return {};
  if (opt_a == Verdict3::Contradiction && opt_b == Verdict3::Contradiction) {
    std::string known = "π_2(X), π_1(X) = ";
    known += deg2.isos.empty() ? "?" : deg2.isos.front().first.to_string();
    known += ", ";
    known += deg1.isos.empty() ? "?" : deg1.isos.front().first.to_string();
    return {Verdict3::Contradiction, c.text() + " admits neither (Z, Z^r) nor (1, Z^{r-1} ⊕ Z_q); " + known};
  }
  return {Verdict3::Undetermined, c.text() + " undecided beyond the sphere table"};
}

inline std::string sphere_list(int l1, int l2) {
  return "S^" + std::to_string(l1) + " × S^" + std::to_string(l2);
}

/// The facts obtained by reading both sequences with H and k left
/// symbolic, in increasing degree.
inline std::vector<DerivationEntry> chain_facts(int l1, int l2) {
  const int k_min = l1 + l2 - 1;
  const std::string les1 = "LES of S^1 → " + sphere_list(l1, l2) + " → X";
  const std::string les2 = "LES of H → S^k → X, k - dim H = " + std::to_string(k_min);
  if (l1 >= 3) {
    return {
        {1, "1 ≅ π_1(X) ≅ π_0(H)",
         les1 + ": π_1(S^" + std::to_string(l1) + ") × π_1(S^" + std::to_string(l2) + ") = π_0(S^1) = 1; " + les2 +
             ": π_1(S^k) = π_0(S^k) = 1"},
        {2, "Z ≅ π_2(X) ≅ π_1(H)",
         les1 + ": π_2 and π_1 of the total space vanish, π_1(S^1) = Z; " + les2 + ": π_2(S^k) = π_1(S^k) = 1"},
        {3, "π_p(S^{l_1}) × π_p(S^{l_2}) ≅ π_p(X) ≅ π_{p-1}(H) for 2 < p < k",
         les1 + ": π_p(S^1) = π_{p-1}(S^1) = 1 for p ≥ 3; " + les2 + ": π_p(S^k) = π_{p-1}(S^k) = 1 for p < k"},
    };
  }
  std::vector<DerivationEntry> out;
  out.push_back({1, "π_1(X) ≅ π_0(H) when k ≥ 2", les2 + ": π_1(S^k) = π_0(S^k) = 1"});
  const int r = l2 == 1 ? 2 : 1;
  const std::string zr = r == 1 ? "Z" : "Z^2";
  out.push_back({2, "1 → π_2(X) → Z → " + zr + " → π_1(X) → 1 is exact",
                 les1 + ": π_2 of the total space vanishes, π_1(S^1) = Z, π_0(S^1) = 1"});
  out.push_back({2, "π_2(X) ≅ π_1(H) when k ≥ 3", les2 + ": π_2(S^k) = π_1(S^k) = 1"});
  out.push_back({3, l2 == 1 ? "1 ≅ π_p(X) for p ≥ 3" : "π_p(S^{l_2}) ≅ π_p(X) for p ≥ 3",
                 les1 + ": π_p(S^1) = π_{p-1}(S^1) = 1 for p ≥ 3"});
  return out;
}

}  // namespace detail

/// Enumerates (H, k) over the catalog with k <= k_max and intersects the
/// constraints of both sequences degree by degree up to k_max.  Throws
/// CatalogInsufficient if a survivor could only be confirmed with sphere
/// groups beyond the table.
inline SearchResult obstruction_search(int l1, int l2, int k_max,
                                       const std::vector<CompactGroupDescriptor>& catalog = default_catalog()) {
  if (l1 < 1 || l2 < 1 || l1 % 2 == 0 || l2 % 2 == 0)
    throw Error(Errc::InvalidInput, "link sphere dimensions must be odd and >= 1");
  if (l1 > l2) std::swap(l1, l2);

  SearchResult res;
  res.l1 = l1;
  res.l2 = l2;
  res.k_max = k_max;
  res.log = detail::chain_facts(l1, l2);

  struct Outcome {
    Candidate cand;
    std::optional<Elimination> elim;
  };
  std::vector<Outcome> outcomes;

  const auto les1 = les_quotient_constraints(l1, l2, k_max);
  for (const auto& h : catalog) {
    const int k = l1 + l2 - 1 + h.dim;
    if (k > k_max) continue;
    const Candidate cand{h.name, h.dim, k};
    const auto les2 = les_sphere_quotient_constraints(k, h, k_max);

    std::map<int, detail::DegreeKnowledge> know;
    std::optional<Elimination> elim;
    std::optional<std::string> undetermined;
    for (int p = 1; p <= k_max && !elim; ++p) {
      std::vector<const LesConstraint*> cs;
      for (const auto& c : les1)
        if (c.degree == p) cs.push_back(&c);
      for (const auto& c : les2)
        if (c.degree == p) cs.push_back(&c);
      const detail::DegreeCheck iso = detail::check_isos(cs, know[p]);
      if (iso.verdict == detail::Verdict3::Contradiction) {
        elim = Elimination{cand, p, iso.reason};
        break;
      }
      if (iso.verdict == detail::Verdict3::Undetermined) undetermined = iso.reason;
      for (const LesConstraint* c : cs) {
        if (c->relation != Relation::FiveTerm) continue;
        const detail::DegreeCheck ft = detail::check_five_term(*c, know[1], know[2]);
        if (ft.verdict == detail::Verdict3::Contradiction) elim = Elimination{cand, p, ft.reason};
        else if (ft.verdict == detail::Verdict3::Undetermined) undetermined = ft.reason;
      }
    }
    if (!elim && undetermined)
      throw Error(Errc::CatalogInsufficient, "H=" + h.name + ", k=" + std::to_string(k) + ": " + *undetermined);
    outcomes.push_back({cand, elim});
  }

  std::sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) {
    return std::tie(a.cand.dim_h, a.cand.group, a.cand.k) < std::tie(b.cand.dim_h, b.cand.group, b.cand.k);
  });
  for (const auto& o : outcomes) {
    if (o.elim) {
      res.eliminated.push_back(*o.elim);
      res.log.push_back({o.elim->degree, o.elim->reason,
                         "H=" + o.cand.group + ", k=" + std::to_string(o.cand.k) + " (k - dim H = " +
                             std::to_string(o.cand.k - o.cand.dim_h) + ")"});
    } else {
      res.survivors.push_back(o.cand);
    }
  }
  return res;
}

}  // namespace s1redux
