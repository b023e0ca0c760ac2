#pragma once

// Constraints that the homotopy long exact sequence of a principal
// fibration F -> E -> X forces on pi_p(X).  Connecting maps are unknown,
// so a constraint is emitted only where exactness pins the group down:
//
//   pi_p(F) = pi_{p-1}(F) = 1   =>  pi_p(X) = pi_p(E)
//   pi_p(E) = pi_{p-1}(E) = 1   =>  pi_p(X) = pi_{p-1}(F)
//   pi_p(E) = 1                 =>  pi_p(X) embeds in pi_{p-1}(F)
//
// plus the five-term sequence 1 -> pi_2(X) -> Z -> Z^r -> pi_1(X) -> 1
// for a connected circle-like fiber over a total space with free pi_1.

#include <optional>
#include <string>
#include <vector>

#include "s1redux/abelian_group.hpp"
#include "s1redux/homotopy_value.hpp"
#include "s1redux/lie_catalog.hpp"

namespace s1redux {

struct SphereFactor {
  int dim = 1;
  std::string symbol;  // e.g. "l_1"; empty renders the number
};

namespace detail {

inline std::string pi_symbol(const std::string& degree) {
  return degree.size() == 1 ? "π_" + degree : "π_{" + degree + "}";
}

inline std::string degree_text(int degree, int shift, bool symbolic) {
  if (!symbolic) return std::to_string(degree);
  if (shift == 0) return "p";
  return "p" + std::to_string(shift);
}

}  // namespace detail

/// pi_degree of a product of spheres or of a compact group.  A group may be
/// symbolic (no descriptor), in which case only pi_2 = 1 is known.
struct Term {
  enum class Kind { Spheres, Group };

  Kind kind = Kind::Spheres;
  int degree = 0;
  int shift = 0;  // degree relative to the sequence index p
  std::vector<SphereFactor> spheres;
  std::optional<CompactGroupDescriptor> group;
  std::string group_symbol = "H";

  /// Sphere factors whose pi_degree is not trivially zero.
  std::vector<int> effective_dims() const {
    std::vector<int> out;
    for (const auto& s : spheres)
      if (!(degree < s.dim || (s.dim == 1 && degree >= 2))) out.push_back(s.dim);
    return out;
  }

  std::optional<HomotopyValue> value() const {
    if (kind == Kind::Spheres) {
      HomotopyValue v = HomotopyValue::known(FgAbelianGroup::trivial());
      for (int d : effective_dims()) v = direct_sum(v, sphere_pi_value(degree, d));
      return v;
    }
    if (group) return group->pi(degree);
    if (degree == 2) return HomotopyValue::known(FgAbelianGroup::trivial());
    return std::nullopt;
  }

  bool known_trivial() const {
    const auto v = value();
    return v && v->known_trivial();
  }

  bool same_as(const Term& o) const {
    if (kind != o.kind || degree != o.degree) return false;
    if (kind == Kind::Spheres) return effective_dims() == o.effective_dims();
    return group_symbol == o.group_symbol && group.has_value() == o.group.has_value() &&
           (!group || group->name == o.group->name);
  }

  std::string render(bool symbolic = false) const {
    const std::string deg = detail::degree_text(degree, shift, symbolic);
    if (kind == Kind::Group) return detail::pi_symbol(deg) + "(" + group_symbol + ")";
    std::string s;
    for (const auto& f : spheres) {
      if (symbolic && f.dim == 1 && degree >= 2 && !f.symbol.empty()) continue;
      if (!s.empty()) s += " × ";
      const std::string sphere =
          (symbolic && !f.symbol.empty()) ? "S^{" + f.symbol + "}" : "S^" + std::to_string(f.dim);
      s += detail::pi_symbol(deg) + "(" + sphere + ")";
    }
    return s.empty() ? "1" : s;
  }
};

struct SpaceModel {
  std::string name;  // e.g. "S^3 × S^5" or "H"
  bool is_group = false;
  std::vector<SphereFactor> spheres;
  std::optional<CompactGroupDescriptor> group;

  static SpaceModel sphere_product(std::vector<SphereFactor> factors) {
    SpaceModel s;
    for (const auto& f : factors) {
      if (!s.name.empty()) s.name += " × ";
      s.name += "S^" + std::to_string(f.dim);
    }
    s.spheres = std::move(factors);
    return s;
  }
  static SpaceModel lie_group(std::optional<CompactGroupDescriptor> h) {
    SpaceModel s;
    s.is_group = true;
    s.name = h ? h->name : "H";
    s.group = std::move(h);
    return s;
  }

  Term pi(int degree, int shift) const {
    Term t;
    t.degree = degree;
    t.shift = shift;
    if (is_group) {
      t.kind = Term::Kind::Group;
      t.group = group;
    } else {
      t.spheres = spheres;
    }
    return t;
  }
};

enum class Relation { Iso, SubgroupOf, FiveTerm };

struct LesConstraint {
  int degree = 0;
  Relation relation = Relation::Iso;
  Term rhs;                // Iso, SubgroupOf
  int five_term_rank = 0;  // FiveTerm: rank r of pi_1 of the total space
  std::string base_symbol = "X";
  std::string provenance;

  std::string text(bool symbolic = false) const {
    const std::string lhs = detail::pi_symbol(detail::degree_text(degree, 0, symbolic)) + "(" + base_symbol + ")";
    switch (relation) {
      case Relation::Iso: return lhs + " ≅ " + rhs.render(symbolic);
      case Relation::SubgroupOf: return lhs + " ≤ " + rhs.render(symbolic);
      case Relation::FiveTerm: {
        const std::string zr = five_term_rank == 1 ? "Z" : "Z^" + std::to_string(five_term_rank);
        return "1 → π_2(" + base_symbol + ") → Z → " + zr + " → π_1(" + base_symbol + ") → 1 is exact";
      }
    }
    return lhs;
  }
};

struct FibrationData {
  SpaceModel fiber;
  SpaceModel total;
  std::string base_symbol = "X";

  std::string label() const { return fiber.name + " → " + total.name + " → " + base_symbol; }
};

/// Constraints for degrees p_min..p_max, in increasing degree.
inline std::vector<LesConstraint> fibration_constraints(const FibrationData& fib, int p_min, int p_max) {
  std::vector<LesConstraint> out;
  auto make = [&](int p, Relation rel, Term rhs, std::string why) {
    LesConstraint c;
    c.degree = p;
    c.relation = rel;
    c.rhs = std::move(rhs);
    c.base_symbol = fib.base_symbol;
    c.provenance = "LES of " + fib.label() + " at p=" + std::to_string(p) + ": " + why;
    out.push_back(std::move(c));
  };

  for (int p = std::max(1, p_min); p <= p_max; ++p) {
    const Term fp = fib.fiber.pi(p, 0), fq = fib.fiber.pi(p - 1, -1);
    const Term ep = fib.total.pi(p, 0), eq = fib.total.pi(p - 1, -1);

    if (p == 2 && ep.known_trivial() && fp.known_trivial()) {
      const auto f1 = fib.fiber.pi(1, -1).value();
      const auto e1 = eq.value();
      const bool circle_fiber = f1 && f1->exact && f1->group == FgAbelianGroup::integers() &&
                                fib.fiber.pi(0, -2).known_trivial();
      if (circle_fiber && e1 && e1->exact && e1->group.rank() >= 1 && e1->group.torsion().empty()) {
        LesConstraint c;
        c.degree = 2;
        c.relation = Relation::FiveTerm;
        c.five_term_rank = e1->group.rank();
        c.base_symbol = fib.base_symbol;
        c.provenance = "LES of " + fib.label() + " at p=2,1: " + ep.render() + " = 1, " + fq.render() + " = Z, " +
                       eq.render() + " = " + e1->group.to_string() + ", connecting map unknown";
        out.push_back(std::move(c));
        continue;
      }
    }

    bool pinned = false;
    if (fp.known_trivial() && fq.known_trivial()) {
      make(p, Relation::Iso, ep, fp.render() + " = " + fq.render() + " = 1");
      pinned = true;
    }
    if (ep.known_trivial() && eq.known_trivial()) {
      make(p, Relation::Iso, fq, ep.render() + " = " + eq.render() + " = 1");
      pinned = true;
    }
    if (!pinned && ep.known_trivial()) make(p, Relation::SubgroupOf, fq, ep.render() + " = 1");
  }
  return out;
}

/// The circle quotient E_- x E_+ -> X with E_- = S^{l1}, E_+ = S^{l2}.
inline FibrationData circle_quotient_fibration(int l1, int l2) {
  return {SpaceModel::sphere_product({{1, ""}}), SpaceModel::sphere_product({{l1, "l_1"}, {l2, "l_2"}}), "X"};
}

/// The sphere quotient S^k -> X by H (nullopt: symbolic H).
inline FibrationData sphere_quotient_fibration(int k, std::optional<CompactGroupDescriptor> h) {
  return {SpaceModel::lie_group(std::move(h)), SpaceModel::sphere_product({{k, "k"}}), "X"};
}

inline std::vector<LesConstraint> les_quotient_constraints(int l1, int l2, int p_max) {
  return fibration_constraints(circle_quotient_fibration(l1, l2), 1, p_max);
}

inline std::vector<LesConstraint> les_sphere_quotient_constraints(int k, const CompactGroupDescriptor& h, int p_max) {
  return fibration_constraints(sphere_quotient_fibration(k, h), 1, p_max);
}

/// S^1 -> S^3 -> S^2.
inline std::vector<LesConstraint> hopf_constraints(int p_max) {
  return fibration_constraints({SpaceModel::sphere_product({{1, ""}}), SpaceModel::sphere_product({{3, ""}}), "S^2"}, 1,
                               p_max);
}

}  // namespace s1redux
