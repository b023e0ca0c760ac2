#pragma once

// JSON encoding of every result type, and decoding of weight vectors,
// points and finite groupoids.  Decoders reject unknown fields.

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "s1redux/classifying_space.hpp"
#include "s1redux/error.hpp"
#include "s1redux/groupoid.hpp"
#include "s1redux/hilbert.hpp"
#include "s1redux/momentum.hpp"
#include "s1redux/nerve.hpp"
#include "s1redux/obstruction.hpp"
#include "s1redux/verdict.hpp"
#include "s1redux/weights.hpp"

namespace s1redux {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "s1redux/1";

namespace detail {

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, what + " must be a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw Error(Errc::InvalidInput, what + ": unknown field '" + key + "'");
}

inline const json& require(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw Error(Errc::InvalidInput, what + ": missing field '" + std::string(key) + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, what + ": " + e.what());
  }
}

inline void check_schema(const json& j, const std::string& what) {
  if (j.contains("schema") && j.at("schema") != kSchemaVersion)
    throw Error(Errc::InvalidInput, what + ": unsupported schema " + j.at("schema").dump());
}

}  // namespace detail

// ---- encoders ---------------------------------------------------------

inline json to_json(const WeightVector& w) { return json(std::vector<int>(w.entries().begin(), w.entries().end())); }

inline json to_json(const SignProfile& s) {
  return {{"numNegative", s.num_negative}, {"numZero", s.num_zero}, {"numPositive", s.num_positive}};
}

inline json to_json(const Point& z) {
  json out = json::array();
  for (const auto& c : z) out.push_back({c.real(), c.imag()});
  return out;
}

inline json to_json(const ConeLinkDecomposition& d) {
  return {{"kind", to_string(d.kind)}, {"m", d.m},           {"j", d.j},
          {"lMinus", d.l_minus},       {"lPlus", d.l_plus}, {"flatFactorDim", d.flat_factor_dim}};
}

/// Supports are written 1-based.
inline json to_json(const StratumDescriptor& s) {
  json supports = json::array();
  for (const auto& sup : s.support_class) {
    json one = json::array();
    for (auto i : sup) one.push_back(i + 1);
    supports.push_back(one);
  }
  return {{"stabilizer", s.stabilizer.to_string()},
          {"supportClass", supports},
          {"dimensionInM", s.dimension_in_m},
          {"dimensionInQuotient", s.dimension_in_quotient},
          {"depth", s.depth},
          {"frontierOf", s.frontier_of}};
}

inline json to_json(const HilbertBasis& h) {
  json gens = json::array();
  for (const auto& g : h.generators) gens.push_back({{"a", g.a}, {"b", g.b}});
  return {{"generators", gens}, {"k", h.embedding_dim}, {"complete", h.complete}, {"degreeCap", h.degree_cap}};
}

inline json to_json(const Candidate& c) { return {{"group", c.group}, {"dimH", c.dim_h}, {"k", c.k}}; }

inline json to_json(const SearchResult& r) {
  json surv = json::array(), elim = json::array(), log = json::array();
  for (const auto& c : r.survivors) surv.push_back(to_json(c));
  for (const auto& e : r.eliminated) {
    json x = to_json(e.candidate);
    x["degree"] = e.degree;
    x["reason"] = e.reason;
    elim.push_back(x);
  }
  for (const auto& l : r.log) log.push_back({{"degree", l.degree}, {"constraint", l.constraint}, {"provenance", l.provenance}});
  return {{"l1", r.l1},          {"l2", r.l2},         {"kMax", r.k_max}, {"status", r.status()},
          {"survivors", surv}, {"eliminated", elim}, {"log", log}};
}

inline json to_json(const Verdict& v) {
  return {{"outcome", to_string(v.outcome)},
          {"hssOrbifold", v.hss_orbifold ? json(*v.hss_orbifold) : json(nullptr)},
          {"reducedDim", v.reduced_dim},
          {"evidence",
           {{"clause", v.evidence.clause},
            {"signs", to_json(v.evidence.signs)},
            {"level", v.evidence.level},
            {"notes", v.evidence.notes}}}};
}

inline json to_json(const AnalysisBundle& b) {
  json out = {{"schema", kSchemaVersion},
              {"weights", to_json(b.weights)},
              {"level", b.level},
              {"signs", to_json(b.signs)},
              {"decomposition", to_json(b.decomposition)},
              {"reducedDim", b.reduced_dim},
              {"hilbert",
               {{"k", b.hilbert.k},
                {"generatorCount", b.hilbert.generator_count},
                {"complete", b.hilbert.complete},
                {"degreeCap", b.hilbert.degree_cap}}},
              {"verdict", to_json(b.verdict)}};
  if (b.obstruction) out["obstruction"] = to_json(*b.obstruction);
  return out;
}

inline json to_json(const AuditReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"weights", x.weights}, {"check", x.check}, {"detail", x.detail}});
  return {{"schema", kSchemaVersion},
          {"maxN", r.max_n},
          {"maxWeight", r.max_weight},
          {"vectorsChecked", r.vectors_checked},
          {"weaklyUnrepresentable", r.weakly_unrepresentable},
          {"violations", v},
          {"ok", r.ok()}};
}

inline json to_json(const FiniteGroupSummary& s) {
  json counts = json::object();
  for (const auto& [o, c] : s.order_counts) counts[std::to_string(o)] = c;
  return {{"order", s.order},
          {"exponent", s.exponent},
          {"abelian", s.abelian},
          {"abelianForm", s.abelian_form ? json(s.abelian_form->to_string()) : json(nullptr)},
          {"elementOrders", counts}};
}

inline json to_json(const FiniteGroupoid& g, const Pi1Result& r) {
  json comp = json::array(), rels = json::array();
  for (int x : r.component) comp.push_back(g.objects()[x]);
  for (const auto& w : r.presentation.relators) rels.push_back(r.presentation.word_to_string(w));
  return {{"basepoint", g.objects()[r.basepoint]},
          {"component", comp},
          {"generators", r.presentation.generators},
          {"relators", rels},
          {"group", r.summary ? to_json(*r.summary) : json(nullptr)}};
}

inline json to_json(const SimplicialReport& r) {
  json out = {{"nMax", r.n_max}, {"identitiesChecked", r.identities_checked}, {"ok", r.ok()}};
  if (r.violation) {
    const auto& v = *r.violation;
    out["violation"] = {{"level", v.level},     {"sourceLevel", v.source_level}, {"identity", v.identity},
                        {"simplex", v.simplex}, {"lhs", v.lhs},                   {"rhs", v.rhs}};
  }
  return out;
}

// ---- decoders ---------------------------------------------------------

/// Accepts [1, -1, 2] and normalizes to an effective vector.
inline WeightVector weights_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "weights must be an array of integers");
  for (const auto& v : j)
    if (!v.is_number_integer()) throw Error(Errc::InvalidInput, "weights must be integers, got " + v.dump());
  const auto raw = detail::get_as<std::vector<int>>(j, "weights");
  return normalize_effective(raw);
}

inline Point point_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "point must be an array of [re, im] pairs");
  Point z;
  for (const auto& c : j) {
    const auto p = detail::get_as<std::vector<double>>(c, "point entry");
    if (p.size() != 2) throw Error(Errc::InvalidInput, "point entry must be [re, im]");
    z.emplace_back(p[0], p[1]);
  }
  return z;
}

inline FiniteGroup group_from_json(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "1") return FiniteGroup::cyclic(1);
    if (name == "S_3") return FiniteGroup::s3();
    if (name == "Z_2xZ_2") return FiniteGroup::klein();
    if (name.rfind("Z_", 0) == 0) {
      try {
        std::size_t used = 0;
        const int n = std::stoi(name.substr(2), &used);
        if (used == name.size() - 2 && n >= 1) return FiniteGroup::cyclic(n);
      } catch (const std::exception&) {
      }
    }
    throw Error(Errc::InvalidInput, "unknown group '" + name + "'");
  }
  detail::reject_unknown(j, {"name", "elements", "table"}, "group");
  FiniteGroup g;
  g.name = j.value("name", "G");
  g.elements = detail::get_as<std::vector<std::string>>(detail::require(j, "elements", "group"), "group elements");
  g.mul = detail::get_as<std::vector<std::vector<int>>>(detail::require(j, "table", "group"), "group table");
  g.validate();
  return g;
}

/// {objects, arrows: [{id, src, tgt}], compose: [[g, h, gh]]} with arrows
/// and objects referred to by name, or
/// {group: "Z_n" | {elements, table}, set, action: [[g.x for x] for g]}.
/// Both forms may carry "schema" and "basepoint".  With validate = false
/// the explicit form skips the groupoid axioms (for fault injection).
inline FiniteGroupoid groupoid_from_json(const json& j, bool validate = true) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "groupoid must be a JSON object");
  detail::check_schema(j, "groupoid");
  if (j.contains("group")) {
    detail::reject_unknown(j, {"schema", "basepoint", "group", "set", "action"}, "action groupoid");
    const FiniteGroup g = group_from_json(j.at("group"));
    const auto set = detail::get_as<std::vector<std::string>>(detail::require(j, "set", "action groupoid"), "set");
    const auto act = detail::get_as<ActionTable>(detail::require(j, "action", "action groupoid"), "action");
    return action_groupoid(g, set, act);
  }
  detail::reject_unknown(j, {"schema", "basepoint", "objects", "arrows", "compose"}, "groupoid");
  const auto objects = detail::get_as<std::vector<std::string>>(detail::require(j, "objects", "groupoid"), "objects");
  auto object_id = [&](const std::string& name) {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == name) return static_cast<int>(i);
    throw Error(Errc::InvalidInput, "unknown object '" + name + "'");
  };
  std::vector<Arrow> arrows;
  for (const auto& a : detail::require(j, "arrows", "groupoid")) {
    detail::reject_unknown(a, {"id", "src", "tgt"}, "arrow");
    arrows.push_back({detail::get_as<std::string>(detail::require(a, "id", "arrow"), "arrow id"),
                      object_id(detail::get_as<std::string>(detail::require(a, "src", "arrow"), "arrow src")),
                      object_id(detail::get_as<std::string>(detail::require(a, "tgt", "arrow"), "arrow tgt"))});
  }
  auto arrow_id = [&](const std::string& name) {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    throw Error(Errc::InvalidInput, "unknown arrow '" + name + "'");
  };
  FiniteGroupoid::Table table(arrows.size(), std::vector<int>(arrows.size(), -1));
  for (const auto& row : detail::require(j, "compose", "groupoid")) {
    const auto t = detail::get_as<std::vector<std::string>>(row, "compose entry");
    if (t.size() != 3) throw Error(Errc::InvalidInput, "compose entry must be [g, h, gh]");
    table[arrow_id(t[0])][arrow_id(t[1])] = arrow_id(t[2]);
  }
  return validate ? FiniteGroupoid::build(objects, std::move(arrows), std::move(table))
                  : FiniteGroupoid::unchecked(objects, std::move(arrows), std::move(table));
}

/// Explicit form of any groupoid; round-trips through groupoid_from_json.
inline json groupoid_to_json(const FiniteGroupoid& g) {
  json arrows = json::array(), compose = json::array();
  for (const auto& a : g.arrows()) arrows.push_back({{"id", a.name}, {"src", g.objects()[a.src]}, {"tgt", g.objects()[a.tgt]}});
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b = 0; b < g.num_arrows(); ++b)
      if (g.compose(a, b) >= 0)
        compose.push_back({g.arrows()[a].name, g.arrows()[b].name, g.arrows()[g.compose(a, b)].name});
  return {{"schema", kSchemaVersion}, {"objects", g.objects()}, {"arrows", arrows}, {"compose", compose}};
}

}  // namespace s1redux
