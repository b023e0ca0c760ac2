#pragma once

// Finite discrete groupoids, finite groups given by multiplication tables,
// and the action groupoid of a group acting on a finite set.
//
// Composition convention: for arrows g, h with s(g) = t(h) the composite
// g*h = g∘h runs h first, so s(g*h) = s(h) and t(g*h) = t(g).

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "s1redux/error.hpp"

namespace s1redux {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

class FiniteGroupoid {
 public:
  /// compose[g][h] = g*h when s(g) = t(h), -1 otherwise.
  using Table = std::vector<std::vector<int>>;

  FiniteGroupoid() = default;

  /// Validates every groupoid axiom; throws InvalidGroupoid.
  static FiniteGroupoid build(std::vector<std::string> objects, std::vector<Arrow> arrows, Table compose) {
    FiniteGroupoid g = unchecked(std::move(objects), std::move(arrows), std::move(compose));
    g.validate();
    return g;
  }

  /// No axiom checks beyond array shapes.  Units and inverses are filled in
  /// where they can be found; missing ones are -1.
  static FiniteGroupoid unchecked(std::vector<std::string> objects, std::vector<Arrow> arrows, Table compose) {
    FiniteGroupoid g;
    g.objects_ = std::move(objects);
    g.arrows_ = std::move(arrows);
    g.compose_ = std::move(compose);
    const int n = static_cast<int>(g.arrows_.size());
    if (static_cast<int>(g.compose_.size()) != n)
      throw Error(Errc::InvalidGroupoid, "composition table must have one row per arrow");
    for (const auto& row : g.compose_)
      if (static_cast<int>(row.size()) != n) throw Error(Errc::InvalidGroupoid, "composition table must be square");
    for (const auto& a : g.arrows_)
      if (a.src < 0 || a.tgt < 0 || a.src >= g.num_objects() || a.tgt >= g.num_objects())
        throw Error(Errc::InvalidGroupoid, "arrow " + a.name + " has an unknown endpoint");
    g.find_units();
    g.find_inverses();
    return g;
  }

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Table& table() const { return compose_; }

  int s(int g) const { return arrows_.at(g).src; }
  int t(int g) const { return arrows_.at(g).tgt; }
  bool composable(int g, int h) const { return s(g) == t(h); }
  /// g*h, or -1 if not composable or undefined.
  int compose(int g, int h) const { return compose_.at(g).at(h); }
  int unit(int x) const { return units_.at(x); }
  int inverse(int g) const { return inverses_.at(g); }
  bool is_unit(int g) const { return g >= 0 && units_.at(s(g)) == g; }

  std::optional<int> object_index(const std::string& name) const {
    for (int i = 0; i < num_objects(); ++i)
      if (objects_[i] == name) return i;
    return std::nullopt;
  }
  std::optional<int> arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i)
      if (arrows_[i].name == name) return i;
    return std::nullopt;
  }

  /// Arrows x -> y.
  std::vector<int> hom(int x, int y) const {
    std::vector<int> out;
    for (int g = 0; g < num_arrows(); ++g)
      if (s(g) == x && t(g) == y) out.push_back(g);
    return out;
  }

  /// Connected-component label of every object (labels are 0, 1, ... in
  /// order of first object).
  std::vector<int> components() const {
    std::vector<int> parent(num_objects());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : arrows_) parent[find(a.src)] = find(a.tgt);
    std::vector<int> label(num_objects(), -1), root_label(num_objects(), -1);
    int next = 0;
    for (int x = 0; x < num_objects(); ++x) {
      const int r = find(x);
      if (root_label[r] < 0) root_label[r] = next++;
      label[x] = root_label[r];
    }
    return label;
  }

  void validate() const {
    const int n = num_arrows();
    auto fail = [](const std::string& msg) { throw Error(Errc::InvalidGroupoid, msg); };
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        const int gh = compose_[g][h];
        if (!composable(g, h)) {
          if (gh != -1) fail(arrows_[g].name + "*" + arrows_[h].name + " defined on a non-composable pair");
          continue;
        }
        if (gh < 0 || gh >= n) fail(arrows_[g].name + "*" + arrows_[h].name + " missing");
        if (s(gh) != s(h) || t(gh) != t(g))
          fail(arrows_[g].name + "*" + arrows_[h].name + " has the wrong endpoints");
      }
    }
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        if (!composable(g, h)) continue;
        for (int k = 0; k < n; ++k) {
          if (!composable(h, k)) continue;
          if (compose_[compose_[g][h]][k] != compose_[g][compose_[h][k]])
            fail("associativity fails on (" + arrows_[g].name + ", " + arrows_[h].name + ", " + arrows_[k].name + ")");
        }
      }
    for (int x = 0; x < num_objects(); ++x)
      if (units_[x] < 0) fail("object " + objects_[x] + " has no unit");
    for (int g = 0; g < n; ++g)
      if (inverses_[g] < 0) fail("arrow " + arrows_[g].name + " has no inverse");
  }

 private:
  void find_units() {
    units_.assign(objects_.size(), -1);
    for (int x = 0; x < num_objects(); ++x) {
      for (int u = 0; u < num_arrows() && units_[x] < 0; ++u) {
        if (s(u) != x || t(u) != x) continue;
        bool ok = true;
        for (int g = 0; g < num_arrows() && ok; ++g) {
          if (t(g) == x && compose_[u][g] != g) ok = false;
          if (s(g) == x && compose_[g][u] != g) ok = false;
        }
        if (ok) units_[x] = u;
      }
    }
  }

  void find_inverses() {
    inverses_.assign(arrows_.size(), -1);
    for (int g = 0; g < num_arrows(); ++g)
      for (int h = 0; h < num_arrows() && inverses_[g] < 0; ++h)
        if (s(h) == t(g) && t(h) == s(g) && units_[s(g)] >= 0 && units_[t(g)] >= 0 &&
            compose_[h][g] == units_[s(g)] && compose_[g][h] == units_[t(g)])
          inverses_[g] = h;
  }

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  Table compose_;
  std::vector<int> units_;
  std::vector<int> inverses_;
};

/// A finite group as a multiplication table over elements 0..n-1.
struct FiniteGroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b

  int order() const { return static_cast<int>(elements.size()); }

  int identity() const {
    for (int e = 0; e < order(); ++e) {
      bool ok = true;
      for (int a = 0; a < order() && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
      if (ok) return e;
    }
    throw Error(Errc::InvalidInput, name + ": no identity element");
  }

  int inverse(int a) const {
    const int e = identity();
    for (int b = 0; b < order(); ++b)
      if (mul[a][b] == e) return b;
    throw Error(Errc::InvalidInput, name + ": element without inverse");
  }

  int element_order(int a) const {
    const int e = identity();
    int k = 1;
    for (int x = a; x != e; x = mul[x][a]) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (mul[a][b] != mul[b][a]) return false;
    return true;
  }

  /// Checks closure, associativity, identity and inverses.
  void validate() const {
    const int n = order();
    if (n == 0) throw Error(Errc::InvalidInput, "empty group");
    if (static_cast<int>(mul.size()) != n) throw Error(Errc::InvalidInput, name + ": table has wrong shape");
    for (const auto& row : mul) {
      if (static_cast<int>(row.size()) != n) throw Error(Errc::InvalidInput, name + ": table has wrong shape");
      for (int v : row)
        if (v < 0 || v >= n) throw Error(Errc::InvalidInput, name + ": table entry out of range");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw Error(Errc::InvalidInput, name + ": not associative");
    for (int a = 0; a < n; ++a) (void)inverse(a);
  }

  static FiniteGroup cyclic(int n) {
    if (n < 1) throw Error(Errc::InvalidInput, "cyclic group order must be >= 1");
    FiniteGroup g;
    g.name = n == 1 ? "1" : "Z_" + std::to_string(n);
    for (int a = 0; a < n; ++a) g.elements.push_back(std::to_string(a));
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    return g;
  }

  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    const int m = b.order();
    for (const auto& x : a.elements)
      for (const auto& y : b.elements) g.elements.push_back("(" + x + "," + y + ")");
    const int n = a.order() * m;
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.mul[i][j] = a.mul[i / m][j / m] * m + b.mul[i % m][j % m];
    return g;
  }

  static FiniteGroup klein() {
    FiniteGroup g = product(cyclic(2), cyclic(2));
    g.name = "Z_2xZ_2";
    return g;
  }

  /// Permutations of {0,1,2}, composed right to left.
  static FiniteGroup s3() {
    const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    FiniteGroup g;
    g.name = "S_3";
    for (const auto& p : perms) g.elements.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    g.mul.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (int k = 0; k < 6; ++k)
          if (perms[k] == c) g.mul[a][b] = k;
      }
    return g;
  }
};

/// act[g][x] = g.x for a left action on {0..|X|-1}.
using ActionTable = std::vector<std::vector<int>>;

inline void validate_action(const FiniteGroup& g, const ActionTable& act, int set_size) {
  if (static_cast<int>(act.size()) != g.order()) throw Error(Errc::InvalidInput, "action table needs one row per group element");
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != set_size) throw Error(Errc::InvalidInput, "action table row has wrong length");
    for (int v : row)
      if (v < 0 || v >= set_size) throw Error(Errc::InvalidInput, "action table entry out of range");
  }
  const int e = g.identity();
  for (int x = 0; x < set_size; ++x) {
    if (act[e][x] != x) throw Error(Errc::InvalidInput, "identity must act trivially");
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (act[g.mul[a][b]][x] != act[a][act[b][x]]) throw Error(Errc::InvalidInput, "action is not compatible with the product");
  }
}

/// G ⋉ X: arrows (g, x): x -> g.x, (g, h.x) * (h, x) = (gh, x).
inline FiniteGroupoid action_groupoid(const FiniteGroup& g, const std::vector<std::string>& set, const ActionTable& act) {
  const int n = static_cast<int>(set.size());
  validate_action(g, act, n);
  std::vector<Arrow> arrows;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < n; ++x) arrows.push_back({"(" + g.elements[a] + "," + set[x] + ")", x, act[a][x]});
  const int m = static_cast<int>(arrows.size());
  FiniteGroupoid::Table table(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (arrows[i].src != arrows[j].tgt) continue;
      const int a = i / n, b = j / n, x = j % n;
      table[i][j] = g.mul[a][b] * n + x;
    }
  return FiniteGroupoid::build(set, std::move(arrows), std::move(table));
}

/// Γ ⇉ * (one object).
inline FiniteGroupoid group_groupoid(const FiniteGroup& g) {
  return action_groupoid(g, {"*"}, ActionTable(g.order(), std::vector<int>{0}));
}

/// One arrow between any two of k objects.
inline FiniteGroupoid pair_groupoid(int k) {
  std::vector<std::string> objects;
  for (int i = 0; i < k; ++i) objects.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x) arrows.push_back({"(" + objects[y] + "," + objects[x] + ")", x, y});
  const int m = k * k;
  FiniteGroupoid::Table table(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (arrows[i].src == arrows[j].tgt) table[i][j] = arrows[i].tgt * k + arrows[j].src;
  return FiniteGroupoid::build(std::move(objects), std::move(arrows), std::move(table));
}

/// M ⇉ M: units only.
inline FiniteGroupoid trivial_groupoid(const std::vector<std::string>& objects) {
  std::vector<Arrow> arrows;
  for (int x = 0; x < static_cast<int>(objects.size()); ++x) arrows.push_back({"u(" + objects[x] + ")", x, x});
  const int m = static_cast<int>(arrows.size());
  FiniteGroupoid::Table table(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) table[i][i] = i;
  return FiniteGroupoid::build(objects, std::move(arrows), std::move(table));
}

}  // namespace s1redux
