#pragma once

// Todd-Coxeter enumeration of the cosets of the trivial subgroup (HLT
// strategy with the usual coincidence queue), and the order / exponent
// summary of the resulting finite group.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "s1redux/abelian_group.hpp"
#include "s1redux/error.hpp"

namespace s1redux {

inline constexpr std::size_t kDefaultCosetBudget = 100000;

/// Letters are +k for generator k-1 and -k for its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += "*";
      out += generators.at(std::abs(w[i]) - 1);
      if (w[i] < 0) out += "^-1";
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_to_string(relators[i]);
    return out + ">";
  }
};

/// Complete coset table: action[c][2k] = c * g_k, action[c][2k+1] = c * g_k^-1.
struct CosetTable {
  int num_generators = 0;
  std::vector<std::vector<int>> action;

  int size() const { return static_cast<int>(action.size()); }

  int apply(int c, const Word& w) const {
    for (int x : w) c = action[c][column(x)];
    return c;
  }
  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
};

namespace detail {

class ToddCoxeter {
 public:
  ToddCoxeter(int gens, std::vector<Word> relators, std::size_t budget)
      : cols_(2 * gens), gens_(gens), budget_(budget) {
    for (auto& r : relators) {
      std::vector<int> cols;
      for (int x : r) {
        if (x == 0 || std::abs(x) > gens) throw Error(Errc::InvalidInput, "relator letter out of range");
        cols.push_back(CosetTable::column(x));
      }
      if (!cols.empty()) rels_.push_back(std::move(cols));
    }
    new_coset();
  }

  CosetTable run() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (!live(c)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x)
        if (table_[c][x] < 0) define(c, x);
    }
    // Renumber live cosets, keeping 0 as the identity coset.
    std::vector<int> index(table_.size(), -1);
    int next = 0;
    for (int c = 0; c < static_cast<int>(table_.size()); ++c)
      if (live(c)) index[c] = next++;
    CosetTable out;
    out.num_generators = gens_;
    out.action.assign(next, std::vector<int>(cols_));
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) out.action[index[c]][x] = index[rep(table_[c][x])];
    }
    return out;
  }

 private:
  static int inv(int col) { return col ^ 1; }
  bool live(int c) const { return parent_[c] == c; }

  int new_coset() {
    if (table_.size() >= budget_)
      throw Error(Errc::EnumerationBudgetExceeded, "coset enumeration exceeded " + std::to_string(budget_) + " cosets");
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    const int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const int nxt = parent_[k];
      parent_[k] = r;
      k = nxt;
    }
    return r;
  }

  void merge(int k, int l) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      const int g = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < cols_; ++x) {
        const int d = table_[g][x];
        if (d < 0) continue;
        table_[d][inv(x)] = -1;
        const int mu = rep(g), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x]);
        } else if (table_[nu][inv(x)] >= 0) {
          merge(mu, table_[nu][inv(x)]);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv(x)] = mu;
        }
      }
    }
  }

  int cols_;
  int gens_;
  std::size_t budget_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace detail

/// Regular permutation representation of the group presented by `p`.
/// Throws EnumerationBudgetExceeded past `budget` cosets.
inline CosetTable enumerate_cosets(const GroupPresentation& p, std::size_t budget = kDefaultCosetBudget) {
  return detail::ToddCoxeter(static_cast<int>(p.generators.size()), p.relators, budget).run();
}

struct FiniteGroupSummary {
  std::int64_t order = 1;
  std::int64_t exponent = 1;
  bool abelian = true;
  std::optional<FgAbelianGroup> abelian_form;  // set when abelian
  std::map<std::int64_t, std::int64_t> order_counts;  // element order -> count

  std::string to_string() const {
    std::string out = "order " + std::to_string(order) + ", exponent " + std::to_string(exponent);
    out += abelian ? ", abelian " + abelian_form->to_string() : ", non-abelian";
    return out;
  }

  friend bool operator==(const FiniteGroupSummary&, const FiniteGroupSummary&) = default;
};

/// Abelian group with the given element-order statistics: for each prime
/// p, the number of elements killed by p^k determines the p-primary part.
inline FgAbelianGroup abelian_from_order_counts(const std::map<std::int64_t, std::int64_t>& counts) {
  std::int64_t n = 0;
  for (const auto& [o, c] : counts) n += c;
  std::vector<std::int64_t> primary;
  std::int64_t rest = n;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // killed[k] = #{x : x^(p^k) = 1}
    std::vector<std::int64_t> killed{1};
    for (std::int64_t pk = p;; pk *= p) {
      std::int64_t c = 0;
      for (const auto& [o, cnt] : counts)
        if (pk % o == 0) c += cnt;
      if (c == killed.back()) break;
      killed.push_back(c);
    }
    // parts_at_least[k] = log_p(killed[k] / killed[k-1])
    std::vector<int> at_least;
    for (std::size_t k = 1; k < killed.size(); ++k) {
      std::int64_t q = killed[k] / killed[k - 1];
      int e = 0;
      while (q > 1) {
        q /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      std::int64_t pk = 1;
      for (std::size_t i = 0; i <= k; ++i) pk *= p;
      for (int m = 0; m < at_least[k] - next; ++m) primary.push_back(pk);
    }
  }
  return FgAbelianGroup::from_cyclic_orders(0, primary);
}

inline FiniteGroupSummary summarize(const CosetTable& t) {
  FiniteGroupSummary s;
  const int n = t.size();
  s.order = n;
  // Word from the identity coset to each coset.
  std::vector<Word> word(n);
  std::vector<bool> seen(n, false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    const int c = q.front();
    q.pop_front();
    for (int g = 1; g <= t.num_generators; ++g)
      for (int letter : {g, -g}) {
        const int d = t.action[c][CosetTable::column(letter)];
        if (seen[d]) continue;
        seen[d] = true;
        word[d] = word[c];
        word[d].push_back(letter);
        q.push_back(d);
      }
  }
  for (int c = 0; c < n; ++c) {
    std::int64_t k = 1;
    for (int x = c; x != 0; x = t.apply(x, word[c])) ++k;
    ++s.order_counts[k];
    s.exponent = std::lcm(s.exponent, k);
  }
  for (int a = 1; a <= t.num_generators && s.abelian; ++a)
    for (int b = a + 1; b <= t.num_generators && s.abelian; ++b)
      if (t.apply(0, {a, b}) != t.apply(0, {b, a})) s.abelian = false;
  if (s.abelian) s.abelian_form = abelian_from_order_counts(s.order_counts);
  return s;
}

}  // namespace s1redux
