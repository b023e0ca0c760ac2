#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "s1redux/abelian_group.hpp"

using namespace s1redux;

TEST(FgAbelianGroup, WorkedExamples) {
  const auto z6 = direct_sum(FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(3));
  EXPECT_EQ(z6, FgAbelianGroup::cyclic(6));
  EXPECT_EQ(z6.torsion(), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(direct_sum(FgAbelianGroup::integers(), FgAbelianGroup::trivial()), FgAbelianGroup::integers());
  EXPECT_FALSE(is_finite(direct_sum(FgAbelianGroup::integers(), FgAbelianGroup::cyclic(2))));
}

TEST(FgAbelianGroup, Rendering) {
  EXPECT_EQ(FgAbelianGroup::trivial().to_string(), "1");
  EXPECT_EQ(FgAbelianGroup::integers(2).to_string(), "Z^2");
  EXPECT_EQ(FgAbelianGroup::from_cyclic_orders(1, {4, 2}).to_string(), "Z ⊕ Z_2 ⊕ Z_4");
}

TEST(FgAbelianGroup, DegenerateOrders) {
  // Z_1 is trivial, Z_0 is Z.
  EXPECT_TRUE(FgAbelianGroup::cyclic(1).is_trivial());
  EXPECT_EQ(FgAbelianGroup::cyclic(0), FgAbelianGroup::integers());
  EXPECT_THROW(FgAbelianGroup::from_cyclic_orders(-1, {}), Error);
}

TEST(Smith, RelationMatrix) {
  // <x, y | 2x + 4y, 6x + 8y> has determinant -8 and gcd of entries 2: Z_2 + Z_4.
  EXPECT_EQ(smith_diagonal({{2, 4}, {6, 8}}), (std::vector<std::int64_t>{2, 4}));
  const auto g = FgAbelianGroup::from_relations({{2, 4}, {6, 8}}, 2);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.torsion(), (std::vector<std::int64_t>{2, 4}));
  // A single relation on three generators leaves rank 2.
  EXPECT_EQ(FgAbelianGroup::from_relations({{3, 6, 9}}, 3), FgAbelianGroup::from_cyclic_orders(2, {3}));
}

TEST(Smith, NormalFormAgreesWithElementOrders) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 4), ord(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> orders(static_cast<std::size_t>(len(rng)));
    std::int64_t size = 1;
    for (auto& o : orders) {
      o = ord(rng);
      size *= o;
    }
    if (size > 5000) continue;
    const auto g = FgAbelianGroup::from_cyclic_orders(0, orders);
    for (std::size_t i = 1; i < g.torsion().size(); ++i) EXPECT_EQ(g.torsion()[i] % g.torsion()[i - 1], 0);
    EXPECT_EQ(g.order(), size);
    std::vector<std::int64_t> nf = g.torsion();
    if (nf.empty()) nf.push_back(1);
    EXPECT_EQ(oracle::cyclic_product_order_counts(nf), oracle::cyclic_product_order_counts(orders));
  }
}

TEST(Smith, DirectSumIsCommutativeAndAssociative) {
  const FgAbelianGroup a = FgAbelianGroup::from_cyclic_orders(1, {6});
  const FgAbelianGroup b = FgAbelianGroup::from_cyclic_orders(0, {4, 10});
  const FgAbelianGroup c = FgAbelianGroup::cyclic(9);
  EXPECT_EQ(direct_sum(a, b), direct_sum(b, a));
  EXPECT_EQ(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)));
  EXPECT_EQ(power(FgAbelianGroup::cyclic(2), 3).torsion(), (std::vector<std::int64_t>{2, 2, 2}));
}
