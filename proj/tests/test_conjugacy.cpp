#include <gtest/gtest.h>

#include <random>

#include "covlab/conjugacy.hpp"
#include "oracle.hpp"

using namespace covlab;

namespace {

oracle::Set ambient_elements(const Ambient& a) {
  return a.is_alternating() ? oracle::alternating(static_cast<int>(a.n)) : oracle::symmetric(static_cast<int>(a.n));
}

}  // namespace

TEST(Splitting, Examples) {
  EXPECT_FALSE(splits_in_alternating(CycleType::parse("[1;3;3]")));
  EXPECT_TRUE(splits_in_alternating(CycleType::parse("[3;5]")));
  EXPECT_TRUE(splits_in_alternating(CycleType::parse("[9]")));
  EXPECT_FALSE(splits_in_alternating(CycleType::parse("[1;1;1;1;1]")));
  EXPECT_THROW(splits_in_alternating(CycleType::parse("[2;3]")), PreconditionError);
}

TEST(ClassTable, Examples) {
  const auto& a5 = class_table(Ambient::alternating(5));
  ASSERT_EQ(a5.size(), 5U);
  std::vector<std::string> labels;
  for (const auto& e : a5.entries()) labels.push_back(e.id.to_string());
  EXPECT_EQ(labels, (std::vector<std::string>{"[1;1;1;1;1]", "[1;2;2]", "[1;1;3]", "[5]+", "[5]-"}));
  EXPECT_EQ(class_table(Ambient::alternating(7)).size(), 9U);
  EXPECT_EQ(class_table(Ambient::symmetric(4)).size(), 5U);
  EXPECT_THROW(class_table(Ambient::symmetric(17)), PreconditionError);
}

TEST(ClassOf, SplitAndNonSplit) {
  const auto a8 = Ambient::alternating(8);
  const auto x = parse_perm("(1 2 3)(4 5 6 7 8)", 8);
  const auto y = conjugate(x, parse_perm("(1 2)", 8));
  EXPECT_EQ(class_of(a8, x).to_string(), "[3;5]+");
  EXPECT_EQ(class_of(a8, y).to_string(), "[3;5]-");

  const auto a7 = Ambient::alternating(7);
  EXPECT_EQ(class_of(a7, parse_perm("(1 2 3)(4 5 6)", 7)), class_of(a7, parse_perm("(2 7 4)(1 3 5)", 7)));
  EXPECT_THROW(class_of(a7, parse_perm("(1 2)", 7)), PreconditionError);
  EXPECT_THROW(class_of(a7, parse_perm("(1 2 3)", 8)), DegreeMismatch);
}

TEST(Centralizer, Examples) {
  EXPECT_EQ(centralizer_order_in_symmetric(CycleType::parse("[5]")), 5U);
  EXPECT_EQ(centralizer_order_in_symmetric(CycleType::parse("[1;3;3]")), 18U);
  EXPECT_EQ(centralizer_order_in_symmetric(CycleType::parse("[2;4;1]")), 8U);
  const auto s7 = oracle::symmetric(7);
  EXPECT_EQ(oracle::centralizer_order(oracle::from(parse_perm("(1 2 3)(4 5 6)", 7)), s7), 18U);
  EXPECT_EQ(oracle::centralizer_order(oracle::from(parse_perm("(1 2)(3 4 5 6)", 7)), s7), 8U);
}

TEST(ClassSize, Examples) {
  const auto a5 = Ambient::alternating(5);
  EXPECT_EQ(class_size(a5, {a5, CycleType::parse("[5]"), Split::plus}), 12U);
  EXPECT_EQ(class_size(a5, {a5, CycleType::parse("[1;2;2]"), Split::whole}), 15U);
  EXPECT_EQ(class_size(a5, {a5, CycleType::parse("[1;1;1;1;1]"), Split::whole}), 1U);
  EXPECT_THROW(class_size(a5, {Ambient::symmetric(5), CycleType::parse("[5]"), Split::whole}), PreconditionError);
  EXPECT_THROW(class_size(a5, {a5, CycleType::parse("[5]"), Split::whole}), PreconditionError);
  EXPECT_THROW(class_size(a5, {a5, CycleType::parse("[1;2;2]"), Split::plus}), PreconditionError);
}

TEST(ClassRepresentative, Canonical) {
  EXPECT_EQ(class_representative(CycleType::parse("[3;5]", 8)).to_string(), "(1 2 3)(4 5 6 7 8)");
}

// Full agreement with brute-force conjugacy closure for every ambient of degree <= 8.
TEST(ClassTable, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto a : {Ambient::symmetric(n), Ambient::alternating(n)}) {
      const auto& table = class_table(a);
      const auto els = ambient_elements(a);
      const auto classes = oracle::conjugacy_classes(els);
      ASSERT_EQ(table.size(), classes.size()) << a.label();
      std::uint64_t total = 0;
      std::set<std::size_t> seen;
      for (const auto& cls : classes) {
        const auto idx = table.index_of(oracle::to(*cls.begin()));
        EXPECT_TRUE(seen.insert(idx).second) << a.label();
        EXPECT_EQ(table[idx].size, cls.size()) << a.label() << " " << table[idx].id.to_string();
        for (const auto& x : cls) ASSERT_EQ(table.index_of(oracle::to(x)), idx);
        EXPECT_TRUE(cls.count(oracle::from(table[idx].representative)));
        total += table[idx].size;
      }
      EXPECT_EQ(total, a.order());
    }
}

TEST(Splitting, MatchesCentralizerCriterion) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto sn = oracle::symmetric(static_cast<int>(n));
    for (const auto& t : partitions_of(n)) {
      if (!t.is_even()) continue;
      const auto x = oracle::from(class_representative(t));
      bool inside = true;
      for (const auto& y : sn)
        if (oracle::mul(x, y) == oracle::mul(y, x) && !oracle::is_even(y)) inside = false;
      EXPECT_EQ(splits_in_alternating(t), inside) << t.to_string();
    }
  }
}

TEST(ClassTable, SizesSumToOrder) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto a : {Ambient::symmetric(n), Ambient::alternating(n)}) {
      std::uint64_t total = 0;
      for (const auto& e : class_table(a).entries()) total += e.size;
      EXPECT_EQ(total, a.order()) << a.label();
    }
}

TEST(ConjugacyProperties, EvenConjugationPreservesClass) {
  std::mt19937 rng(21);
  int checked = 0;
  while (checked < 400) {
    const int n = 2 + checked % 8;
    auto x = oracle::random_perm(rng, n);
    auto g = oracle::random_perm(rng, n);
    if (!oracle::is_even(x) || !oracle::is_even(g)) continue;
    const auto a = Ambient::alternating(static_cast<std::size_t>(n));
    EXPECT_EQ(class_of(a, oracle::to(x)), class_of(a, oracle::to(oracle::conj(x, g))));
    const auto s = Ambient::symmetric(static_cast<std::size_t>(n));
    EXPECT_EQ(class_of(s, oracle::to(x)), class_of(s, oracle::to(oracle::conj(x, g))));
    ++checked;
  }
}

TEST(ConjugacyProperties, OddConjugationSwapsSplitHalves) {
  std::mt19937 rng(22);
  int checked = 0;
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto a = Ambient::alternating(n);
    const auto& table = class_table(a);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& e = table[i];
      if (e.id.split != Split::plus) continue;
      EXPECT_EQ(e.size, table[i + 1].size);
      for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_perm(rng, static_cast<int>(n));
        if (oracle::is_even(g)) g = oracle::mul(g, oracle::from(parse_perm("(1 2)", n)));
        EXPECT_EQ(class_of(a, conjugate(e.representative, oracle::to(g))).split, Split::minus);
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 200);
}
