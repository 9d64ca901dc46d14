#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace testing_support;

TEST(Conditional, SplitRules) {
  const Universe& u = free4();
  ConditionalEvent a = ce("A | H", u);
  EXPECT_TRUE(a.consequent == Formula::atom("A"));
  EXPECT_TRUE(a.antecedent == Formula::atom("H"));
  // the last top-level bar separates
  ConditionalEvent b = ce("A | B | H", u);
  EXPECT_TRUE(equivalent(b.consequent, parse_formula("A | B"), u));
  EXPECT_TRUE(b.antecedent == Formula::atom("H"));
  ConditionalEvent c = ce("(A | B)", u);
  EXPECT_EQ(c.antecedent.op(), Formula::Op::Top);
  ConditionalEvent d = ce("A | B given H & K", u);
  EXPECT_TRUE(equivalent(d.consequent, parse_formula("A | B"), u));
  EXPECT_TRUE(equivalent(d.antecedent, parse_formula("H & K"), u));
  // printed form reparses to the same event
  for (const auto& e : {a, b, c, d}) {
    ConditionalEvent r = ce(e.str().c_str(), u);
    EXPECT_TRUE(equivalent(r.consequent, e.consequent, u) && equivalent(r.antecedent, e.antecedent, u)) << e.str();
  }
}

TEST(Conditional, ParseErrorColumnsPointIntoTheFullText) {
  const Universe& u = free4();
  try {
    ce("A | H & & K", u);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(Conditional, ThreeValuedEvaluation) {
  const Universe& u = free4();
  ConditionalEvent e = ce("A | H", u);
  for (std::size_t w : u.worlds().members()) {
    TriValue v = eval_conditional(e, u, w);
    bool a = u.holds(Formula::atom("A"), w), h = u.holds(Formula::atom("H"), w);
    TriValue want = !h ? TriValue::Void : (a ? TriValue::True : TriValue::False);
    EXPECT_EQ(v, want);
    EXPECT_EQ(eval_conditional(e, u.assignment(w)), want);
  }
  EXPECT_EQ((true_set(e, u) | false_set(e, u) | void_set(e, u)).count(), 16u);
}

// Constituents partition the possible worlds and each has a constant outcome.
TEST(Conditional, ConstituentsPartitionTheWorlds) {
  std::mt19937_64 rng(3);
  Universe u({"A", "B", "C", "D", "E"});
  for (int t = 0; t < 60; ++t) {
    std::vector<ConditionalEvent> fam;
    std::uniform_int_distribution<int> n(1, 4);
    for (int i = n(rng); i > 0; --i) fam.push_back(random_conditional(rng, u, 2));
    ConstituentTable tab = enumerate_constituents(fam, u);
    WorldSet seen(u.space());
    std::set<std::vector<TriValue>> choices;
    for (const auto& c : tab.rows) {
      EXPECT_TRUE(c.worlds.any());
      EXPECT_TRUE((seen & c.worlds).none());
      seen |= c.worlds;
      EXPECT_TRUE(choices.insert(c.choice).second);
      for (std::size_t w : c.worlds.members())
        for (std::size_t i = 0; i < fam.size(); ++i) EXPECT_EQ(eval_conditional(fam[i], u, w), c.choice[i]);
      bool all_void = std::all_of(c.choice.begin(), c.choice.end(), [](TriValue v) { return v == TriValue::Void; });
      EXPECT_EQ(c.is_c0, all_void);
      EXPECT_EQ(c.index == 0, all_void);
    }
    EXPECT_TRUE(seen == u.worlds());
  }
}

TEST(Conditional, InclusionUniverseConstituents) {
  const Universe& u = inclusion4();
  ConstituentTable tab = enumerate_constituents({ce("A | H", u), ce("B | K", u)}, u);
  ASSERT_EQ(tab.size(), 5u);
  using V = TriValue;
  // C1 = AHBK, C2 = ~H B K, C3 = ~A H ~K, C4 = ~A H ~B K, C0 = ~H ~K
  EXPECT_NE(tab.find({V::True, V::True}), nullptr);
  EXPECT_NE(tab.find({V::Void, V::True}), nullptr);
  EXPECT_NE(tab.find({V::False, V::Void}), nullptr);
  EXPECT_NE(tab.find({V::False, V::False}), nullptr);
  ASSERT_NE(tab.c0(), nullptr);
  EXPECT_TRUE(tab.c0()->worlds == u.extension(parse_formula("~H & ~K")));
}

TEST(Conditional, EmptyConditioningEventIsRejected) {
  Universe u({"A", "H"}, {{parse_formula("H"), false}});
  EXPECT_THROW(enumerate_constituents({ce("A | H", u)}, u), std::invalid_argument);
}
