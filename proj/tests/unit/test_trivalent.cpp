#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace testing_support;

namespace {

using V = TriValue;

int rank(V v) { return v == V::False ? 0 : v == V::Void ? 1 : 2; }

// Truth tables written out per logic, independent of the set formulas.
V table_and(TriKind k, V a, V b) {
  switch (k) {
    case TriKind::K:  // strong Kleene: min with F < V < T
      return rank(a) < rank(b) ? a : b;
    case TriKind::L:  // Lukasiewicz t-norm on {0, 1/2, 1}
    {
      int s = rank(a) + rank(b) - 2;
      return s <= 0 ? V::False : s == 1 ? V::Void : V::True;
    }
    case TriKind::B:  // weak Kleene: void is infectious
      if (a == V::Void || b == V::Void) return V::Void;
      return a == V::True && b == V::True ? V::True : V::False;
    case TriKind::S:  // void is neutral
      if (a == V::Void) return b;
      if (b == V::Void) return a;
      return a == V::True && b == V::True ? V::True : V::False;
  }
  return V::Void;
}

V table_or(TriKind k, V a, V b) {
  switch (k) {
    case TriKind::K:
      return rank(a) > rank(b) ? a : b;
    case TriKind::L: {
      int s = rank(a) + rank(b);
      return s >= 2 ? V::True : s == 1 ? V::Void : V::False;
    }
    case TriKind::B:
      if (a == V::Void || b == V::Void) return V::Void;
      return a == V::True || b == V::True ? V::True : V::False;
    case TriKind::S:
      if (a == V::Void) return b;
      if (b == V::Void) return a;
      return a == V::True || b == V::True ? V::True : V::False;
  }
  return V::Void;
}

const TriKind kinds[] = {TriKind::K, TriKind::L, TriKind::B, TriKind::S};

const Universe& six() {
  static const Universe u({"A", "B", "C", "D", "E", "F"});
  return u;
}

}  // namespace

TEST(Trivalent, OperatorsMatchTruthTables) {
  std::mt19937_64 rng(21);
  const Universe& u = six();
  for (int t = 0; t < 80; ++t) {
    ConditionalEvent a = random_conditional(rng, u, 2), b = random_conditional(rng, u, 2);
    for (TriKind k : kinds) {
      ConditionalEvent c = trivalent_and(k, a, b), d = trivalent_or(k, a, b);
      for (std::size_t w = 0; w < u.space(); ++w) {
        V va = eval_conditional(a, u, w), vb = eval_conditional(b, u, w);
        ASSERT_EQ(eval_conditional(c, u, w), table_and(k, va, vb)) << to_string(k) << " " << u.describe(w);
        ASSERT_EQ(eval_conditional(d, u, w), table_or(k, va, vb)) << to_string(k) << " " << u.describe(w);
      }
    }
  }
}

TEST(Trivalent, DeMorganCommutativityAssociativity) {
  std::mt19937_64 rng(22);
  const Universe& u = six();
  for (int t = 0; t < 60; ++t) {
    ConditionalEvent a = random_conditional(rng, u, 2), b = random_conditional(rng, u, 2),
                     c = random_conditional(rng, u, 2);
    for (TriKind k : kinds) {
      EXPECT_TRUE(ce_equal(trivalent_or(k, a, b), negate(trivalent_and(k, negate(a), negate(b))), u));
      EXPECT_TRUE(ce_equal(trivalent_and(k, a, b), trivalent_and(k, b, a), u));
      EXPECT_TRUE(ce_equal(trivalent_or(k, a, b), trivalent_or(k, b, a), u));
      EXPECT_TRUE(ce_equal(trivalent_and(k, trivalent_and(k, a, b), c), trivalent_and(k, a, trivalent_and(k, b, c)), u));
      EXPECT_TRUE(ce_equal(trivalent_or(k, trivalent_or(k, a, b), c), trivalent_or(k, a, trivalent_or(k, b, c)), u));
    }
  }
}

TEST(Trivalent, ClosedFormsOnTheOperands) {
  const Universe& u = free4();
  ConditionalEvent a = ce("A | H", u), b = ce("B | K", u);
  EXPECT_TRUE(ce_equal(trivalent_and(TriKind::B, a, b, u), ce("A & B | H & K", u), u));
  EXPECT_TRUE(ce_equal(trivalent_and(TriKind::S, a, b, u), ce("(A | ~H) & (B | ~K) given H | K", u), u));
  EXPECT_TRUE(ce_equal(trivalent_and(TriKind::L, a, b, u),
                       ce("A & H & B & K given A & H & B & K | ~A & H | ~B & K | ~H & ~K", u), u));
  EXPECT_TRUE(ce_equal(trivalent_and(TriKind::K, a, b, u),
                       ce("A & H & B & K given A & H & B & K | ~A & H | ~B & K", u), u));
  EXPECT_TRUE(ce_equal(trivalent_or(TriKind::L, a, b, u),
                       ce("~(~A & H & ~B & K) given ~A & H & ~B & K | A & H | B & K | ~H & ~K", u), u));
}

TEST(Trivalent, DegenerateConjunctionIsReported) {
  Universe u({"A", "H", "B", "K"}, {{parse_formula("H & K"), false}});
  EXPECT_THROW(trivalent_and(TriKind::B, ce("A | H", u), ce("B | K", u), u), std::domain_error);
}

TEST(Trivalent, InclusionMatchesItsDefinition) {
  std::mt19937_64 rng(23);
  Universe u({"A", "B", "C", "D"});
  int included = 0;
  for (int t = 0; t < 400; ++t) {
    ConditionalEvent a = random_conditional(rng, u, 1), b = random_conditional(rng, u, 1);
    bool want = true;
    for (std::size_t w = 0; w < u.space(); ++w) {
      V va = eval_conditional(a, u, w), vb = eval_conditional(b, u, w);
      if (va == V::True && vb != V::True) want = false;
      if (vb == V::False && va != V::False) want = false;
    }
    included += want;
    EXPECT_EQ(gn_inclusion(a, b, u), want) << a.str() << " " << b.str();
  }
  EXPECT_GT(included, 0);
  EXPECT_TRUE(gn_inclusion(ce("A | H", inclusion4()), ce("B | K", inclusion4()), inclusion4()));
}

namespace {

bool has_literals(const std::string& world, std::initializer_list<const char*> lits) {
  std::vector<std::string> tokens;
  std::istringstream in(world);
  for (std::string t; in >> t;) tokens.push_back(t);
  for (const char* l : lits)
    if (std::find(tokens.begin(), tokens.end(), l) == tokens.end()) return false;
  return true;
}

}  // namespace

TEST(Trivalent, PropertyMatrix) {
  using P = LogicalProperty;
  struct Row {
    P p;
    bool k, l, b, s;
  } rows[] = {
      {P::P1, true, false, false, false},  {P::P2a, false, false, false, false},
      {P::P2b, false, false, false, false}, {P::P2c, true, false, true, true},
      {P::P3, false, false, true, false},
  };
  for (const auto& r : rows) {
    const bool want[] = {r.k, r.l, r.b, r.s};
    for (int i = 0; i < 4; ++i) {
      PropertyResult res = check_logical_property(r.p, kinds[i]);
      EXPECT_EQ(res.holds, want[i]) << to_string(r.p) << " " << to_string(kinds[i]) << " " << res.detail;
      if (!res.holds) EXPECT_FALSE(res.witness_text.empty() && res.forward_witness.empty() && res.reverse_witness.empty());
    }
  }
}

TEST(Trivalent, P1WitnessesAreTheExpectedCases) {
  PropertyResult l = check_logical_property(LogicalProperty::P1, TriKind::L);
  EXPECT_FALSE(*l.forward);
  EXPECT_TRUE(has_literals(l.forward_witness, {"~H", "~K"})) << l.forward_witness;
  PropertyResult b = check_logical_property(LogicalProperty::P1, TriKind::B);
  EXPECT_FALSE(*b.forward);
  EXPECT_TRUE(has_literals(b.forward_witness, {"~A", "H", "~K"})) << b.forward_witness;
  PropertyResult s = check_logical_property(LogicalProperty::P1, TriKind::S);
  EXPECT_FALSE(*s.forward);
  EXPECT_TRUE(has_literals(s.forward_witness, {"~H", "B", "K"})) << s.forward_witness;
  PropertyResult k = check_logical_property(LogicalProperty::P1, TriKind::K);
  EXPECT_TRUE(*k.forward);
  EXPECT_TRUE(*k.reverse);
}

TEST(Trivalent, P2aWitnessForKleene) {
  PropertyResult r = check_logical_property(LogicalProperty::P2a, TriKind::K);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(has_literals(r.witness_text, {"A", "H", "~K"})) << r.witness_text;
}
