#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

const Operator ops[] = {Operator::K, Operator::L, Operator::B, Operator::S, Operator::GS};
const Connective conns[] = {Connective::And, Connective::Or};

ExtensionOptions exact_only() {
  ExtensionOptions o;
  o.bisect = false;
  o.confirm = false;
  return o;
}

}  // namespace

TEST(Extension, ExactEndpointsMatchClosedForms) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 12; ++t) {
    Rational x = random_unit(rng, 12), y = random_unit(rng, 12);
    for (Operator op : ops)
      for (Connective c : conns) {
        ExtensionBounds b = operator_bounds(op, c, x, y, exact_only());
        Interval want = closed_form_interval(op, c, x, y);
        EXPECT_EQ(b.lower, want.lower) << to_string(op) << to_string(c) << " " << x << " " << y;
        EXPECT_EQ(b.upper, want.upper) << to_string(op) << to_string(c) << " " << x << " " << y;
      }
  }
}

TEST(Extension, BisectionBracketsTheEndpoints) {
  const Rational width = pow2(-40);
  for (auto [x, y] : {std::pair{q("2/3"), q("2/3")}, std::pair{q("0.4"), q("0.7")}, std::pair{q("1"), q("1")}}) {
    for (Operator op : ops)
      for (Connective c : conns) {
        ExtensionBounds b = operator_bounds(op, c, x, y);
        ASSERT_TRUE(b.bisected);
        EXPECT_LE(b.lower_below, b.lower);
        EXPECT_LE(b.lower, b.lower_above);
        EXPECT_LE(b.upper_below, b.upper);
        EXPECT_LE(b.upper, b.upper_above);
        EXPECT_LE(b.lower_above - b.lower_below, width);
        EXPECT_LE(b.upper_above - b.upper_below, width);
        EXPECT_TRUE(b.lower_confirmed && b.upper_confirmed);
      }
  }
}

TEST(Extension, SpotValues) {
  auto s = operator_bounds(Operator::S, Connective::And, q("2/3"), q("2/3"));
  EXPECT_EQ(s.lower, q("1/3"));
  EXPECT_EQ(s.upper, q("4/5"));
  auto so = operator_bounds(Operator::S, Connective::Or, q("2/3"), q("2/3"));
  EXPECT_EQ(so.lower, q("1/2"));
  EXPECT_EQ(so.upper, 1);
  auto k = operator_bounds(Operator::K, Connective::And, 1, 1);
  EXPECT_EQ(k.lower, 0);
  EXPECT_EQ(k.upper, 1);
  auto g = operator_bounds(Operator::GS, Connective::And, q("0.4"), q("0.7"));
  EXPECT_EQ(g.lower, q("0.1"));
  EXPECT_EQ(g.upper, q("0.4"));
  auto b = operator_bounds(Operator::B, Connective::And, q("0.3"), q("0.9"));
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 1);
}

// Unconditional events: P(AB) and P(A v B) from P(A), P(B).
TEST(Extension, UnconditionalConjunctionAndUnion) {
  Universe u({"A", "B"});
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      Rational a = frac(i, 5), b = frac(j, 5);
      Assessment base = make_assessment(u, {ce("A", u), ce("B", u)}, {a, b});
      auto conj = extension_bounds(base, ce("A & B", u), u);
      EXPECT_EQ(conj.lower, std::max<Rational>(a + b - 1, 0));
      EXPECT_EQ(conj.upper, std::min(a, b));
      auto disj = extension_bounds(base, ce("(A | B)", u), u);
      EXPECT_EQ(disj.lower, std::max(a, b));
      EXPECT_EQ(disj.upper, std::min<Rational>(a + b, 1));
    }
}

TEST(Extension, EndpointsAreSharp) {
  std::mt19937_64 rng(52);
  const Rational eps = q("1/1000");
  for (int t = 0; t < 6; ++t) {
    Rational x = random_unit(rng, 6), y = random_unit(rng, 6);
    for (Operator op : {Operator::K, Operator::L, Operator::B, Operator::S})
      for (Connective c : conns) {
        ExtensionBounds b = operator_bounds(op, c, x, y, exact_only());
        const Universe& u = operand_universe();
        Quantity target = operator_target(op, c, u, x, y);
        auto with = [&](const Rational& z) {
          Assessment a = make_assessment(u, {ce("A | H", u), ce("B | K", u)}, {x, y});
          a.add(target, z);
          return check_coherence(a, u).coherent;
        };
        EXPECT_TRUE(with(b.lower));
        EXPECT_TRUE(with(b.upper));
        EXPECT_TRUE(with((b.lower + b.upper) / 2));
        if (b.lower >= eps) EXPECT_FALSE(with(b.lower - eps));
        if (b.upper + eps <= 1) EXPECT_FALSE(with(b.upper + eps));
      }
  }
}

TEST(Extension, IntervalContainsTheValueOfAnyGeneratingDistribution) {
  std::mt19937_64 rng(53);
  Universe u({"A", "B", "C"});
  for (int t = 0; t < 30; ++t) {
    auto mu = random_distribution(rng, u, 3);
    std::vector<ConditionalEvent> fam;
    std::vector<Rational> p;
    while (fam.size() < 2) {
      ConditionalEvent e = random_conditional(rng, u, 1);
      if (auto pr = conditional_probability(e, u, mu)) {
        fam.push_back(e);
        p.push_back(*pr);
      }
    }
    ConditionalEvent target = random_conditional(rng, u, 1);
    auto pt = conditional_probability(target, u, mu);
    if (!pt) continue;
    auto b = extension_bounds(make_assessment(u, fam, p), target, u, exact_only());
    EXPECT_LE(b.lower, *pt);
    EXPECT_LE(*pt, b.upper);
  }
}

TEST(Extension, IncoherentBaseIsRejected) {
  Universe u({"A", "B"});
  Assessment a = make_assessment(u, {ce("A", u), ce("A & B", u)}, {q("1/4"), q("1/2")});
  EXPECT_THROW(extension_bounds(a, ce("B", u), u), std::domain_error);
}
