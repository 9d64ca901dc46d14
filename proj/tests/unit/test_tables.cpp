#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

TEST(Tables, ClosedFormSpotValues) {
  auto iv = [](Operator o, Connective c, const char* x, const char* y) {
    return closed_form_interval(o, c, q(x), q(y));
  };
  Interval s = iv(Operator::S, Connective::And, "2/3", "2/3");
  EXPECT_EQ(s.lower, q("1/3"));
  EXPECT_EQ(s.upper, q("4/5"));
  Interval so = iv(Operator::S, Connective::Or, "2/3", "2/3");
  EXPECT_EQ(so.lower, q("1/2"));
  EXPECT_EQ(so.upper, 1);
  Interval g = iv(Operator::GS, Connective::And, "0.4", "0.7");
  EXPECT_EQ(g.lower, q("0.1"));
  EXPECT_EQ(g.upper, q("0.4"));
  Interval go = iv(Operator::GS, Connective::Or, "0.4", "0.7");
  EXPECT_EQ(go.lower, q("0.7"));
  EXPECT_EQ(go.upper, 1);
  Interval b = iv(Operator::B, Connective::Or, "0.4", "0.7");
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 1);
  Interval k = iv(Operator::K, Connective::And, "1", "1");
  EXPECT_EQ(k.lower, 0);
  EXPECT_EQ(k.upper, 1);
  // x = y = 1 makes the quasi conjunction certain
  Interval s1 = iv(Operator::S, Connective::And, "1", "1");
  EXPECT_EQ(s1.lower, 1);
  EXPECT_EQ(s1.upper, 1);
}

TEST(Tables, Grid) {
  auto g = unit_grid(q("1/4"));
  EXPECT_EQ(g, (std::vector<Rational>{0, q("1/4"), q("1/2"), q("3/4"), 1}));
  EXPECT_EQ(unit_grid(q("1/10")).size(), 11u);
}

TEST(Tables, IntervalsTableOnTheCoarseGrid) {
  for (const auto& r : intervals_table(q("1/4"), false)) {
    EXPECT_EQ(r.points, 25u);
    EXPECT_EQ(r.exact, r.points) << to_string(r.op) << " " << to_string(r.conn);
    EXPECT_EQ(r.confirmed, r.points) << to_string(r.op) << " " << to_string(r.conn);
    EXPECT_TRUE(r.mismatches.empty());
  }
}

TEST(Tables, StarMatrix) {
  using P = Property;
  struct Row {
    P p;
    const char* stars;  // K L B S gs
  } rows[] = {
      {P::P1, "*---*"},  {P::P2a, "----*"}, {P::P2b, "----*"}, {P::P2c, "*-***"},
      {P::P3, "--*-*"},  {P::P4, "**--*"},  {P::P5, "----*"},  {P::P6, "----*"},
  };
  auto cells = star_table(q("1/4"));
  ASSERT_EQ(cells.size(), 40u);
  const Operator ops[] = {Operator::K, Operator::L, Operator::B, Operator::S, Operator::GS};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t o = 0; o < 5; ++o) {
      const StarCell& c = cells[i * 5 + o];
      EXPECT_EQ(c.prop, rows[i].p);
      EXPECT_EQ(c.op, ops[o]);
      EXPECT_EQ(c.star, rows[i].stars[o] == '*') << to_string(c.prop) << " " << to_string(c.op);
      EXPECT_EQ(c.counterexample.empty(), c.star) << to_string(c.prop) << " " << to_string(c.op);
    }
}

TEST(Tables, SobocinskiConjunctionExceedsTheMinimum) {
  StarCell c = star_cell(Property::P6, Operator::S, q("1/4"));
  EXPECT_FALSE(c.star);
  EXPECT_NE(c.counterexample.find("x=2/3 y=2/3"), std::string::npos) << c.counterexample;
  EXPECT_NE(c.counterexample.find("4/5 > min{x,y} = 2/3"), std::string::npos) << c.counterexample;
}

TEST(Tables, Names) {
  EXPECT_EQ(parse_operator("gs"), Operator::GS);
  EXPECT_EQ(parse_operator("S"), Operator::S);
  EXPECT_EQ(parse_connective("or"), Connective::Or);
  EXPECT_THROW(parse_operator("Z"), std::invalid_argument);
  EXPECT_THROW(parse_connective("xor"), std::invalid_argument);
}
