#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

LinExpr sym(const char* s) { return LinExpr::symbol(s); }

}  // namespace

TEST(LinExpr, Arithmetic) {
  LinExpr e = sym("x") * q("2") + sym("y") - sym("x") + 3;
  EXPECT_EQ(e, sym("x") + sym("y") + 3);
  EXPECT_EQ(e - sym("x") - sym("y"), LinExpr(3));
  EXPECT_TRUE((e - e).is_constant());
  EXPECT_EQ(e.evaluate({{"x", q("1/2")}, {"y", q("1/3")}}), q("23/6"));
  EXPECT_EQ(e.substitute({{"y", 1 - sym("x")}}), LinExpr(4));
  EXPECT_THROW(e.evaluate({{"x", 1}}), std::invalid_argument);
}

// Values of the gs conjunction and disjunction by case.
TEST(Crq, ConjunctionAndDisjunctionValues) {
  const Universe& u = free4();
  ConditionalEvent a = ce("A | H", u), b = ce("B | K", u);
  LinExpr x = sym("x"), y = sym("y");
  Crq c = gs_and(a, b, u, x, y), d = gs_or(a, b, u, x, y);
  auto at = [&](const char* f) { return u.extension(parse_formula(f, &u)); };
  for (std::size_t w : u.worlds().members()) {
    auto is = [&](const char* f) { return at(f).test(w); };
    LinExpr cz = is("A & H & B & K")        ? LinExpr(1)
                 : is("~A & H | ~B & K")    ? LinExpr(0)
                 : is("~H & B & K")         ? x
                 : is("A & H & ~K")         ? y
                                            : sym("z");
    EXPECT_EQ(c.value[w], cz) << u.describe(w);
    LinExpr dw = is("A & H | B & K")        ? LinExpr(1)
                 : is("~A & H & ~B & K")    ? LinExpr(0)
                 : is("~H & ~B & K")        ? x
                 : is("~A & H & ~K")        ? y
                                            : sym("w");
    EXPECT_EQ(d.value[w], dw) << u.describe(w);
  }
}

TEST(Crq, IncoherentOperandsAreRejected) {
  const Universe& u = inclusion4();
  EXPECT_THROW(gs_and(ce("A | H", u), ce("B | K", u), u, q("3/4"), q("1/2")), std::domain_error);
}

TEST(Crq, DeMorganAndSumRuleOnRandomPoints) {
  std::mt19937_64 rng(61);
  const Universe& u = free4();
  for (int t = 0; t < 40; ++t) {
    Rational x = random_unit(rng, 10), y = random_unit(rng, 10);
    auto [lo, hi] = frechet_bounds({x, y});
    Rational z = lo + (hi - lo) * random_unit(rng, 4);
    EXPECT_TRUE(demorgan_check(ce("A | H", u), ce("B | K", u), u, x, y, z));
    EXPECT_TRUE(sum_rule_check(x, y, z, x + y - z));
    if (x + y - z + q("1/10") <= 1) EXPECT_FALSE(sum_rule_check(x, y, z, x + y - z + q("1/10")));
  }
}

TEST(Crq, PrevisionUnderIndependence) {
  std::mt19937_64 rng(62);
  const Universe& u = free4();
  for (int t = 0; t < 30; ++t) {
    Rational pa = random_unit(rng, 8), ph = random_unit(rng, 8), pb = random_unit(rng, 8), pk = random_unit(rng, 8);
    if (ph == 0 || pk == 0) continue;
    auto mu = independent_distribution(u, {{"A", pa}, {"H", ph}, {"B", pb}, {"K", pk}});
    // with everything independent the prevision of the conjunction is
    // P(A)P(B), whatever the conditioning events
    Crq c = gs_and(ce("A | H", u), ce("B | K", u), u, pa, pb);
    EXPECT_EQ(prevision_from_distribution(c, u, mu), pa * pb);
    Crq d = gs_or(ce("A | H", u), ce("B | K", u), u, pa, pb);
    EXPECT_EQ(prevision_from_distribution(d, u, mu), pa + pb - pa * pb);
  }
}

TEST(Crq, PrevisionFromDistributionNeedsMass) {
  Universe u({"A", "H"});
  std::vector<Rational> mu(4);
  mu[0] = 1;  // all mass on ~A ~H
  Crq c = crq_indicator(ce("A | H", u), u, sym("p"));
  EXPECT_THROW(prevision_from_distribution(c, u, mu), std::domain_error);
}

TEST(Crq, FrechetBounds) {
  auto [l3, u3] = frechet_bounds({q("0.9"), q("0.9"), q("0.9")});
  EXPECT_EQ(l3, q("0.7"));
  EXPECT_EQ(u3, q("0.9"));
  auto [dl, du] = frechet_disjunction_bounds({q("0.9"), q("0.9"), q("0.9")});
  EXPECT_EQ(dl, q("0.9"));
  EXPECT_EQ(du, 1);
  auto [l, h] = frechet_bounds({q("0.2"), q("0.3")});
  EXPECT_EQ(l, 0);
  EXPECT_EQ(h, q("0.2"));
}

// Conjunction previsions under random distributions stay in the Frechet box.
TEST(Crq, JointPrevisionsRespectFrechet) {
  std::mt19937_64 rng(63);
  Universe u({"A", "B", "C", "H", "K"});
  for (int t = 0; t < 20; ++t) {
    auto mu = random_distribution(rng, u, 4);
    std::vector<ConditionalEvent> fam{ce("A | H", u), ce("B | K", u), ce("C given H | K", u)};
    bool ok = true;
    for (const auto& e : fam) ok = ok && conditional_probability(e, u, mu).has_value();
    if (!ok) continue;
    auto conj = joint_previsions_from_distribution(fam, u, mu, false);
    auto disj = joint_previsions_from_distribution(fam, u, mu, true);
    std::vector<Rational> xs{conj.at({0}), conj.at({1}), conj.at({2})};
    auto [lo, hi] = frechet_bounds(xs);
    EXPECT_LE(lo, conj.at({0, 1, 2}));
    EXPECT_LE(conj.at({0, 1, 2}), hi);
    auto [dlo, dhi] = frechet_disjunction_bounds(xs);
    EXPECT_LE(dlo, disj.at({0, 1, 2}));
    EXPECT_LE(disj.at({0, 1, 2}), dhi);
    // inclusion-exclusion links the two families of previsions
    EXPECT_EQ(disj.at({0, 1, 2}), inclusion_exclusion(3, conj));
  }
}

TEST(Crq, ChainCollapsesToTheConjunction) {
  Universe u({"E1", "E2", "E3"});
  auto fam = chain_family({"E1", "E2", "E3"});
  ASSERT_EQ(fam.size(), 3u);
  std::mt19937_64 rng(64);
  for (int t = 0; t < 10; ++t) {
    auto mu = random_distribution(rng, u, 4);
    std::vector<Rational> cps;
    bool ok = true;
    for (const auto& e : fam) {
      auto p = conditional_probability(e, u, mu);
      ok = ok && p.has_value();
      if (p) cps.push_back(*p);
    }
    if (!ok) continue;
    auto conj = joint_previsions_from_distribution(fam, u, mu, false);
    EXPECT_EQ(conj.at({0, 1, 2}), chain_rule_prevision(cps));
    EXPECT_EQ(chain_rule_prevision(cps), *conditional_probability(ce("E1 & E2 & E3", u), u, mu));
  }
}

TEST(Crq, PConsistencyAndEntailment) {
  const Universe& u = free4();
  EXPECT_TRUE(p_consistent({ce("A | H", u), ce("B | K", u)}, u));
  EXPECT_FALSE(p_consistent({ce("A | H", u), ce("~A | H", u)}, u));
  EXPECT_THROW(p_entails({ce("A | H", u), ce("~A | H", u)}, ce("B | K", u), u), std::domain_error);
  EXPECT_TRUE(p_entails({ce("A | H", u)}, ce("A | H", u), u));
  EXPECT_FALSE(p_entails({ce("A | H", u), ce("B | K", u)}, ce("A & B given H | K", u), u));
  EXPECT_TRUE(p_entails({ce("A | H", u), ce("B | H", u)}, ce("A & B | H", u), u));
  Universe ehk({"E", "H", "K"});
  std::vector<std::size_t> sub;
  EXPECT_TRUE(p_entails({ce("E | H & K", ehk), ce("H | K", ehk)}, ce("E & H | K", ehk), ehk));
  EXPECT_TRUE(p_entails_by_absorption({ce("E | H & K", ehk), ce("H | K", ehk)}, ce("E & H | K", ehk), ehk, &sub));
  EXPECT_EQ(sub, (std::vector<std::size_t>{0, 1}));
}

// The interval and absorption characterizations agree.
TEST(Crq, EntailmentCharacterizationsAgree) {
  std::mt19937_64 rng(65);
  const Universe& u = free4();
  int yes = 0, no = 0;
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<int> n(1, 2);
    std::vector<ConditionalEvent> fam;
    for (int i = n(rng); i > 0; --i) fam.push_back(random_conditional(rng, u, 1));
    if (!p_consistent(fam, u)) continue;
    ConditionalEvent target = t % 3 == 0 ? trivalent_and(TriKind::S, fam[0], fam.back())
                                         : random_conditional(rng, u, 1);
    if (!u.satisfiable(target.antecedent)) continue;
    bool a = p_entails(fam, target, u), b = p_entails_by_absorption(fam, target, u);
    EXPECT_EQ(a, b) << target.str();
    (a ? yes : no)++;
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 10);
}

TEST(Crq, CompoundIdentitiesOnTheGrid) {
  using I = CompoundIdentity;
  for (I id : {I::P1gs, I::P2a, I::P2b, I::P2c, I::P3, I::ProductRule})
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        Rational x = frac(i, 4), y = frac(j, 4);
        if (id == I::P1gs && x > y) continue;
        IdentityResult r = compound_identity_check(id, x, y);
        EXPECT_TRUE(r.holds) << to_string(id) << " " << x << " " << y << " " << r.detail;
      }
}

TEST(Crq, SameValuesReportsAWitness) {
  const Universe& u = free4();
  Crq c = gs_and(ce("A | H", u), ce("B | K", u), u, sym("x"), sym("y"));
  Crq d = gs_and(ce("B | K", u), ce("A | H", u), u, sym("y"), sym("x"));
  EXPECT_TRUE(same_values(c.value, d.value, u).holds);
  Crq e = gs_or(ce("A | H", u), ce("B | K", u), u, sym("x"), sym("y"));
  IdentityResult r = same_values(c.value, e.value, u);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.witness.has_value());
}
