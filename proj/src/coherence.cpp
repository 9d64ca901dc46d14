#include "cohkit/coherence.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace cohkit {

Quantity indicator(const ConditionalEvent& ce, const Universe& u, std::string label) {
  Quantity q;
  q.label = label.empty() ? ce.str() : std::move(label);
  q.conditioning = u.extension(ce.antecedent);
  if (q.conditioning.none()) throw std::invalid_argument("empty conditioning event: " + ce.antecedent.str());
  q.value.assign(u.space(), Rational(0));
  for (std::size_t w : true_set(ce, u).members()) q.value[w] = 1;
  return q;
}

void Assessment::add(Quantity q, Rational p) {
  family.push_back(std::move(q));
  values.push_back(std::move(p));
}

Assessment make_assessment(const Universe& u, const std::vector<ConditionalEvent>& family,
                           const std::vector<Rational>& values) {
  if (family.size() != values.size()) throw std::invalid_argument("family and values differ in length");
  Assessment a;
  for (std::size_t i = 0; i < family.size(); ++i) a.add(indicator(family[i], u), values[i]);
  return a;
}

std::vector<std::vector<Rational>> PointTable::points() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.q);
  return out;
}

namespace {

using Outcome = std::vector<std::optional<Rational>>;

// non-void before void, larger values first: for indicators this is the
// true < false < void order
struct OutcomeLess {
  bool operator()(const Outcome& a, const Outcome& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].has_value() != b[i].has_value()) return a[i].has_value();
      if (a[i] && *a[i] != *b[i]) return *a[i] > *b[i];
    }
    return false;
  }
};

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// k-subsets of {0..n-1} in lexicographic order
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PointTable build_points(const Assessment& a, const Universe& u, const std::vector<std::size_t>& members) {
  PointTable t;
  t.members = members;
  t.c0 = WorldSet(u.space());
  for (std::size_t i : members) {
    if (i >= a.size()) throw std::out_of_range("member index");
    t.p.push_back(a.values[i]);
  }
  std::map<Outcome, WorldSet, OutcomeLess> groups;
  for (std::size_t w : u.worlds().members()) {
    Outcome key(members.size());
    bool all_void = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Quantity& q = a.family[members[k]];
      if (q.conditioning.test(w)) {
        key[k] = q.value[w];
        all_void = false;
      }
    }
    if (all_void) {
      t.c0.set(w);
      continue;
    }
    auto [it, fresh] = groups.try_emplace(std::move(key), u.space());
    it->second.set(w);
  }
  std::size_t h = 1;
  for (auto& [outcome, worlds] : groups) {
    PointRow row;
    row.index = h++;
    row.worlds = worlds;
    row.outcome = outcome;
    for (std::size_t k = 0; k < outcome.size(); ++k) row.q.push_back(outcome[k] ? *outcome[k] : t.p[k]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

PointTable build_points(const Assessment& a, const Universe& u) { return build_points(a, u, iota(a.size())); }

HullResult check_hull(const Assessment& a, const Universe& u) {
  PointTable t = build_points(a, u);
  if (t.rows.empty()) throw std::invalid_argument("family has no possible constituent besides C_0");
  return hull_membership(t.points(), t.p);
}

std::size_t max_family_size() {
  if (const char* env = std::getenv("COHKIT_MAX_FAMILY")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 12;
}

CoherenceVerdict check_coherence(const Assessment& a, const Universe& u) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("empty family");
  if (n > max_family_size())
    throw std::length_error("family size " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(max_family_size()) + " (COHKIT_MAX_FAMILY)");
  CoherenceVerdict v;
  for (std::size_t k = 1; k <= n && v.coherent; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      PointTable t = build_points(a, u, s);
      HullResult h = hull_membership(t.points(), t.p);
      ++v.hull_tests;
      if (!h.inside) {
        v.coherent = false;
        v.failing = s;
        v.stakes = std::move(h.stakes);
        v.margin = h.margin;
        return false;
      }
      if (k == n) v.weights = std::move(h.weights);
      return true;
    });
  }
  return v;
}

Rational random_gain(const Assessment& a, const std::vector<Rational>& s, const WorldSet& constituent) {
  if (s.size() != a.size()) throw std::invalid_argument("stakes length differs from family size");
  auto ws = constituent.members();
  if (ws.empty()) throw std::invalid_argument("empty constituent");
  std::size_t w = ws.front();
  Rational g = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.family[i].conditioning.test(w)) g += s[i] * (a.family[i].value[w] - a.values[i]);
  return g;
}

Rational random_gain(const PointTable& t, const std::vector<Rational>& s, const PointRow& row) {
  if (s.size() != t.members.size()) throw std::invalid_argument("stakes length differs from subfamily size");
  Rational g = 0;
  for (std::size_t k = 0; k < s.size(); ++k) g += s[k] * (row.q[k] - t.p[k]);
  return g;
}

Rational penalty_loss(const Assessment& a, const std::vector<Rational>& values, const WorldSet& constituent) {
  auto ws = constituent.members();
  if (ws.empty()) throw std::invalid_argument("empty constituent");
  std::size_t w = ws.front();
  Rational l = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.family[i].conditioning.test(w)) continue;
    Rational d = a.family[i].value[w] - values[i];
    l += d * d;
  }
  return l;
}

Rational penalty_loss(const Assessment& a, const WorldSet& constituent) {
  return penalty_loss(a, a.values, constituent);
}

std::optional<DutchBook> dutch_book(const Assessment& a, const Universe& u) {
  CoherenceVerdict v = check_coherence(a, u);
  if (v.coherent) return std::nullopt;
  DutchBook b;
  b.subfamily = *v.failing;
  b.stakes = v.stakes;
  PointTable t = build_points(a, u, b.subfamily);
  for (const auto& row : t.rows) {
    b.gains.push_back(random_gain(t, b.stakes, row));
    if (b.gains.size() == 1 || b.gains.back() < b.margin) b.margin = b.gains.back();
  }
  if (sgn(b.margin) <= 0) throw std::logic_error("internal error: Dutch book without a positive margin");
  return b;
}

bool weakly_dominates(const Assessment& a, const std::vector<Rational>& candidate, const Universe& u) {
  PointTable t = build_points(a, u);
  bool strict = false;
  for (const auto& row : t.rows) {
    Rational before = penalty_loss(a, a.values, row.worlds);
    Rational after = penalty_loss(a, candidate, row.worlds);
    if (after > before) return false;
    if (after < before) strict = true;
  }
  return strict;
}

std::optional<BrierDominator> brier_dominator(const Assessment& a, const Universe& u) {
  CoherenceVerdict v = check_coherence(a, u);
  if (v.coherent) return std::nullopt;
  BrierDominator d;
  d.subfamily = *v.failing;
  PointTable t = build_points(a, u, d.subfamily);
  std::vector<std::vector<double>> pts;
  for (const auto& row : t.rows) {
    std::vector<double> q;
    for (const auto& x : row.q) q.push_back(x.get_d());
    pts.push_back(std::move(q));
  }
  std::vector<double> p;
  for (const auto& x : t.p) p.push_back(x.get_d());
  std::vector<double> proj = project_onto_hull(pts, p);

  // rationalize at increasing precision until dominance verifies exactly
  const int bits[] = {20, 40, 0};
  for (int b : bits) {
    ++d.precision_rounds;
    std::vector<Rational> cand = a.values;
    for (std::size_t k = 0; k < d.subfamily.size(); ++k)
      cand[d.subfamily[k]] = b > 0 ? rationalize(proj[k], std::ldexp(1.0, -b)) : exact_from_double(proj[k]);
    if (weakly_dominates(a, cand, u)) {
      d.values = std::move(cand);
      PointTable full = build_points(a, u);
      for (const auto& row : full.rows) {
        d.assessed_loss.push_back(penalty_loss(a, a.values, row.worlds));
        d.dominating_loss.push_back(penalty_loss(a, d.values, row.worlds));
      }
      return d;
    }
  }
  throw std::logic_error("internal error: projected assessment failed to verify Brier dominance");
}

// Extension bounds --------------------------------------------------------------

namespace {

// One subfamily S of the base together with the target.
struct Piece {
  std::vector<Rational> p;                  // base values on S
  std::vector<std::vector<Rational>> q;     // base coordinates per constituent
  std::vector<std::optional<Rational>> v;   // target value per constituent
  bool unconstrained = false;               // the target can be void with certainty
};

LinearProgram base_program(const Piece& pc) {
  LinearProgram lp;
  const std::size_t m = pc.q.size();
  for (std::size_t h = 0; h < m; ++h) lp.add_variable();
  for (std::size_t i = 0; i < pc.p.size(); ++i) {
    std::vector<Rational> row(m);
    for (std::size_t h = 0; h < m; ++h) row[h] = pc.q[h][i];
    lp.add_row(std::move(row), Relation::Equal, pc.p[i]);
  }
  lp.add_row(std::vector<Rational>(m, Rational(1)), Relation::Equal, 1);
  return lp;
}

bool feasible(const LinearProgram& lp, std::size_t& solves) {
  ++solves;
  return solve(lp).status == LpStatus::Optimal;
}

// lower: exists lambda with sum_{target non-void} lambda_h (v_h - t) <= 0
bool side_holds(const Piece& pc, const Rational& t, bool lower, std::size_t& solves) {
  if (pc.unconstrained) return true;
  LinearProgram lp = base_program(pc);
  std::vector<Rational> row(pc.q.size());
  for (std::size_t h = 0; h < pc.q.size(); ++h)
    if (pc.v[h]) row[h] = *pc.v[h] - t;
  lp.add_row(std::move(row), lower ? Relation::LessEq : Relation::GreaterEq, 0);
  return feasible(lp, solves);
}

bool all_hold(const std::vector<Piece>& pieces, const Rational& t, bool lower, std::size_t& solves) {
  for (const auto& pc : pieces)
    if (!side_holds(pc, t, lower, solves)) return false;
  return true;
}

// min or max over the piece of sum_nv lambda v / sum_nv lambda, via the
// substitution mu = lambda / sum_nv lambda, r = 1 / sum_nv lambda
Rational ratio_extreme(const Piece& pc, bool minimize, std::size_t& solves) {
  LinearProgram lp;
  lp.sense = minimize ? Sense::Minimize : Sense::Maximize;
  const std::size_t m = pc.q.size();
  for (std::size_t h = 0; h < m; ++h) lp.add_variable(VarKind::NonNegative, pc.v[h] ? *pc.v[h] : Rational(0));
  std::size_t r = lp.add_variable();
  std::vector<Rational> nv(m + 1);
  for (std::size_t h = 0; h < m; ++h)
    if (pc.v[h]) nv[h] = 1;
  lp.add_row(std::move(nv), Relation::Equal, 1);
  for (std::size_t i = 0; i < pc.p.size(); ++i) {
    std::vector<Rational> row(m + 1);
    for (std::size_t h = 0; h < m; ++h) row[h] = pc.q[h][i];
    row[r] = -pc.p[i];
    lp.add_row(std::move(row), Relation::Equal, 0);
  }
  std::vector<Rational> sum(m + 1, Rational(1));
  sum[r] = -1;
  lp.add_row(std::move(sum), Relation::Equal, 0);
  ++solves;
  LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) throw std::logic_error("internal error: fractional program not solvable");
  return res.value;
}

}  // namespace

ExtensionBounds extension_bounds(const Assessment& a, const Quantity& target, const Universe& u,
                                 const ExtensionOptions& opt) {
  if (target.conditioning.none()) throw std::invalid_argument("empty conditioning event for target");
  if (a.size() + 1 > max_family_size())
    throw std::length_error("family size exceeds the cap (COHKIT_MAX_FAMILY)");
  if (a.size() > 0 && !check_coherence(a, u).coherent)
    throw std::domain_error("assessment is incoherent");
  std::size_t solves = 0;

  Assessment ext = a;
  ext.add(target, Rational(0));  // the target's value is never read here
  const std::size_t n = a.size();

  std::optional<Rational> vmin, vmax;
  for (std::size_t w : (target.conditioning & u.worlds()).members()) {
    const Rational& x = target.value[w];
    if (!vmin || x < *vmin) vmin = x;
    if (!vmax || x > *vmax) vmax = x;
  }
  if (!vmin) throw std::invalid_argument("target conditioning event is impossible");

  std::vector<Piece> pieces;
  for (std::size_t k = 0; k <= n; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      std::vector<std::size_t> members = s;
      members.push_back(n);
      PointTable t = build_points(ext, u, members);
      Piece pc;
      pc.p.assign(t.p.begin(), t.p.end() - 1);
      for (const auto& row : t.rows) {
        pc.q.emplace_back(row.q.begin(), row.q.end() - 1);
        pc.v.push_back(row.outcome.back());
      }
      LinearProgram lp = base_program(pc);
      std::vector<Rational> nv(pc.q.size());
      for (std::size_t h = 0; h < pc.q.size(); ++h)
        if (pc.v[h]) nv[h] = 1;
      lp.add_row(std::move(nv), Relation::Equal, 0);
      pc.unconstrained = feasible(lp, solves);
      pieces.push_back(std::move(pc));
      return true;
    });
  }

  ExtensionBounds eb;
  eb.lower = *vmin;
  eb.upper = *vmax;
  for (const auto& pc : pieces) {
    if (pc.unconstrained) continue;
    eb.lower = std::max(eb.lower, ratio_extreme(pc, true, solves));
    eb.upper = std::min(eb.upper, ratio_extreme(pc, false, solves));
  }
  if (eb.lower > eb.upper) throw std::logic_error("internal error: empty extension interval");

  if (opt.bisect) {
    eb.bisected = true;
    const Rational width = pow2(-opt.bits);
    // lower endpoint: the "<= 0" side is false below it and true from it on
    if (all_hold(pieces, *vmin, true, solves)) {
      eb.lower_below = eb.lower_above = *vmin;
    } else {
      Rational lo = *vmin, hi = *vmax;
      while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        (all_hold(pieces, mid, true, solves) ? hi : lo) = mid;
      }
      eb.lower_below = lo;
      eb.lower_above = hi;
    }
    if (all_hold(pieces, *vmax, false, solves)) {
      eb.upper_below = eb.upper_above = *vmax;
    } else {
      Rational lo = *vmin, hi = *vmax;
      while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        (all_hold(pieces, mid, false, solves) ? lo : hi) = mid;
      }
      eb.upper_below = lo;
      eb.upper_above = hi;
    }
    if (eb.lower < eb.lower_below || eb.lower > eb.lower_above || eb.upper < eb.upper_below ||
        eb.upper > eb.upper_above)
      throw std::logic_error("internal error: exact endpoints fall outside the bisection brackets");
  }
  eb.lp_solves = solves;

  if (opt.confirm) {
    Assessment at = a;
    at.add(target, eb.lower);
    eb.lower_confirmed = check_coherence(at, u).coherent;
    at.values.back() = eb.upper;
    eb.upper_confirmed = check_coherence(at, u).coherent;
  }
  return eb;
}

ExtensionBounds extension_bounds(const Assessment& a, const ConditionalEvent& target, const Universe& u,
                                 const ExtensionOptions& opt) {
  return extension_bounds(a, indicator(target, u), u, opt);
}

}  // namespace cohkit
