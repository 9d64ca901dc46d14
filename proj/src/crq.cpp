#include "cohkit/crq.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohkit/trivalent.hpp"

namespace cohkit {

// LinExpr -------------------------------------------------------------------

LinExpr LinExpr::symbol(const std::string& name) {
  LinExpr e;
  e.terms_[name] = 1;
  return e;
}

void LinExpr::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0) it = terms_.erase(it);
    else ++it;
  }
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant_ += o.constant_;
  for (const auto& [k, v] : o.terms_) terms_[k] += v;
  prune();
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [k, v] : o.terms_) terms_[k] -= v;
  prune();
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& k) {
  constant_ *= k;
  for (auto& [s, v] : terms_) v *= k;
  prune();
  return *this;
}

LinExpr LinExpr::substitute(const std::map<std::string, LinExpr>& s) const {
  LinExpr out(constant_);
  for (const auto& [k, v] : terms_) {
    auto it = s.find(k);
    if (it == s.end()) {
      out.terms_[k] += v;
    } else {
      out += it->second * v;
    }
  }
  out.prune();
  return out;
}

Rational LinExpr::evaluate(const std::map<std::string, Rational>& env) const {
  Rational r = constant_;
  for (const auto& [k, v] : terms_) {
    auto it = env.find(k);
    if (it == env.end()) throw std::invalid_argument("unbound symbol '" + k + "'");
    r += v * it->second;
  }
  return r;
}

std::string LinExpr::str() const {
  std::string out;
  for (const auto& [k, v] : terms_) {
    std::string mag = abs(v) == 1 ? k : to_string(Rational(abs(v))) + "*" + k;
    if (out.empty()) out = sgn(v) < 0 ? "-" + mag : mag;
    else out += (sgn(v) < 0 ? " - " : " + ") + mag;
  }
  if (out.empty()) return to_string(constant_);
  if (sgn(constant_) > 0) out += " + " + to_string(constant_);
  if (sgn(constant_) < 0) out += " - " + to_string(Rational(-constant_));
  return out;
}

// Construction --------------------------------------------------------------

std::string subset_name(const std::string& prefix, const std::vector<std::size_t>& s) {
  std::string out = prefix + "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k] + 1);
  }
  return out + "}";
}

JointPrevisions joint_symbols(std::size_t n, const std::string& prefix) {
  JointPrevisions out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.push_back(i);
    out[s] = LinExpr::symbol(subset_name(prefix, s));
  }
  return out;
}

Crq crq_indicator(const ConditionalEvent& ce, const Universe& u, const LinExpr& prevision, std::string symbol) {
  Crq c;
  c.label = ce.str();
  c.prevision = std::move(symbol);
  c.conditioning = u.extension(ce.antecedent);
  if (c.conditioning.none()) throw std::invalid_argument("empty conditioning event: " + ce.antecedent.str());
  WorldSet t = true_set(ce, u);
  c.value.assign(u.space(), LinExpr());
  for (std::size_t w = 0; w < u.space(); ++w) {
    if (c.conditioning.test(w)) c.value[w] = t.test(w) ? 1 : 0;
    else c.value[w] = prevision;
  }
  return c;
}

namespace {

// Conjunction or disjunction over the members of `sub` (indices into family).
// `xs` supplies the previsions of proper nonempty parts of `sub`.
Crq gs_sub(const std::vector<ConditionalEvent>& family, const Universe& u, const JointPrevisions& xs,
           const std::vector<std::size_t>& sub, const LinExpr& own, std::string own_name, bool disjunction) {
  if (sub.empty()) throw std::invalid_argument("empty family");
  std::vector<WorldSet> ts, fs;
  Crq c;
  c.prevision = std::move(own_name);
  c.conditioning = WorldSet(u.space());
  for (std::size_t i : sub) {
    const auto& ce = family.at(i);
    WorldSet h = u.extension(ce.antecedent);
    if (h.none()) throw std::invalid_argument("empty conditioning event: " + ce.antecedent.str());
    c.conditioning |= h;
    ts.push_back(true_set(ce, u));
    fs.push_back(false_set(ce, u));
    if (!c.label.empty()) c.label += disjunction ? " or " : " and ";
    c.label += "[" + ce.str() + "]";
  }
  c.value.assign(u.space(), LinExpr());
  for (std::size_t w = 0; w < u.space(); ++w) {
    bool any_true = false, any_false = false;
    std::vector<std::size_t> vd;
    for (std::size_t k = 0; k < sub.size(); ++k) {
      if (ts[k].test(w)) any_true = true;
      else if (fs[k].test(w)) any_false = true;
      else vd.push_back(sub[k]);
    }
    if (vd.size() == sub.size()) {
      c.value[w] = own;
    } else if (!disjunction && any_false) {
      c.value[w] = 0;
    } else if (disjunction && any_true) {
      c.value[w] = 1;
    } else if (vd.empty()) {
      c.value[w] = disjunction ? 0 : 1;
    } else {
      auto it = xs.find(vd);
      if (it == xs.end()) throw std::invalid_argument("missing joint prevision " + subset_name("", vd));
      c.value[w] = it->second;
    }
  }
  return c;
}

bool all_constant(const JointPrevisions& xs) {
  for (const auto& [s, e] : xs)
    if (!e.is_constant()) return false;
  return true;
}

// Coherence of the numeric system {x_S : S proper, nonempty}.
void require_coherent(const std::vector<ConditionalEvent>& family, const Universe& u, const JointPrevisions& xs,
                      bool disjunction) {
  if (!all_constant(xs)) return;
  Assessment a;
  for (const auto& [s, e] : xs) {
    if (s.size() == family.size()) continue;
    if (s.size() == 1) {
      a.add(indicator(family[s[0]], u), e.constant());
    } else {
      Crq part = gs_sub(family, u, xs, s, e, "", disjunction);
      a.add(instantiate(part, u, {}), e.constant());
    }
  }
  if (a.size() > 0 && !check_coherence(a, u).coherent) throw std::domain_error("incoherent prevision system");
}

}  // namespace

Crq gs_and_n(const std::vector<ConditionalEvent>& family, const Universe& u, const JointPrevisions& xs,
             std::string own) {
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  require_coherent(family, u, xs, false);
  return gs_sub(family, u, xs, all, LinExpr::symbol(own), own, false);
}

Crq gs_or_n(const std::vector<ConditionalEvent>& family, const Universe& u, const JointPrevisions& ys,
            std::string own) {
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  require_coherent(family, u, ys, true);
  return gs_sub(family, u, ys, all, LinExpr::symbol(own), own, true);
}

Crq gs_and(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u, const LinExpr& x,
           const LinExpr& y, std::string own) {
  return gs_and_n({a, b}, u, {{{0}, x}, {{1}, y}}, std::move(own));
}

Crq gs_or(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u, const LinExpr& x,
          const LinExpr& y, std::string own) {
  return gs_or_n({a, b}, u, {{{0}, x}, {{1}, y}}, std::move(own));
}

std::vector<LinExpr> add_values(const std::vector<LinExpr>& a, const std::vector<LinExpr>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("value maps over different universes");
  std::vector<LinExpr> out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] + b[w];
  return out;
}

std::vector<LinExpr> affine_values(const Rational& c, const Rational& k, const std::vector<LinExpr>& a) {
  std::vector<LinExpr> out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = LinExpr(c) + a[w] * k;
  return out;
}

Quantity instantiate(const Crq& c, const Universe& u, const Bindings& env) {
  Quantity q;
  q.label = c.label;
  q.conditioning = c.conditioning;
  q.value.assign(u.space(), Rational(0));
  for (std::size_t w : (c.conditioning & u.worlds()).members()) q.value[w] = c.value[w].evaluate(env);
  return q;
}

Rational prevision_from_distribution(const Crq& c, const Universe& u, const std::vector<Rational>& mu,
                                     const Bindings& env) {
  if (mu.size() != u.space()) throw std::invalid_argument("distribution size differs from the world space");
  Rational mass = 0, acc = 0;
  for (std::size_t w : (c.conditioning & u.worlds()).members()) {
    if (sgn(mu[w]) == 0) continue;
    mass += mu[w];
    acc += mu[w] * c.value[w].evaluate(env);
  }
  if (sgn(mass) == 0) throw std::domain_error("zero mass on the conditioning event");
  return acc / mass;
}

std::vector<Rational> independent_distribution(const Universe& u, const std::map<std::string, Rational>& p) {
  std::vector<Rational> mu(u.space(), Rational(0));
  Rational total = 0;
  for (std::size_t w : u.worlds().members()) {
    Rational m = 1;
    for (std::size_t i = 0; i < u.atoms().size(); ++i) {
      auto it = p.find(u.atoms()[i]);
      if (it == p.end()) throw std::invalid_argument("no probability for atom '" + u.atoms()[i] + "'");
      m *= ((w >> i) & 1u) ? it->second : Rational(1 - it->second);
    }
    mu[w] = m;
    total += m;
  }
  if (sgn(total) == 0) throw std::domain_error("distribution has no mass on possible worlds");
  for (auto& m : mu) m /= total;
  return mu;
}

IdentityResult same_values(const std::vector<LinExpr>& lhs, const std::vector<LinExpr>& rhs, const Universe& u,
                           const Resolution& r) {
  IdentityResult res;
  for (std::size_t w : u.worlds().members()) {
    LinExpr a = lhs[w].substitute(r), b = rhs[w].substitute(r);
    if (!(a == b)) {
      res.holds = false;
      res.witness = w;
      res.detail = u.describe(w) + ": " + a.str() + " vs " + b.str();
      return res;
    }
  }
  return res;
}

bool demorgan_check(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u, const Rational& x,
                    const Rational& y, const Rational& z) {
  Crq disj = gs_or(a, b, u, x, y, "w");
  Crq neg = gs_and(negate(a), negate(b), u, Rational(1 - x), Rational(1 - y), "zn");
  Resolution r{{"zn", LinExpr(Rational(1 - x - y + z))}, {"w", LinExpr(Rational(x + y - z))}};
  return same_values(disj.value, affine_values(1, -1, neg.value), u, r).holds;
}

namespace {

const Universe& free4() {
  static const Universe u({"A", "H", "B", "K"});
  return u;
}

ConditionalEvent ce(const char* e, const char* h) { return {Formula::atom(e), Formula::atom(h)}; }

}  // namespace

bool sum_rule_check(const Rational& x, const Rational& y, const Rational& z, const Rational& w) {
  const Universe& u = free4();
  Assessment a;
  a.add(indicator(ce("A", "H"), u), x);
  a.add(indicator(ce("B", "K"), u), y);
  a.add(instantiate(gs_and(ce("A", "H"), ce("B", "K"), u, x, y), u, {}), z);
  if (!check_coherence(a, u).coherent) throw std::domain_error("incoherent (x, y, z)");
  return w == x + y - z;
}

std::pair<Rational, Rational> frechet_bounds(const std::vector<Rational>& xs) {
  if (xs.empty()) throw std::invalid_argument("frechet_bounds: empty list");
  Rational sum = 0, lo, hi = xs.front();
  for (const auto& x : xs) {
    sum += x;
    hi = std::min(hi, x);
  }
  lo = std::max(Rational(sum - static_cast<long>(xs.size()) + 1), Rational(0));
  return {lo, hi};
}

std::pair<Rational, Rational> frechet_disjunction_bounds(const std::vector<Rational>& xs) {
  if (xs.empty()) throw std::invalid_argument("frechet_disjunction_bounds: empty list");
  Rational sum = 0, lo = xs.front();
  for (const auto& x : xs) {
    sum += x;
    lo = std::max(lo, x);
  }
  return {lo, std::min(sum, Rational(1))};
}

std::vector<ConditionalEvent> chain_family(const std::vector<std::string>& atoms) {
  std::vector<ConditionalEvent> out;
  Formula prefix = Formula::top();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Formula e = Formula::atom(atoms[i]);
    out.push_back({e, prefix});
    prefix = i == 0 ? e : prefix & e;
  }
  return out;
}

Rational chain_rule_prevision(const std::vector<Rational>& ps) {
  Rational r = 1;
  for (const auto& p : ps) r *= p;
  return r;
}

Rational inclusion_exclusion(std::size_t n, const std::map<std::vector<std::size_t>, Rational>& conj) {
  Rational r = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.push_back(i);
    auto it = conj.find(s);
    if (it == conj.end()) throw std::invalid_argument("missing joint prevision " + subset_name("x", s));
    r += s.size() % 2 ? it->second : Rational(-it->second);
  }
  return r;
}

std::map<std::vector<std::size_t>, Rational> joint_previsions_from_distribution(
    const std::vector<ConditionalEvent>& family, const Universe& u, const std::vector<Rational>& mu,
    bool disjunction) {
  const std::size_t n = family.size();
  const std::string prefix = disjunction ? "y" : "x";
  JointPrevisions syms = joint_symbols(n, prefix);
  std::vector<std::vector<std::size_t>> order;
  for (const auto& [s, e] : syms) order.push_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::map<std::vector<std::size_t>, Rational> out;
  Bindings env;
  for (const auto& s : order) {
    Crq c = gs_sub(family, u, syms, s, syms.at(s), subset_name(prefix, s), disjunction);
    Rational v = prevision_from_distribution(c, u, mu, env);
    env[subset_name(prefix, s)] = v;
    out[s] = v;
  }
  return out;
}

bool p_consistent(const std::vector<ConditionalEvent>& family, const Universe& u) {
  if (family.empty()) return true;
  return check_coherence(make_assessment(u, family, std::vector<Rational>(family.size(), Rational(1))), u).coherent;
}

bool p_entails(const std::vector<ConditionalEvent>& family, const ConditionalEvent& target, const Universe& u) {
  if (!p_consistent(family, u)) throw std::domain_error("family is not p-consistent");
  Assessment a = make_assessment(u, family, std::vector<Rational>(family.size(), Rational(1)));
  ExtensionOptions opt;
  opt.bisect = false;
  return extension_bounds(a, target, u, opt).lower == 1;
}

bool p_entails_by_absorption(const std::vector<ConditionalEvent>& family, const ConditionalEvent& target,
                             const Universe& u, std::vector<std::size_t>* subfamily) {
  const std::size_t n = family.size();
  std::vector<ConditionalEvent> ext = family;
  ext.push_back(target);
  // a target that is never false is entailed by the empty subfamily
  if (false_set(target, u).none()) {
    if (subfamily) subfamily->clear();
    return true;
  }
  JointPrevisions syms = joint_symbols(n + 1, "x");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.push_back(i);
    std::vector<std::size_t> st = s;
    st.push_back(n);
    Crq lhs = gs_sub(ext, u, syms, st, syms.at(st), subset_name("x", st), false);
    Crq rhs = gs_sub(ext, u, syms, s, syms.at(s), subset_name("x", s), false);
    // every part of S is assessed 1 once the members of S are
    Resolution pin;
    for (const auto& [v, e] : syms) {
      bool inside = true;
      for (std::size_t i : v) inside = inside && i < n && ((mask >> i) & 1u);
      if (inside) pin[subset_name("x", v)] = 1;
    }
    bool ok = true;
    for (std::size_t w : lhs.conditioning.members()) {
      if (!(lhs.value[w].substitute(pin) == rhs.value[w].substitute(pin))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (subfamily) *subfamily = s;
      return true;
    }
  }
  return false;
}

const char* to_string(CompoundIdentity id) {
  switch (id) {
    case CompoundIdentity::P1gs: return "P1";
    case CompoundIdentity::P2a: return "P2a";
    case CompoundIdentity::P2b: return "P2b";
    case CompoundIdentity::P2c: return "P2c";
    case CompoundIdentity::P3: return "P3";
    case CompoundIdentity::ProductRule: return "product";
  }
  return "?";
}

IdentityResult compound_identity_check(CompoundIdentity id, const Rational& x, const Rational& y) {
  const Universe& u = free4();
  auto ah = ce("A", "H"), bk = ce("B", "K"), kk = ce("K", "K");
  auto sym = [](const char* s) { return LinExpr::symbol(s); };
  switch (id) {
    case CompoundIdentity::P1gs: {
      if (x > y) throw std::domain_error("inclusion needs x <= y");
      Formula a = Formula::atom("A"), h = Formula::atom("H"), b = Formula::atom("B"), k = Formula::atom("K");
      Universe inc(u.atoms(), {{a & h & ~b & k, false}, {a & h & ~k, false}, {~h & ~b & k, false}});
      Crq conj = gs_and(ah, bk, inc, x, y, "z");
      return same_values(conj.value, crq_indicator(ah, inc, x).value, inc, {{"z", LinExpr(x)}});
    }
    case CompoundIdentity::P2a: {
      Crq c1 = gs_and(ah, bk, u, x, y, "z1");
      Crq c2 = gs_and(ah, negate(bk), u, x, Rational(1 - y), "z2");
      return same_values(crq_indicator(ah, u, x).value, add_values(c1.value, c2.value), u,
                         {{"z2", LinExpr(x) - sym("z1")}});
    }
    case CompoundIdentity::P2b: {
      Crq c = gs_and(ah, kk, u, x, 1, "z");
      return same_values(crq_indicator(ah, u, x).value, c.value, u, {{"z", LinExpr(x)}});
    }
    case CompoundIdentity::P2c: {
      // (B|K) or (~B|K) is K|K
      Crq sure = gs_or(bk, negate(bk), u, y, Rational(1 - y), "w");
      IdentityResult side = same_values(sure.value, crq_indicator(kk, u, 1).value, u, {{"w", LinExpr(1)}});
      if (!side.holds) return side;
      Crq lhs = gs_and(ah, kk, u, x, 1, "z0");
      Crq c1 = gs_and(ah, bk, u, x, y, "z1");
      Crq c2 = gs_and(ah, negate(bk), u, x, Rational(1 - y), "z2");
      return same_values(lhs.value, add_values(c1.value, c2.value), u,
                         {{"z0", LinExpr(x)}, {"z2", LinExpr(x) - sym("z1")}});
    }
    case CompoundIdentity::P3: {
      Crq lhs = gs_or(ah, bk, u, x, y, "w");
      Crq rest = gs_and(negate(ah), bk, u, Rational(1 - x), y, "zb");
      return same_values(lhs.value, add_values(crq_indicator(ah, u, x).value, rest.value), u,
                         {{"w", LinExpr(x) + LinExpr(y) - sym("z")}, {"zb", LinExpr(y) - sym("z")}});
    }
    case CompoundIdentity::ProductRule: {
      static const Universe ehk({"E", "H", "K"});
      Formula e = Formula::atom("E"), h = Formula::atom("H"), k = Formula::atom("K");
      ConditionalEvent first{e, h & k}, second{h, k}, joint{e & h, k};
      Crq c = gs_and(first, second, ehk, x, y, "z");
      Rational xy = x * y;
      return same_values(c.value, crq_indicator(joint, ehk, xy).value, ehk, {{"z", LinExpr(xy)}});
    }
  }
  throw std::logic_error("bad identity");
}

}  // namespace cohkit
