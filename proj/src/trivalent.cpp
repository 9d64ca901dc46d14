#include "cohkit/trivalent.hpp"

#include <stdexcept>

namespace cohkit {

const char* to_string(TriKind k) {
  switch (k) {
    case TriKind::K: return "K";
    case TriKind::L: return "L";
    case TriKind::B: return "B";
    case TriKind::S: return "S";
  }
  return "?";
}

TriKind parse_trikind(std::string_view s) {
  if (s == "K") return TriKind::K;
  if (s == "L") return TriKind::L;
  if (s == "B") return TriKind::B;
  if (s == "S") return TriKind::S;
  throw std::invalid_argument("unknown operator '" + std::string(s) + "'");
}

const char* to_string(LogicalProperty p) {
  switch (p) {
    case LogicalProperty::P1: return "P1";
    case LogicalProperty::P2a: return "P2a";
    case LogicalProperty::P2b: return "P2b";
    case LogicalProperty::P2c: return "P2c";
    case LogicalProperty::P3: return "P3";
  }
  return "?";
}

ConditionalEvent negate(const ConditionalEvent& ce) { return {~ce.consequent, ce.antecedent}; }

ConditionalEvent trivalent_and(TriKind kind, const ConditionalEvent& x, const ConditionalEvent& y) {
  const Formula &a = x.consequent, &h = x.antecedent, &b = y.consequent, &k = y.antecedent;
  Formula both = a & h & b & k;
  switch (kind) {
    case TriKind::K: return {both, both | (~a & h) | (~b & k)};
    case TriKind::L: return {both, both | (~a & h) | (~b & k) | (~h & ~k)};
    case TriKind::B: return {both, h & k};
    case TriKind::S: return {(a | ~h) & (b | ~k), h | k};
  }
  throw std::logic_error("bad kind");
}

ConditionalEvent trivalent_or(TriKind kind, const ConditionalEvent& x, const ConditionalEvent& y) {
  return negate(trivalent_and(kind, negate(x), negate(y)));
}

ConditionalEvent trivalent_and(TriKind kind, const ConditionalEvent& a, const ConditionalEvent& b,
                               const Universe& u) {
  ConditionalEvent r = trivalent_and(kind, a, b);
  if (!u.satisfiable(r.antecedent)) throw std::domain_error("degenerate conjunction");
  return r;
}

ConditionalEvent trivalent_or(TriKind kind, const ConditionalEvent& a, const ConditionalEvent& b,
                              const Universe& u) {
  ConditionalEvent r = trivalent_or(kind, a, b);
  if (!u.satisfiable(r.antecedent)) throw std::domain_error("degenerate disjunction");
  return r;
}

std::optional<std::size_t> ce_difference(const ConditionalEvent& a, const ConditionalEvent& b,
                                         const Universe& u) {
  for (std::size_t w : u.worlds().members())
    if (eval_conditional(a, u, w) != eval_conditional(b, u, w)) return w;
  return std::nullopt;
}

bool ce_equal(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u) {
  return !ce_difference(a, b, u).has_value();
}

bool gn_inclusion(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u) {
  return true_set(a, u).within(true_set(b, u)) && false_set(b, u).within(false_set(a, u));
}

namespace {

Formula atom(const char* n) { return Formula::atom(n); }

struct Operands {
  ConditionalEvent ah{atom("A"), atom("H")};
  ConditionalEvent bk{atom("B"), atom("K")};
};

PropertyResult compare(const ConditionalEvent& lhs, const ConditionalEvent& rhs, const Universe& u,
                       const std::string& what) {
  PropertyResult r;
  if (auto w = ce_difference(lhs, rhs, u)) {
    r.holds = false;
    r.witness = *w;
    r.witness_text = u.describe(*w);
    r.detail = what + ": " + to_string(eval_conditional(lhs, u, *w)) + " vs " +
               to_string(eval_conditional(rhs, u, *w));
  }
  return r;
}

Universe with_constraints(const Universe& u, const std::vector<Formula>& impossible) {
  auto cs = u.constraints();
  for (const auto& f : impossible) cs.push_back({f, false});
  return Universe(u.atoms(), cs);
}

PropertyResult check_p1(TriKind kind, const Universe& u) {
  Operands o;
  Formula a = atom("A"), h = atom("H"), b = atom("B"), k = atom("K");
  std::vector<Formula> gn = {a & h & ~b & k, a & h & ~k, ~h & ~b & k};
  PropertyResult r;

  // forward: inclusion forces the conjunction to collapse onto A|H
  Universe inc = with_constraints(u, gn);
  auto conj = trivalent_and(kind, o.ah, o.bk);
  if (auto w = ce_difference(conj, o.ah, inc)) {
    r.forward = false;
    r.forward_witness = inc.describe(*w);
    r.witness = *w;
    r.witness_text = r.forward_witness;
  } else {
    r.forward = true;
  }

  // reverse: restrict to the worlds where the collapse happens anyway; any
  // inclusion-violating world left there breaks the converse
  WorldSet agree(u.space());
  for (std::size_t w : u.worlds().members())
    if (eval_conditional(conj, u, w) == eval_conditional(o.ah, u, w)) agree.set(w);
  WorldSet h_set = u.extension(h) & agree, k_set = u.extension(k) & agree;
  WorldSet ant = u.extension(conj.antecedent) & agree;
  r.reverse = true;
  if (h_set.any() && k_set.any() && ant.any()) {
    for (const auto& g : gn) {
      WorldSet bad = u.extension(g) & agree;
      if (bad.any()) {
        std::size_t w = bad.members().front();
        r.reverse = false;
        r.reverse_witness = u.describe(w);
        if (!r.witness) {
          r.witness = w;
          r.witness_text = r.reverse_witness;
        }
        break;
      }
    }
  }
  r.holds = *r.forward && *r.reverse;
  if (!r.holds)
    r.detail = std::string("inclusion => collapse ") + (*r.forward ? "holds" : "fails") +
               ", collapse => inclusion " + (*r.reverse ? "holds" : "fails");
  return r;
}

}  // namespace

PropertyResult check_logical_property(LogicalProperty prop, TriKind kind, const Universe& u) {
  for (const char* n : {"A", "H", "B", "K"}) u.atom_index(n);
  Operands o;
  auto AND = [&](const ConditionalEvent& x, const ConditionalEvent& y) { return trivalent_and(kind, x, y); };
  auto OR = [&](const ConditionalEvent& x, const ConditionalEvent& y) { return trivalent_or(kind, x, y); };
  ConditionalEvent nb = negate(o.bk), na = negate(o.ah);
  switch (prop) {
    case LogicalProperty::P1: return check_p1(kind, u);
    case LogicalProperty::P2a:
      return compare(o.ah, OR(AND(o.ah, o.bk), AND(o.ah, nb)), u, "A|H vs split on B|K");
    case LogicalProperty::P2b: {
      ConditionalEvent kk{atom("K"), atom("K")};
      return compare(o.ah, AND(o.ah, kk), u, "A|H vs A|H and K|K");
    }
    case LogicalProperty::P2c:
      return compare(AND(o.ah, OR(o.bk, nb)), OR(AND(o.ah, o.bk), AND(o.ah, nb)), u,
                     "distributivity");
    case LogicalProperty::P3: {
      auto lhs = OR(o.ah, o.bk);
      auto r = compare(lhs, OR(o.ah, AND(na, o.bk)), u, "A|H or (~A|H and B|K)");
      if (!r.holds) return r;
      return compare(lhs, OR(o.bk, AND(o.ah, nb)), u, "B|K or (A|H and ~B|K)");
    }
  }
  throw std::logic_error("bad property");
}

PropertyResult check_logical_property(LogicalProperty prop, TriKind kind) {
  static const Universe free4({"A", "H", "B", "K"});
  return check_logical_property(prop, kind, free4);
}

}  // namespace cohkit
