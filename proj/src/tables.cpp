#include "cohkit/tables.hpp"

#include <stdexcept>

#include "cohkit/crq.hpp"

namespace cohkit {

const char* to_string(Operator op) {
  switch (op) {
    case Operator::K: return "K";
    case Operator::L: return "L";
    case Operator::B: return "B";
    case Operator::S: return "S";
    case Operator::GS: return "gs";
  }
  return "?";
}

const char* to_string(Connective c) { return c == Connective::And ? "and" : "or"; }

Operator parse_operator(std::string_view s) {
  if (s == "gs" || s == "GS") return Operator::GS;
  switch (parse_trikind(s)) {
    case TriKind::K: return Operator::K;
    case TriKind::L: return Operator::L;
    case TriKind::B: return Operator::B;
    case TriKind::S: return Operator::S;
  }
  throw std::invalid_argument("unknown operator");
}

Connective parse_connective(std::string_view s) {
  if (s == "and") return Connective::And;
  if (s == "or") return Connective::Or;
  throw std::invalid_argument("unknown connective '" + std::string(s) + "' (expected and|or)");
}

const char* to_string(Property p) {
  switch (p) {
    case Property::P1: return "P1";
    case Property::P2a: return "P2a";
    case Property::P2b: return "P2b";
    case Property::P2c: return "P2c";
    case Property::P3: return "P3";
    case Property::P4: return "P4";
    case Property::P5: return "P5";
    case Property::P6: return "P6";
  }
  return "?";
}

namespace {

TriKind trikind(Operator op) {
  switch (op) {
    case Operator::K: return TriKind::K;
    case Operator::L: return TriKind::L;
    case Operator::B: return TriKind::B;
    case Operator::S: return TriKind::S;
    default: throw std::invalid_argument("not a trivalent operator");
  }
}

ConditionalEvent ah() { return {Formula::atom("A"), Formula::atom("H")}; }
ConditionalEvent bk() { return {Formula::atom("B"), Formula::atom("K")}; }

Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string pt(const Rational& x, const Rational& y) { return "x=" + to_string(x) + " y=" + to_string(y); }

}  // namespace

const Universe& operand_universe() {
  static const Universe u({"A", "H", "B", "K"});
  return u;
}

Interval closed_form_interval(Operator op, Connective c, const Rational& x, const Rational& y) {
  const bool conj = c == Connective::And;
  switch (op) {
    case Operator::K:
    case Operator::L:
      return conj ? Interval{0, rmin(x, y)} : Interval{rmax(x, y), 1};
    case Operator::B: return {0, 1};
    case Operator::S:
      if (conj) {
        Rational hi = (x == 1 && y == 1) ? Rational(1) : Rational((x + y - 2 * x * y) / (1 - x * y));
        return {rmax(x + y - 1, 0), hi};
      } else {
        Rational lo = (x == 0 && y == 0) ? Rational(0) : Rational(x * y / (x + y - x * y));
        return {lo, rmin(x + y, 1)};
      }
    case Operator::GS:
      return conj ? Interval{rmax(x + y - 1, 0), rmin(x, y)} : Interval{rmax(x, y), rmin(x + y, 1)};
  }
  throw std::logic_error("bad operator");
}

Quantity operator_target(Operator op, Connective c, const Universe& u, const Rational& x, const Rational& y) {
  const bool conj = c == Connective::And;
  if (op == Operator::GS) {
    Crq q = conj ? gs_and(ah(), bk(), u, x, y) : gs_or(ah(), bk(), u, x, y);
    return instantiate(q, u, {});
  }
  TriKind k = trikind(op);
  return indicator(conj ? trivalent_and(k, ah(), bk(), u) : trivalent_or(k, ah(), bk(), u), u);
}

ExtensionBounds operator_bounds(Operator op, Connective c, const Rational& x, const Rational& y,
                                const ExtensionOptions& opt) {
  const Universe& u = operand_universe();
  Assessment base = make_assessment(u, {ah(), bk()}, {x, y});
  return extension_bounds(base, operator_target(op, c, u, x, y), u, opt);
}

std::vector<Rational> unit_grid(const Rational& step) {
  if (sgn(step) <= 0 || step > 1) throw std::invalid_argument("grid step must lie in (0, 1]");
  std::vector<Rational> g;
  for (Rational t = 0; t <= 1; t += step) g.push_back(t);
  if (g.back() != 1) g.push_back(1);
  return g;
}

std::vector<IntervalRow> intervals_table(const Rational& step, bool bisect) {
  std::vector<IntervalRow> rows;
  ExtensionOptions opt;
  opt.bisect = bisect;
  auto grid = unit_grid(step);
  for (Operator op : {Operator::K, Operator::L, Operator::B, Operator::S, Operator::GS}) {
    for (Connective c : {Connective::And, Connective::Or}) {
      IntervalRow row;
      row.op = op;
      row.conn = c;
      for (const auto& x : grid) {
        for (const auto& y : grid) {
          ++row.points;
          ExtensionBounds eb = operator_bounds(op, c, x, y, opt);
          Interval cf = closed_form_interval(op, c, x, y);
          bool exact = eb.lower == cf.lower && eb.upper == cf.upper;
          if (exact) ++row.exact;
          if (eb.bisected && eb.lower_below <= cf.lower && cf.lower <= eb.lower_above &&
              eb.upper_below <= cf.upper && cf.upper <= eb.upper_above)
            ++row.bracketed;
          if (eb.lower_confirmed && eb.upper_confirmed) ++row.confirmed;
          if (!exact)
            row.mismatches.push_back(pt(x, y) + ": [" + to_string(eb.lower) + ", " + to_string(eb.upper) +
                                     "] vs [" + to_string(cf.lower) + ", " + to_string(cf.upper) + "]");
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::vector<std::pair<Rational, Rational>> search_points(const Rational& step) {
  std::vector<std::pair<Rational, Rational>> pts = {{Rational(2, 3), Rational(2, 3)}, {1, 1}};
  for (const auto& x : unit_grid(step))
    for (const auto& y : unit_grid(step)) pts.emplace_back(x, y);
  return pts;
}

ExtensionOptions quick() {
  ExtensionOptions o;
  o.bisect = false;
  o.confirm = false;
  return o;
}

StarCell gs_identity_cell(Property p, const Rational& step) {
  StarCell cell;
  cell.prop = p;
  cell.op = Operator::GS;
  const Universe& u = operand_universe();
  for (const auto& x : unit_grid(step)) {
    for (const auto& y : unit_grid(step)) {
      IdentityResult r;
      switch (p) {
        case Property::P1: {
          if (x <= y) r = compound_identity_check(CompoundIdentity::P1gs, x, y);
          // converse: the conjunction never exceeds B|K
          Crq c = gs_and(ah(), bk(), u, x, y);
          Crq b = crq_indicator(bk(), u, y);
          for (const Rational& z : {rmax(x + y - 1, 0), rmin(x, y)}) {
            if (!r.holds) break;
            Bindings env{{"z", z}};
            for (std::size_t w : u.worlds().members()) {
              if (c.value[w].evaluate(env) > b.value[w].evaluate(env)) {
                r.holds = false;
                r.detail = u.describe(w) + " with z=" + to_string(z) + ": conjunction exceeds B|K";
                break;
              }
            }
          }
          break;
        }
        case Property::P2a: r = compound_identity_check(CompoundIdentity::P2a, x, y); break;
        case Property::P2b: r = compound_identity_check(CompoundIdentity::P2b, x, y); break;
        case Property::P2c: r = compound_identity_check(CompoundIdentity::P2c, x, y); break;
        case Property::P3: r = compound_identity_check(CompoundIdentity::P3, x, y); break;
        default: throw std::logic_error("not an identity property");
      }
      if (!r.holds) {
        cell.star = false;
        cell.counterexample = pt(x, y) + ": " + r.detail;
        return cell;
      }
    }
  }
  return cell;
}

StarCell search_cell(Property p, Operator op, const Rational& step) {
  StarCell cell;
  cell.prop = p;
  cell.op = op;
  const Universe& u = operand_universe();
  for (const auto& [x, y] : search_points(step)) {
    ExtensionBounds zb = operator_bounds(op, Connective::And, x, y, quick());
    if (p == Property::P4 || p == Property::P6) {
      ExtensionBounds wb = operator_bounds(op, Connective::Or, x, y, quick());
      std::string bad;
      if (p == Property::P4) {
        if (zb.upper > rmin(x, y))
          bad = "conjunction upper bound " + to_string(zb.upper) + " > min{x,y} = " + to_string(rmin(x, y));
        else if (wb.lower < rmax(x, y))
          bad = "disjunction lower bound " + to_string(wb.lower) + " < max{x,y} = " + to_string(rmax(x, y));
      } else {
        Interval fz = closed_form_interval(Operator::GS, Connective::And, x, y);
        Interval fw = closed_form_interval(Operator::GS, Connective::Or, x, y);
        if (zb.upper > fz.upper)
          bad = "conjunction upper bound " + to_string(zb.upper) + " > min{x,y} = " + to_string(fz.upper);
        else if (zb.lower < fz.lower)
          bad = "conjunction lower bound " + to_string(zb.lower) + " < max{x+y-1,0} = " + to_string(fz.lower);
        else if (wb.lower < fw.lower)
          bad = "disjunction lower bound " + to_string(wb.lower) + " < max{x,y} = " + to_string(fw.lower);
        else if (wb.upper > fw.upper)
          bad = "disjunction upper bound " + to_string(wb.upper) + " > min{x+y,1} = " + to_string(fw.upper);
      }
      if (!bad.empty()) {
        cell.star = false;
        cell.counterexample = pt(x, y) + ": " + bad;
        return cell;
      }
      continue;
    }
    // P5: with z at either end of its range, w must be forced to x + y - z
    for (const Rational& z : {zb.lower, zb.upper}) {
      Assessment a = make_assessment(u, {ah(), bk()}, {x, y});
      a.add(operator_target(op, Connective::And, u, x, y), z);
      ExtensionBounds wb = extension_bounds(a, operator_target(op, Connective::Or, u, x, y), u, quick());
      Rational sum = x + y - z;
      if (wb.lower != sum || wb.upper != sum) {
        cell.star = false;
        Rational w = wb.lower != sum ? wb.lower : wb.upper;
        cell.counterexample = pt(x, y) + " z=" + to_string(z) + ": w ranges over [" + to_string(wb.lower) + ", " +
                              to_string(wb.upper) + "], e.g. w=" + to_string(w) + " != x+y-z = " + to_string(sum);
        return cell;
      }
    }
  }
  return cell;
}

LogicalProperty logical(Property p) {
  switch (p) {
    case Property::P1: return LogicalProperty::P1;
    case Property::P2a: return LogicalProperty::P2a;
    case Property::P2b: return LogicalProperty::P2b;
    case Property::P2c: return LogicalProperty::P2c;
    case Property::P3: return LogicalProperty::P3;
    default: throw std::logic_error("not a logical property");
  }
}

}  // namespace

StarCell star_cell(Property p, Operator op, const Rational& step) {
  if (p == Property::P4 || p == Property::P5 || p == Property::P6) return search_cell(p, op, step);
  if (op == Operator::GS) return gs_identity_cell(p, step);
  PropertyResult r = check_logical_property(logical(p), trikind(op));
  StarCell cell;
  cell.prop = p;
  cell.op = op;
  cell.star = r.holds;
  if (!r.holds) {
    cell.counterexample = r.witness_text + (r.detail.empty() ? "" : " (" + r.detail + ")");
    if (p == Property::P1)
      cell.counterexample = r.detail + "; " + (r.forward_witness.empty() ? "" : "forward witness " + r.forward_witness) +
                            (r.reverse_witness.empty() ? "" : (r.forward_witness.empty() ? "" : ", ") +
                                                                  ("reverse witness " + r.reverse_witness));
  }
  return cell;
}

std::vector<StarCell> star_table(const Rational& step) {
  std::vector<StarCell> out;
  for (Property p : {Property::P1, Property::P2a, Property::P2b, Property::P2c, Property::P3, Property::P4,
                     Property::P5, Property::P6})
    for (Operator op : {Operator::K, Operator::L, Operator::B, Operator::S, Operator::GS})
      out.push_back(star_cell(p, op, step));
  return out;
}

}  // namespace cohkit
