#include "cohkit/report.hpp"

#include "cohkit/crq.hpp"

namespace cohkit {

namespace {

const char* outcome_name(const std::optional<Rational>& v) {
  if (!v) return "void";
  return *v == 1 ? "true" : "false";
}

std::string describe_row(const PointRow& row, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) s += ' ';
    s += names[k] + '=' + outcome_name(row.outcome[k]);
  }
  return s;
}

Json universe_json(const AssessmentFile& f) {
  Json j;
  j["atoms"] = f.atoms;
  Json cs = Json::array();
  for (const auto& c : f.constraints) cs.push_back(c.formula.str() + (c.certain ? " = TRUE" : " = FALSE"));
  j["constraints"] = cs;
  return j;
}

struct Loaded {
  Universe u;
  Assessment a;
  std::vector<std::string> names;
};

Loaded load(const AssessmentFile& f) {
  auto assessed = f.assessed();
  if (assessed.empty()) throw UsageError("empty family: no event is assessed");
  Universe u = f.universe();
  Loaded l{u, f.assessment(u), {}};
  for (const auto* e : assessed) l.names.push_back(e->name);
  return l;
}

Json family_json(const AssessmentFile& f, const Loaded& l) {
  Json fam = Json::array();
  for (std::size_t i = 0; i < l.names.size(); ++i) {
    Json e;
    e["name"] = l.names[i];
    e["event"] = f.event(l.names[i]).ce.str();
    e["value"] = number_json(l.a.values[i]);
    fam.push_back(e);
  }
  return fam;
}

std::vector<std::string> pick(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(names[i]);
  return out;
}

Json book_json(const Loaded& l, const DutchBook& b) {
  Json j;
  auto names = pick(l.names, b.subfamily);
  j["subfamily"] = names;
  Json stakes = Json::array();
  for (std::size_t k = 0; k < names.size(); ++k) {
    Json s;
    s["event"] = names[k];
    s["stake"] = number_json(b.stakes[k]);
    stakes.push_back(s);
  }
  j["stakes"] = stakes;
  j["minimum_gain"] = number_json(b.margin);
  PointTable t = build_points(l.a, l.u, b.subfamily);
  Json gains = Json::array();
  for (std::size_t h = 0; h < t.rows.size(); ++h) {
    Json g;
    g["constituent"] = "C" + std::to_string(t.rows[h].index);
    g["case"] = describe_row(t.rows[h], names);
    g["gain"] = number_json(b.gains[h]);
    gains.push_back(g);
  }
  j["gains"] = gains;
  return j;
}

Json dominator_json(const Loaded& l, const BrierDominator& d) {
  Json j;
  j["subfamily"] = pick(l.names, d.subfamily);
  Json vals = Json::array();
  for (std::size_t i = 0; i < l.names.size(); ++i) {
    Json v;
    v["event"] = l.names[i];
    v["assessed"] = number_json(l.a.values[i]);
    v["dominating"] = number_json(d.values[i]);
    vals.push_back(v);
  }
  j["values"] = vals;
  PointTable t = build_points(l.a, l.u);
  Json losses = Json::array();
  for (std::size_t h = 0; h < t.rows.size(); ++h) {
    Json r;
    r["constituent"] = "C" + std::to_string(t.rows[h].index);
    r["case"] = describe_row(t.rows[h], l.names);
    r["assessed_loss"] = number_json(d.assessed_loss[h]);
    r["dominating_loss"] = number_json(d.dominating_loss[h]);
    losses.push_back(r);
  }
  j["losses"] = losses;
  return j;
}

Json bounds_json(const ExtensionBounds& b) {
  Json j;
  j["lower"] = number_json(b.lower);
  j["upper"] = number_json(b.upper);
  if (b.bisected) {
    Json br;
    br["lower"] = Json::array({number_json(b.lower_below), number_json(b.lower_above)});
    br["upper"] = Json::array({number_json(b.upper_below), number_json(b.upper_above)});
    j["brackets"] = br;
  }
  j["endpoints_confirmed"] = b.lower_confirmed && b.upper_confirmed;
  return j;
}

}  // namespace

Json number_json(const Rational& r) {
  Json j;
  j["exact"] = to_string(r);
  j["decimal"] = to_decimal(r);
  return j;
}

Rational number_from_json(const Json& j) { return parse_rational(j.at("exact").get<std::string>()); }

std::string render(const Json& j) { return j.dump(2) + "\n"; }

CommandResult run_check(const AssessmentFile& f) {
  Loaded l = load(f);
  CoherenceVerdict v = check_coherence(l.a, l.u);
  CommandResult out;
  Json& j = out.report;
  j["command"] = "check";
  j["universe"] = universe_json(f);
  j["family"] = family_json(f, l);
  j["verdict"] = v.coherent ? "coherent" : "incoherent";
  j["hull_tests"] = v.hull_tests;
  if (v.coherent) {
    PointTable t = build_points(l.a, l.u);
    Json ws = Json::array();
    for (std::size_t h = 0; h < t.rows.size(); ++h) {
      if (v.weights[h] == 0) continue;
      Json w;
      w["constituent"] = "C" + std::to_string(t.rows[h].index);
      w["case"] = describe_row(t.rows[h], l.names);
      w["weight"] = number_json(v.weights[h]);
      ws.push_back(w);
    }
    j["hull_weights"] = ws;
    return out;
  }
  j["failing_subfamily"] = pick(l.names, *v.failing);
  j["dutch_book"] = book_json(l, *dutch_book(l.a, l.u));
  j["brier_dominator"] = dominator_json(l, *brier_dominator(l.a, l.u));
  out.exit_code = 1;
  return out;
}

CommandResult run_dutchbook(const AssessmentFile& f) {
  Loaded l = load(f);
  if (l.a.size() > max_family_size())
    throw std::length_error("family size " + std::to_string(l.a.size()) + " exceeds the cap of " +
                            std::to_string(max_family_size()) + " (COHKIT_MAX_FAMILY)");
  CommandResult out;
  Json& j = out.report;
  j["command"] = "dutchbook";
  j["family"] = family_json(f, l);
  auto b = dutch_book(l.a, l.u);
  if (!b) {
    j["verdict"] = "coherent";
    j["dutch_book"] = nullptr;
    return out;
  }
  j["verdict"] = "incoherent";
  j["dutch_book"] = book_json(l, *b);
  out.exit_code = 1;
  return out;
}

CommandResult run_bounds(const AssessmentFile& f, std::optional<Operator> op, Connective conn,
                         const std::vector<std::string>& events, bool bisect) {
  Loaded l = load(f);
  CommandResult out;
  Json& j = out.report;
  j["command"] = "bounds";
  j["family"] = family_json(f, l);

  CoherenceVerdict v = check_coherence(l.a, l.u);
  if (!v.coherent) {
    j["verdict"] = "incoherent base assessment";
    j["failing_subfamily"] = pick(l.names, *v.failing);
    out.exit_code = 1;
    return out;
  }

  ExtensionOptions opt;
  opt.bisect = bisect;
  Quantity target;
  if (op) {
    std::vector<std::string> pair = events;
    if (pair.empty()) {
      if (l.names.size() != 2)
        throw UsageError("--events is required unless exactly two events are assessed");
      pair = l.names;
    }
    if (pair.size() != 2) throw UsageError("--events takes exactly two event names");
    std::size_t ia = l.names.size(), ib = l.names.size();
    for (std::size_t i = 0; i < l.names.size(); ++i) {
      if (l.names[i] == pair[0]) ia = i;
      if (l.names[i] == pair[1]) ib = i;
    }
    if (ia == l.names.size() || ib == l.names.size())
      throw UsageError("--events must name assessed events");
    const auto& a = f.event(pair[0]).ce;
    const auto& b = f.event(pair[1]).ce;
    std::string label = pair[0] + (conn == Connective::And ? " and_" : " or_") + to_string(op.value()) + ' ' + pair[1];
    try {
      if (*op == Operator::GS) {
        Crq c = conn == Connective::And ? gs_and(a, b, l.u, l.a.values[ia], l.a.values[ib])
                                        : gs_or(a, b, l.u, l.a.values[ia], l.a.values[ib]);
        target = instantiate(c, l.u, {});
      } else {
        TriKind k = static_cast<TriKind>(static_cast<int>(*op));
        ConditionalEvent ce = conn == Connective::And ? trivalent_and(k, a, b, l.u) : trivalent_or(k, a, b, l.u);
        target = indicator(ce, l.u);
        j["compound"] = ce.str();
      }
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    target.label = label;
    j["operator"] = to_string(*op);
    j["kind"] = to_string(conn);
    j["operands"] = pair;
  } else {
    if (!f.target) throw UsageError("no --op given and the file has no target");
    if (!l.u.satisfiable(f.target->antecedent))
      throw UsageError("target has an impossible conditioning event");
    target = indicator(*f.target, l.u, f.target_text);
    j["target"] = f.target->str();
  }
  ExtensionBounds b = extension_bounds(l.a, target, l.u, opt);
  j["verdict"] = "coherent base assessment";
  j["interval"] = bounds_json(b);
  return out;
}

CommandResult run_tables(const Rational& step, bool bisect) {
  if (step != Rational(1, 4) && step != Rational(1, 10) && step != Rational(1, 20))
    throw UsageError("--step must be 1/4, 1/10 or 1/20");
  CommandResult out;
  Json& j = out.report;
  j["command"] = "tables";
  j["step"] = number_json(step);

  Json rows = Json::array();
  bool all_exact = true;
  for (const auto& r : intervals_table(step, bisect)) {
    Json row;
    row["operator"] = to_string(r.op);
    row["kind"] = to_string(r.conn);
    row["points"] = r.points;
    row["exact"] = r.exact;
    row["bracketed"] = r.bracketed;
    row["confirmed"] = r.confirmed;
    row["mismatches"] = r.mismatches;
    all_exact = all_exact && r.mismatches.empty() && r.exact == r.points;
    rows.push_back(row);
  }
  j["intervals"] = rows;

  auto cells = star_table(step);
  static const Operator ops[] = {Operator::K, Operator::L, Operator::B, Operator::S, Operator::GS};
  Json matrix = Json::array();
  for (std::size_t p = 0; p < cells.size() / 5; ++p) {
    Json row;
    row["property"] = to_string(cells[p * 5].prop);
    for (std::size_t o = 0; o < 5; ++o) row[to_string(ops[o])] = cells[p * 5 + o].star ? "*" : "";
    matrix.push_back(row);
  }
  j["stars"] = matrix;
  Json cex = Json::array();
  for (const auto& c : cells) {
    if (c.star) continue;
    Json e;
    e["property"] = to_string(c.prop);
    e["operator"] = to_string(c.op);
    e["counterexample"] = c.counterexample;
    cex.push_back(e);
  }
  j["counterexamples"] = cex;
  out.exit_code = all_exact ? 0 : 1;
  return out;
}

CommandResult run_entails(const AssessmentFile& f, const std::string& target) {
  Universe u = f.universe();
  const auto& t = f.event(target);
  std::vector<ConditionalEvent> family;
  std::vector<std::string> names;
  for (const auto& e : f.events) {
    if (e.name == target) continue;
    family.push_back(e.ce);
    names.push_back(e.name);
  }
  if (family.empty()) throw UsageError("empty family: the target is the only event");
  CommandResult out;
  Json& j = out.report;
  j["command"] = "entails";
  j["family"] = names;
  j["target"] = target;
  if (!p_consistent(family, u)) {
    j["p_consistent"] = false;
    j["verdict"] = "family is not p-consistent";
    out.exit_code = 1;
    return out;
  }
  j["p_consistent"] = true;
  Assessment ones = make_assessment(u, family, std::vector<Rational>(family.size(), Rational(1)));
  ExtensionOptions opt;
  opt.bisect = false;
  ExtensionBounds b = extension_bounds(ones, t.ce, u, opt);
  bool by_interval = b.lower == 1;
  std::vector<std::size_t> sub;
  bool by_absorption = p_entails_by_absorption(family, t.ce, u, &sub);
  if (by_interval != by_absorption)
    throw std::logic_error("p-entailment characterizations disagree");
  j["verdict"] = by_interval ? "p-entails" : "does not p-entail";
  j["interval"] = bounds_json(b);
  if (by_absorption) j["absorbing_subfamily"] = pick(names, sub);
  out.exit_code = by_interval ? 0 : 1;
  return out;
}

}  // namespace cohkit
