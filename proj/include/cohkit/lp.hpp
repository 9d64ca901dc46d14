#pragma once

#include "cohkit/rational.hpp"

#include <vector>

namespace cohkit {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize, Feasibility };
enum class VarKind { NonNegative, Free };

struct LinearProgram {
  struct Row {
    std::vector<Rational> coeffs;
    Relation rel = Relation::Equal;
    Rational rhs;
  };

  Sense sense = Sense::Feasibility;
  std::vector<VarKind> vars;
  std::vector<Rational> objective;
  std::vector<Row> rows;

  std::size_t add_variable(VarKind kind = VarKind::NonNegative, Rational cost = 0);
  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  std::size_t size() const { return vars.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;

  // Infeasible: y with y'A <= 0 (== 0 on free variables), y_i <= 0 on <=
  // rows, y_i >= 0 on >= rows, and y'b > 0.
  std::vector<Rational> certificate;

  // Unbounded: direction d with x + t d feasible for all t >= 0 and the
  // objective improving along it.
  std::vector<Rational> ray;
};

// Two-phase dense simplex over exact rationals, Bland's rule throughout.
LpResult solve(const LinearProgram& lp);

// Residual-free check of x against every row and sign condition.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);
bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& y);

struct HullResult {
  bool inside = false;
  std::vector<Rational> weights;  // inside: convex weights
  std::vector<Rational> stakes;   // outside: s with s.(Q_h - p) > 0 for every h, max |s_i| = 1
  Rational margin;                // outside: min_h s.(Q_h - p)
};

HullResult hull_membership(const std::vector<std::vector<Rational>>& points,
                           const std::vector<Rational>& p);

}  // namespace cohkit
