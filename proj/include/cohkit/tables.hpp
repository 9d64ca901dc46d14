#pragma once

#include "cohkit/coherence.hpp"
#include "cohkit/trivalent.hpp"

#include <string>
#include <vector>

namespace cohkit {

// The four trivalent operators plus the conditional random quantity one.
enum class Operator { K, L, B, S, GS };
enum class Connective { And, Or };

const char* to_string(Operator op);
const char* to_string(Connective c);
Operator parse_operator(std::string_view s);
Connective parse_connective(std::string_view s);

struct Interval {
  Rational lower, upper;
};

// Closed forms for P(A|H) = x, P(B|K) = y on logically independent A, H, B, K.
Interval closed_form_interval(Operator op, Connective c, const Rational& x, const Rational& y);

// The compound of A|H and B|K as a quantity on `u` (which declares A H B K).
Quantity operator_target(Operator op, Connective c, const Universe& u, const Rational& x, const Rational& y);

const Universe& operand_universe();  // A, H, B, K, no constraints

ExtensionBounds operator_bounds(Operator op, Connective c, const Rational& x, const Rational& y,
                                const ExtensionOptions& opt = {});

// 0, step, 2 step, ..., 1
std::vector<Rational> unit_grid(const Rational& step);

struct IntervalRow {
  Operator op;
  Connective conn;
  std::size_t points = 0;
  std::size_t exact = 0;      // exact endpoints equal the closed forms
  std::size_t bracketed = 0;  // closed forms lie inside both bisection brackets
  std::size_t confirmed = 0;  // both endpoints pass the exact coherence check
  std::vector<std::string> mismatches;
};

std::vector<IntervalRow> intervals_table(const Rational& step, bool bisect = true);

enum class Property { P1, P2a, P2b, P2c, P3, P4, P5, P6 };

const char* to_string(Property p);

struct StarCell {
  Property prop;
  Operator op;
  bool star = true;
  std::string counterexample;
};

// P1-P3 symbolically (trivalent) or by identities over the grid (gs);
// P4-P6 by search over the grid plus the points (2/3, 2/3) and (1, 1).
StarCell star_cell(Property p, Operator op, const Rational& step);
std::vector<StarCell> star_table(const Rational& step);

}  // namespace cohkit
