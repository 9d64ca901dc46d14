#pragma once

#include "cohkit/conditional.hpp"
#include "cohkit/lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohkit {

// A finitely valued conditional quantity X|H. Conditional events are the
// 0/1-valued case. Outside H the quantity takes its own prevision.
struct Quantity {
  std::string label;
  WorldSet conditioning;
  std::vector<Rational> value;  // indexed by world, read only inside conditioning
};

Quantity indicator(const ConditionalEvent& ce, const Universe& u, std::string label = {});

struct Assessment {
  std::vector<Quantity> family;
  std::vector<Rational> values;

  std::size_t size() const { return family.size(); }
  void add(Quantity q, Rational p);
};

Assessment make_assessment(const Universe& u, const std::vector<ConditionalEvent>& family,
                           const std::vector<Rational>& values);

struct PointRow {
  std::size_t index = 0;  // h
  WorldSet worlds;
  std::vector<std::optional<Rational>> outcome;  // nullopt where the member is void
  std::vector<Rational> q;                       // Q_h
};

// Generalized constituents of a subfamily. C_0 is kept apart: its point is P.
struct PointTable {
  std::vector<std::size_t> members;
  std::vector<Rational> p;
  std::vector<PointRow> rows;  // C_1..C_m
  WorldSet c0;

  std::vector<std::vector<Rational>> points() const;
};

PointTable build_points(const Assessment& a, const Universe& u);
PointTable build_points(const Assessment& a, const Universe& u, const std::vector<std::size_t>& members);

HullResult check_hull(const Assessment& a, const Universe& u);

struct CoherenceVerdict {
  bool coherent = true;
  std::optional<std::vector<std::size_t>> failing;
  std::vector<Rational> weights;  // coherent: convex weights of the full family
  std::vector<Rational> stakes;   // incoherent: over the failing subfamily
  Rational margin;
  std::size_t hull_tests = 0;
};

// Default 12, overridden by COHKIT_MAX_FAMILY.
std::size_t max_family_size();

// Every nonempty subfamily, by increasing size then lexicographically.
// Stops at the first one whose P_S lies outside its hull.
CoherenceVerdict check_coherence(const Assessment& a, const Universe& u);

// s is indexed like a.family. The constituent is given by its worlds.
Rational random_gain(const Assessment& a, const std::vector<Rational>& s, const WorldSet& constituent);
Rational random_gain(const PointTable& t, const std::vector<Rational>& s, const PointRow& row);

Rational penalty_loss(const Assessment& a, const WorldSet& constituent);
Rational penalty_loss(const Assessment& a, const std::vector<Rational>& values, const WorldSet& constituent);

struct DutchBook {
  std::vector<std::size_t> subfamily;
  std::vector<Rational> stakes;  // over subfamily, max |s_i| = 1
  Rational margin;               // minimum gain
  std::vector<Rational> gains;   // per constituent of the subfamily
};

std::optional<DutchBook> dutch_book(const Assessment& a, const Universe& u);

struct BrierDominator {
  std::vector<std::size_t> subfamily;
  std::vector<Rational> values;                 // P*, indexed like a.family
  std::vector<Rational> assessed_loss, dominating_loss;  // per constituent C_1..C_m of the full family
  int precision_rounds = 0;
};

std::optional<BrierDominator> brier_dominator(const Assessment& a, const Universe& u);

// L*_h <= L_h everywhere on the full family's constituents, strictly somewhere.
bool weakly_dominates(const Assessment& a, const std::vector<Rational>& candidate, const Universe& u);

struct ExtensionOptions {
  bool bisect = true;
  int bits = 40;        // bracket width below 2^-bits
  bool confirm = true;  // exact coherence check at both endpoints
};

struct ExtensionBounds {
  Rational lower, upper;
  // closed bisection brackets around each endpoint
  Rational lower_below, lower_above, upper_below, upper_above;
  bool bisected = false;
  bool lower_confirmed = false, upper_confirmed = false;
  std::size_t lp_solves = 0;
};

// Coherent values t of `target` given the coherent assessment a.
ExtensionBounds extension_bounds(const Assessment& a, const Quantity& target, const Universe& u,
                                 const ExtensionOptions& opt = {});
ExtensionBounds extension_bounds(const Assessment& a, const ConditionalEvent& target, const Universe& u,
                                 const ExtensionOptions& opt = {});

// Euclidean projection of p onto the convex hull of points (Wolfe's
// min-norm-point iteration, floating point).
std::vector<double> project_onto_hull(const std::vector<std::vector<double>>& points,
                                      const std::vector<double>& p);

}  // namespace cohkit
