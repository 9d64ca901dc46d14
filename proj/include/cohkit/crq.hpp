#pragma once

#include "cohkit/coherence.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cohkit {

// Affine expression over prevision symbols.
class LinExpr {
 public:
  LinExpr() = default;
  LinExpr(Rational c) : constant_(std::move(c)) {}
  LinExpr(int c) : constant_(c) {}
  static LinExpr symbol(const std::string& name);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  LinExpr substitute(const std::map<std::string, LinExpr>& s) const;
  Rational evaluate(const std::map<std::string, Rational>& env) const;
  std::string str() const;

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rational& k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rational& k) { return a *= k; }
  friend LinExpr operator-(LinExpr a) { return a *= Rational(-1); }
  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

 private:
  void prune();
  Rational constant_{0};
  std::map<std::string, Rational> terms_;
};

using Bindings = std::map<std::string, Rational>;
using Resolution = std::map<std::string, LinExpr>;

// A conditional random quantity: one value per world. On worlds outside
// `conditioning` the value is the quantity's own prevision symbol.
struct Crq {
  std::string label;
  std::string prevision;
  WorldSet conditioning;
  std::vector<LinExpr> value;
};

Crq crq_indicator(const ConditionalEvent& ce, const Universe& u, const LinExpr& prevision,
                  std::string symbol = "p");

// Throws std::domain_error when x and y are numbers that are not coherent
// on {a, b}.
Crq gs_and(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u, const LinExpr& x,
           const LinExpr& y, std::string own = "z");
Crq gs_or(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u, const LinExpr& x,
          const LinExpr& y, std::string own = "w");

// Previsions of the conjunctions (or disjunctions) of proper subfamilies,
// keyed by sorted index sets.
using JointPrevisions = std::map<std::vector<std::size_t>, LinExpr>;

// One symbol per proper nonempty subfamily: x1, x12, x13, ... (1-based).
JointPrevisions joint_symbols(std::size_t n, const std::string& prefix);
std::string subset_name(const std::string& prefix, const std::vector<std::size_t>& s);

Crq gs_and_n(const std::vector<ConditionalEvent>& family, const Universe& u, const JointPrevisions& xs,
             std::string own = "x");
Crq gs_or_n(const std::vector<ConditionalEvent>& family, const Universe& u, const JointPrevisions& ys,
            std::string own = "y");

// Worldwise pointwise sum and scalar affine maps, as random quantities.
std::vector<LinExpr> add_values(const std::vector<LinExpr>& a, const std::vector<LinExpr>& b);
std::vector<LinExpr> affine_values(const Rational& c, const Rational& k, const std::vector<LinExpr>& a);

// Numeric conditional quantity for the coherence engine.
Quantity instantiate(const Crq& c, const Universe& u, const Bindings& env);

// mu: a distribution over worlds (indexed by world). Values on the
// conditioning event must be numeric after `env`.
Rational prevision_from_distribution(const Crq& c, const Universe& u, const std::vector<Rational>& mu,
                                     const Bindings& env = {});

// Product distribution making the named atoms independent with the given
// probabilities.
std::vector<Rational> independent_distribution(const Universe& u, const std::map<std::string, Rational>& p);

struct IdentityResult {
  bool holds = true;
  std::optional<std::size_t> witness;
  std::string detail;
};

// Worldwise equality on every possible world after applying `r` to both sides.
IdentityResult same_values(const std::vector<LinExpr>& lhs, const std::vector<LinExpr>& rhs, const Universe& u,
                           const Resolution& r = {});

// (A|H) or (B|K) == 1 - (~A|H and ~B|K), with w = 1 - z' and
// z' = 1 - x - y + z.
bool demorgan_check(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u, const Rational& x,
                    const Rational& y, const Rational& z);

// (x, y, z) coherent for the conjunction on free atoms and w = x + y - z.
bool sum_rule_check(const Rational& x, const Rational& y, const Rational& z, const Rational& w);

std::pair<Rational, Rational> frechet_bounds(const std::vector<Rational>& xs);
std::pair<Rational, Rational> frechet_disjunction_bounds(const std::vector<Rational>& xs);

// E_1, E_2|E_1, ..., E_n|E_1...E_{n-1}
std::vector<ConditionalEvent> chain_family(const std::vector<std::string>& atoms);
Rational chain_rule_prevision(const std::vector<Rational>& conditional_probabilities);

// sum over nonempty S of (-1)^{|S|+1} x_S; needs every nonempty S, the full
// family included.
Rational inclusion_exclusion(std::size_t n, const std::map<std::vector<std::size_t>, Rational>& conj);

// Previsions of the conjunction (resp. disjunction) of every nonempty
// subfamily under mu, innermost first. Each conditioning event needs mass.
std::map<std::vector<std::size_t>, Rational> joint_previsions_from_distribution(
    const std::vector<ConditionalEvent>& family, const Universe& u, const std::vector<Rational>& mu,
    bool disjunction);

bool p_consistent(const std::vector<ConditionalEvent>& family, const Universe& u);

// Primary: the extension interval of the target under the all-ones
// assessment is {1}. Throws std::domain_error when not p-consistent.
bool p_entails(const std::vector<ConditionalEvent>& family, const ConditionalEvent& target, const Universe& u);

// The target is never false, or some nonempty subfamily S has
// gs_and(S) and target == gs_and(S) worldwise, with the joint previsions
// inside S pinned to 1.
bool p_entails_by_absorption(const std::vector<ConditionalEvent>& family, const ConditionalEvent& target,
                             const Universe& u, std::vector<std::size_t>* subfamily = nullptr);

// ProductRule: (E|HK) and (H|K) == EH|K with prevision xy.
enum class CompoundIdentity { P1gs, P2a, P2b, P2c, P3, ProductRule };

const char* to_string(CompoundIdentity id);

// Runs the identity with numeric operand previsions x, y on its own universe.
IdentityResult compound_identity_check(CompoundIdentity id, const Rational& x, const Rational& y);

}  // namespace cohkit
