#pragma once

#include "cohkit/assessment_file.hpp"
#include "cohkit/coherence.hpp"
#include "cohkit/crq.hpp"
#include "cohkit/tables.hpp"
#include "cohkit/trivalent.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace cohkit;

inline Rational q(const char* s) { return parse_rational(s); }

// mpq_class(n, d) does not reduce
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline ConditionalEvent ce(const char* text, const Universe& u) { return parse_conditional(text, &u); }

inline const Universe& free4() {
  static const Universe u({"A", "H", "B", "K"});
  return u;
}

// The constrained universe where A|H is included in B|K.
inline const Universe& inclusion4() {
  static const Universe u({"A", "H", "B", "K"},
                          {{parse_formula("A & H & ~K"), false},
                           {parse_formula("A & H & ~B & K"), false},
                           {parse_formula("~H & ~B & K"), false},
                           {parse_formula("~A & H & B & K"), false}});
  return u;
}

// k/den with k uniform in [0, den]
inline Rational random_unit(std::mt19937_64& rng, long den) {
  std::uniform_int_distribution<long> d(0, den);
  return frac(d(rng), den);
}

// Random formula over the atoms of u, depth bounded.
inline Formula random_formula(std::mt19937_64& rng, const Universe& u, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  int c = pick(rng);
  if (c <= 1) {
    std::uniform_int_distribution<std::size_t> a(0, u.atoms().size() - 1);
    Formula f = Formula::atom(u.atoms()[a(rng)]);
    return c == 0 ? f : ~f;
  }
  Formula l = random_formula(rng, u, depth - 1), r = random_formula(rng, u, depth - 1);
  if (c == 2) return l & r;
  if (c == 3) return l | r;
  return ~(l & r);
}

// A conditional event with a satisfiable antecedent.
inline ConditionalEvent random_conditional(std::mt19937_64& rng, const Universe& u, int depth) {
  for (;;) {
    ConditionalEvent e{random_formula(rng, u, depth), random_formula(rng, u, depth)};
    if (u.satisfiable(e.antecedent)) return e;
  }
}

// Distribution over all worlds of u with small random integer weights,
// zero off the admissible worlds.
inline std::vector<Rational> random_distribution(std::mt19937_64& rng, const Universe& u, int max_weight = 5) {
  std::uniform_int_distribution<int> d(0, max_weight);
  std::vector<Rational> mu(u.space());
  Rational total = 0;
  while (total == 0) {
    total = 0;
    for (std::size_t w = 0; w < u.space(); ++w) {
      mu[w] = u.worlds().test(w) ? Rational(d(rng)) : Rational(0);
      total += mu[w];
    }
  }
  for (auto& m : mu) m /= total;
  return mu;
}

// P(E|H) under mu, nullopt when P(H) = 0.
inline std::optional<Rational> conditional_probability(const ConditionalEvent& e, const Universe& u,
                                                       const std::vector<Rational>& mu) {
  Rational ph = 0, peh = 0;
  for (std::size_t w : u.worlds().members()) {
    if (!u.holds(e.antecedent, w)) continue;
    ph += mu[w];
    if (u.holds(e.consequent, w)) peh += mu[w];
  }
  if (ph == 0) return std::nullopt;
  return peh / ph;
}

}  // namespace testing_support
