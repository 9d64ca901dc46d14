#pragma once

#include "cohkit/conditional.hpp"

#include <optional>
#include <string>

namespace cohkit {

// K: Kleene / de Finetti, L: Lukasiewicz, B: Bochvar (internal),
// S: Sobocinski (quasi conjunction).
enum class TriKind { K, L, B, S };

const char* to_string(TriKind k);
TriKind parse_trikind(std::string_view s);

ConditionalEvent negate(const ConditionalEvent& ce);

// Throws std::domain_error("degenerate conjunction") when the resulting
// antecedent is impossible in u.
ConditionalEvent trivalent_and(TriKind kind, const ConditionalEvent& a, const ConditionalEvent& b,
                               const Universe& u);
ConditionalEvent trivalent_or(TriKind kind, const ConditionalEvent& a, const ConditionalEvent& b,
                              const Universe& u);

// Unchecked forms, used when building expressions before a universe is known.
ConditionalEvent trivalent_and(TriKind kind, const ConditionalEvent& a, const ConditionalEvent& b);
ConditionalEvent trivalent_or(TriKind kind, const ConditionalEvent& a, const ConditionalEvent& b);

bool ce_equal(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u);
// first world on which a and b differ
std::optional<std::size_t> ce_difference(const ConditionalEvent& a, const ConditionalEvent& b,
                                         const Universe& u);

// Goodman-Nguyen inclusion a ⊆ b: a true implies b true, b false implies a false.
bool gn_inclusion(const ConditionalEvent& a, const ConditionalEvent& b, const Universe& u);

enum class LogicalProperty { P1, P2a, P2b, P2c, P3 };

const char* to_string(LogicalProperty p);

struct PropertyResult {
  bool holds = true;
  std::optional<std::size_t> witness;  // world index in `universe`
  std::string witness_text;
  std::string detail;
  // P1 only: the two halves of the biconditional
  std::optional<bool> forward, reverse;
  std::string forward_witness, reverse_witness;
};

// Checked on four logically independent atoms A, H, B, K.
PropertyResult check_logical_property(LogicalProperty prop, TriKind kind);

// The same, for a caller supplied universe declaring A, H, B, K. For P1 the
// forward half uses u plus the inclusion constraints.
PropertyResult check_logical_property(LogicalProperty prop, TriKind kind, const Universe& u);

}  // namespace cohkit
