#pragma once

#include "cohkit/formula.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cohkit {

enum class TriValue { True, False, Void };

const char* to_string(TriValue v);

struct ConditionalEvent {
  Formula consequent;
  Formula antecedent = Formula::top();

  std::string str() const;
};

// Worlds on which the event is true, false or void.
WorldSet true_set(const ConditionalEvent& ce, const Universe& u);
WorldSet false_set(const ConditionalEvent& ce, const Universe& u);
WorldSet void_set(const ConditionalEvent& ce, const Universe& u);

TriValue eval_conditional(const ConditionalEvent& ce, const Assignment& w);
TriValue eval_conditional(const ConditionalEvent& ce, const Universe& u, std::size_t world);

// "E given H", or "E | H" split at the last top-level '|'. Without either
// the antecedent is TRUE. Use "given" or parentheses when E or H holds '|'.
ConditionalEvent parse_conditional(std::string_view text, const Universe* u = nullptr);

struct Constituent {
  std::size_t index = 0;        // h; 0 for C_0
  std::vector<TriValue> choice;  // which of E_iH_i / ~E_iH_i / ~H_i
  WorldSet worlds;
  bool is_c0 = false;
};

// C_1..C_m in lexicographic order of the choice vector (True < False < Void),
// then C_0 when it is possible.
struct ConstituentTable {
  std::vector<Constituent> rows;

  std::size_t size() const { return rows.size(); }
  const Constituent* c0() const;
  const Constituent* find(const std::vector<TriValue>& choice) const;
};

ConstituentTable enumerate_constituents(const std::vector<ConditionalEvent>& family,
                                        const Universe& u);

}  // namespace cohkit
