#pragma once

#include "cohkit/coherence.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cohkit {

// Line-oriented input:
//   atoms A B H K
//   constraint <formula> = FALSE|TRUE
//   event <name> = <E> | <H>        (or "<E> given <H>")
//   assess <name> = <rational|decimal>
//   target <name or conditional event>
//   # comment
struct AssessmentFile {
  struct Event {
    std::string name;
    ConditionalEvent ce;
    std::size_t line = 0;
  };

  std::vector<std::string> atoms;
  std::vector<Constraint> constraints;
  std::vector<Event> events;
  std::map<std::string, Rational> values;
  std::optional<ConditionalEvent> target;
  std::string target_text;

  Universe universe() const;
  const Event& event(std::string_view name) const;
  // assessed events in declaration order
  std::vector<const Event*> assessed() const;
  Assessment assessment(const Universe& u) const;
};

AssessmentFile parse_assessment_file(std::string_view text);
AssessmentFile load_assessment_file(const std::string& path);

}  // namespace cohkit
