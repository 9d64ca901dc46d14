#pragma once

#include "cohkit/assessment_file.hpp"
#include "cohkit/tables.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohkit {

using Json = nlohmann::ordered_json;

// Bad flags or inputs the command cannot run on (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandResult {
  Json report;
  int exit_code = 0;  // 0 holds / coherent, 1 fails / incoherent
};

// {"exact": "p/q", "decimal": "..."}
Json number_json(const Rational& r);
Rational number_from_json(const Json& j);

std::string render(const Json& j);

CommandResult run_check(const AssessmentFile& f);
CommandResult run_dutchbook(const AssessmentFile& f);
// With `op`, bounds op(E1, E2) for the two named events (default: the two
// assessed events). Without it, bounds the file's target.
CommandResult run_bounds(const AssessmentFile& f, std::optional<Operator> op, Connective conn,
                         const std::vector<std::string>& events = {}, bool bisect = true);
CommandResult run_tables(const Rational& step, bool bisect = true);
// The family is every other event; assessed values are ignored.
CommandResult run_entails(const AssessmentFile& f, const std::string& target);

}  // namespace cohkit
