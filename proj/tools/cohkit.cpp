#include "cohkit/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cohkit;

namespace {

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string name = s.substr(start, comma - start);
    if (name.empty()) throw UsageError("empty name in --events");
    out.push_back(name);
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence checking for conditional probability assessments"};
  app.require_subcommand(1);

  std::string file, op_text, kind_text = "and", events_text, target, step_text = "1/10";
  bool no_bisect = false;

  auto* check = app.add_subcommand("check", "decide coherence; on failure emit a Dutch book and a Brier dominator");
  check->add_option("file", file, "assessment file")->required();

  auto* book = app.add_subcommand("dutchbook", "search for a Dutch book");
  book->add_option("file", file, "assessment file")->required();

  auto* bounds = app.add_subcommand("bounds", "interval of coherent extensions");
  bounds->add_option("file", file, "assessment file")->required();
  bounds->add_option("--op", op_text, "K, L, B, S or gs (omit to bound the file's target)");
  bounds->add_option("--kind", kind_text, "and or or")->capture_default_str();
  bounds->add_option("--events", events_text, "the two operands, comma separated");
  bounds->add_flag("--no-bisect", no_bisect, "exact endpoints only");

  auto* tables = app.add_subcommand("tables", "regenerate the intervals table and the P1-P6 star table");
  tables->add_option("--step", step_text, "grid step: 1/4, 1/10 or 1/20")->capture_default_str();
  tables->add_flag("--no-bisect", no_bisect, "exact endpoints only");

  auto* entails = app.add_subcommand("entails", "decide p-entailment of one event by the others");
  entails->add_option("file", file, "assessment file")->required();
  entails->add_option("--target", target, "name of the entailed event")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    CommandResult r;
    if (*check) {
      r = run_check(load_assessment_file(file));
    } else if (*book) {
      r = run_dutchbook(load_assessment_file(file));
    } else if (*bounds) {
      std::optional<Operator> op;
      Connective conn;
      try {
        if (!op_text.empty()) op = parse_operator(op_text);
        conn = parse_connective(kind_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::vector<std::string> evs;
      if (!events_text.empty()) evs = split_names(events_text);
      r = run_bounds(load_assessment_file(file), op, conn, evs, !no_bisect);
    } else if (*tables) {
      Rational step;
      try {
        step = parse_rational(step_text);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      r = run_tables(step, !no_bisect);
    } else if (*entails) {
      AssessmentFile f = load_assessment_file(file);
      try {
        f.event(target);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      r = run_entails(f, target);
    }
    std::cout << render(r.report);
    return r.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "cohkit: parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "cohkit: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "cohkit: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "cohkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cohkit: internal error: " << e.what() << "\n";
    return 3;
  }
}
