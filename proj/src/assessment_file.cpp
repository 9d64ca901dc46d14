#include "cohkit/assessment_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cohkit {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Line {
  std::string_view text;
  std::size_t number;

  [[noreturn]] void fail(const std::string& msg, std::size_t column) const {
    throw ParseError("line " + std::to_string(number) + ", column " + std::to_string(column) + ": " + msg, number,
                     column);
  }

  std::size_t column_of(std::string_view part) const {
    return static_cast<std::size_t>(part.data() - text.data()) + 1;
  }

  // Parse a formula or conditional event, rebasing errors onto this line.
  template <class F>
  auto parse(std::string_view part, F&& f) const {
    try {
      return f(part);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (auto at = msg.rfind(" at column "); at != std::string::npos) msg.resize(at);
      fail(msg, column_of(part) + e.column() - 1);
    }
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {s.substr(0, i), trim(s.substr(i))};
}

// "<lhs> = <rhs>", splitting at the first '='
std::pair<std::string_view, std::string_view> split_eq(const Line& line, std::string_view s) {
  auto eq = s.find('=');
  if (eq == std::string_view::npos) line.fail("expected '='", line.column_of(s) + s.size());
  return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
}

}  // namespace

Universe AssessmentFile::universe() const { return Universe(atoms, constraints); }

const AssessmentFile::Event& AssessmentFile::event(std::string_view name) const {
  for (const auto& e : events)
    if (e.name == name) return e;
  throw std::invalid_argument("unknown event '" + std::string(name) + "'");
}

std::vector<const AssessmentFile::Event*> AssessmentFile::assessed() const {
  std::vector<const Event*> out;
  for (const auto& e : events)
    if (values.count(e.name)) out.push_back(&e);
  return out;
}

Assessment AssessmentFile::assessment(const Universe& u) const {
  Assessment a;
  for (const Event* e : assessed()) a.add(indicator(e->ce, u, e->name), values.at(e->name));
  return a;
}

AssessmentFile parse_assessment_file(std::string_view text) {
  AssessmentFile f;
  std::optional<Universe> decl;  // atoms only, used to validate formulas
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{raw, number};
    std::string_view body = raw;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (trim(body).empty()) continue;
    auto [kw, rest] = split_word(body);

    auto need_atoms = [&] {
      if (!decl) {
        if (f.atoms.empty()) line.fail("declare atoms first", line.column_of(kw));
        try {
          decl.emplace(f.atoms);
        } catch (const std::exception& e) {
          line.fail(e.what(), 1);
        }
      }
      return &*decl;
    };

    if (kw == "atoms") {
      if (decl) line.fail("atoms must be declared before they are used", line.column_of(kw));
      std::string_view r = rest;
      while (!r.empty()) {
        auto [name, tail] = split_word(r);
        if (!is_identifier(name) || name == "TRUE" || name == "FALSE" || name == "given")
          line.fail("bad atom name '" + std::string(name) + "'", line.column_of(name));
        for (const auto& a : f.atoms)
          if (a == name) line.fail("duplicate atom '" + std::string(name) + "'", line.column_of(name));
        f.atoms.emplace_back(name);
        r = tail;
      }
      if (f.atoms.size() > Universe::kMaxAtoms) line.fail("too many atoms", line.column_of(kw));
    } else if (kw == "constraint") {
      const Universe* u = need_atoms();
      auto eq = rest.rfind('=');
      if (eq == std::string_view::npos) line.fail("expected '= FALSE' or '= TRUE'", line.column_of(rest));
      std::string_view lhs = trim(rest.substr(0, eq)), rhs = trim(rest.substr(eq + 1));
      bool certain;
      if (rhs == "TRUE") certain = true;
      else if (rhs == "FALSE") certain = false;
      else line.fail("expected TRUE or FALSE", line.column_of(rhs.empty() ? rest.substr(eq) : rhs));
      Formula fm = line.parse(lhs, [&](std::string_view s) { return parse_formula(s, u); });
      f.constraints.push_back({fm, certain});
    } else if (kw == "event") {
      const Universe* u = need_atoms();
      auto [name, def] = split_eq(line, rest);
      if (!is_identifier(name)) line.fail("bad event name '" + std::string(name) + "'", line.column_of(name));
      for (const auto& e : f.events)
        if (e.name == name) line.fail("duplicate event '" + std::string(name) + "'", line.column_of(name));
      ConditionalEvent ce = line.parse(def, [&](std::string_view s) { return parse_conditional(s, u); });
      f.events.push_back({std::string(name), ce, number});
    } else if (kw == "assess") {
      auto [name, val] = split_eq(line, rest);
      bool known = false;
      for (const auto& e : f.events) known = known || e.name == name;
      if (!known) line.fail("unknown event '" + std::string(name) + "'", line.column_of(name));
      if (f.values.count(std::string(name)))
        line.fail("event '" + std::string(name) + "' assessed twice", line.column_of(name));
      try {
        f.values[std::string(name)] = parse_rational(val);
      } catch (const std::exception& e) {
        line.fail(e.what(), line.column_of(val));
      }
    } else if (kw == "target") {
      const Universe* u = need_atoms();
      if (f.target) line.fail("more than one target", line.column_of(kw));
      f.target_text = std::string(rest);
      for (const auto& e : f.events)
        if (e.name == rest) f.target = e.ce;
      if (!f.target) f.target = line.parse(rest, [&](std::string_view s) { return parse_conditional(s, u); });
    } else {
      line.fail("unknown statement '" + std::string(kw) + "'", line.column_of(kw));
    }
  }
  if (f.atoms.empty()) throw ParseError("no atoms declared", std::max<std::size_t>(number, 1), 1);
  return f;
}

AssessmentFile load_assessment_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_assessment_file(ss.str());
}

}  // namespace cohkit
