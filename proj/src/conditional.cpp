#include "cohkit/conditional.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace cohkit {

const char* to_string(TriValue v) {
  switch (v) {
    case TriValue::True: return "true";
    case TriValue::False: return "false";
    case TriValue::Void: return "void";
  }
  return "?";
}

std::string ConditionalEvent::str() const {
  if (antecedent.op() == Formula::Op::Top) {
    // keep a bare disjunction from reading as a conditional
    if (consequent.op() == Formula::Op::Or) return "(" + consequent.str() + ")";
    return consequent.str();
  }
  return "(" + consequent.str() + ") given (" + antecedent.str() + ")";
}

WorldSet true_set(const ConditionalEvent& ce, const Universe& u) {
  return u.extension(ce.consequent & ce.antecedent);
}

WorldSet false_set(const ConditionalEvent& ce, const Universe& u) {
  return u.extension(~ce.consequent & ce.antecedent);
}

WorldSet void_set(const ConditionalEvent& ce, const Universe& u) {
  return u.extension(~ce.antecedent);
}

TriValue eval_conditional(const ConditionalEvent& ce, const Assignment& w) {
  if (!eval_formula(ce.antecedent, w)) return TriValue::Void;
  return eval_formula(ce.consequent, w) ? TriValue::True : TriValue::False;
}

TriValue eval_conditional(const ConditionalEvent& ce, const Universe& u, std::size_t world) {
  if (!u.holds(ce.antecedent, world)) return TriValue::Void;
  return u.holds(ce.consequent, world) ? TriValue::True : TriValue::False;
}

namespace {

// Position of the split and the length of the separator, or npos.
std::pair<std::size_t, std::size_t> find_split(std::string_view text) {
  int depth = 0;
  std::size_t bar = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && c == '|') bar = i;
    else if (depth == 0 && std::isalpha(static_cast<unsigned char>(c)) &&
             (i == 0 || !(std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_'))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      if (text.substr(i, j - i) == "given") return {i, 5};
      i = j - 1;
    }
  }
  if (bar != std::string_view::npos) return {bar, 1};
  return {std::string_view::npos, 0};
}

Formula parse_part(std::string_view text, std::size_t offset, const Universe* u) {
  try {
    return parse_formula(text, u);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    auto at = msg.rfind(" at column ");
    if (at != std::string::npos) msg.resize(at);
    std::size_t col = e.column() + offset;
    throw ParseError(msg + " at column " + std::to_string(col), 1, col);
  }
}

}  // namespace

ConditionalEvent parse_conditional(std::string_view text, const Universe* u) {
  auto [pos, len] = find_split(text);
  if (pos == std::string_view::npos) return {parse_part(text, 0, u), Formula::top()};
  return {parse_part(text.substr(0, pos), 0, u),
          parse_part(text.substr(pos + len), pos + len, u)};
}

const Constituent* ConstituentTable::c0() const {
  for (const auto& r : rows)
    if (r.is_c0) return &r;
  return nullptr;
}

const Constituent* ConstituentTable::find(const std::vector<TriValue>& choice) const {
  for (const auto& r : rows)
    if (r.choice == choice) return &r;
  return nullptr;
}

ConstituentTable enumerate_constituents(const std::vector<ConditionalEvent>& family,
                                        const Universe& u) {
  std::vector<WorldSet> ts, fs;
  for (const auto& ce : family) {
    if (!u.satisfiable(ce.antecedent))
      throw std::invalid_argument("empty conditioning event: " + ce.antecedent.str());
    ts.push_back(true_set(ce, u));
    fs.push_back(false_set(ce, u));
  }
  // TriValue's declaration order is the required lexicographic order
  std::map<std::vector<TriValue>, WorldSet> groups;
  for (std::size_t w : u.worlds().members()) {
    std::vector<TriValue> key(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
      key[i] = ts[i].test(w) ? TriValue::True : fs[i].test(w) ? TriValue::False : TriValue::Void;
    auto [it, fresh] = groups.try_emplace(std::move(key), u.space());
    it->second.set(w);
  }
  ConstituentTable table;
  std::size_t h = 1;
  for (auto& [choice, worlds] : groups) {
    bool c0 = true;
    for (auto v : choice) c0 = c0 && v == TriValue::Void;
    table.rows.push_back({c0 ? 0 : h++, choice, worlds, c0});
  }
  return table;
}

}  // namespace cohkit
