#include "cohkit/formula.hpp"

#include <bit>
#include <cctype>

namespace cohkit {

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto n = std::make_shared<const Node>(Node{Op::Top, {}, nullptr, nullptr});
  return Formula(n);
}

Formula Formula::bottom() {
  static const auto n = std::make_shared<const Node>(Node{Op::Bottom, {}, nullptr, nullptr});
  return Formula(n);
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), nullptr, nullptr}));
}

Formula operator~(const Formula& f) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Op::Not, {}, std::make_shared<const Formula>(f), nullptr}));
}

Formula operator&(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{
      Formula::Op::And, {}, std::make_shared<const Formula>(a), std::make_shared<const Formula>(b)}));
}

Formula operator|(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{
      Formula::Op::Or, {}, std::make_shared<const Formula>(a), std::make_shared<const Formula>(b)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Formula::Op::Top:
    case Formula::Op::Bottom: return true;
    case Formula::Op::Atom: return a.name() == b.name();
    case Formula::Op::Not: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::string Formula::str() const {
  switch (op()) {
    case Op::Top: return "TRUE";
    case Op::Bottom: return "FALSE";
    case Op::Atom: return name();
    case Op::Not: {
      const auto& c = lhs();
      bool simple = c.op() == Op::Atom || c.op() == Op::Top || c.op() == Op::Bottom || c.op() == Op::Not;
      return simple ? "~" + c.str() : "~(" + c.str() + ")";
    }
    case Op::And: {
      auto side = [](const Formula& f) { return f.op() == Op::Or ? "(" + f.str() + ")" : f.str(); };
      return side(lhs()) + " & " + side(rhs());
    }
    case Op::Or: return lhs().str() + " | " + rhs().str();
  }
  return {};
}

void Formula::collect_atoms(std::vector<std::string>& out) const {
  switch (op()) {
    case Op::Atom: out.push_back(name()); break;
    case Op::Not: lhs().collect_atoms(out); break;
    case Op::And:
    case Op::Or:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
      break;
    default: break;
  }
}

bool eval_formula(const Formula& f, const Assignment& w) {
  switch (f.op()) {
    case Formula::Op::Top: return true;
    case Formula::Op::Bottom: return false;
    case Formula::Op::Atom: {
      auto it = w.find(f.name());
      if (it == w.end()) throw std::invalid_argument("unknown atom '" + f.name() + "'");
      return it->second;
    }
    case Formula::Op::Not: return !eval_formula(f.lhs(), w);
    case Formula::Op::And: return eval_formula(f.lhs(), w) && eval_formula(f.rhs(), w);
    case Formula::Op::Or: return eval_formula(f.lhs(), w) || eval_formula(f.rhs(), w);
  }
  return false;
}

// WorldSet ------------------------------------------------------------------

bool WorldSet::any() const {
  for (auto b : bits_)
    if (b) return true;
  return false;
}

std::size_t WorldSet::count() const {
  std::size_t n = 0;
  for (auto b : bits_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::vector<std::size_t> WorldSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    auto b = bits_[i];
    while (b) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }
  return out;
}

WorldSet& WorldSet::operator&=(const WorldSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

WorldSet WorldSet::operator~() const {
  WorldSet r = *this;
  for (auto& b : r.bits_) b = ~b;
  if (space_ % 64) r.bits_.back() &= (std::uint64_t{1} << (space_ % 64)) - 1;
  return r;
}

bool WorldSet::within(const WorldSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

// Universe ------------------------------------------------------------------

Universe::Universe(std::vector<std::string> atoms, std::vector<Constraint> constraints)
    : atoms_(std::move(atoms)), constraints_(std::move(constraints)) {
  if (atoms_.size() > kMaxAtoms)
    throw std::invalid_argument("at most " + std::to_string(kMaxAtoms) + " atoms are supported");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!index_.emplace(atoms_[i], i).second)
      throw std::invalid_argument("duplicate atom '" + atoms_[i] + "'");
  }
  worlds_ = ~WorldSet(space());
  for (const auto& c : constraints_) {
    WorldSet e = raw_extension(c.formula);
    worlds_ &= c.certain ? e : ~e;
  }
  if (worlds_.none()) throw std::invalid_argument("constraints leave no possible world");
}

bool Universe::has_atom(std::string_view name) const { return index_.find(name) != index_.end(); }

std::size_t Universe::atom_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown atom '" + std::string(name) + "'");
  return it->second;
}

WorldSet Universe::raw_extension(const Formula& f) const {
  switch (f.op()) {
    case Formula::Op::Top: return ~WorldSet(space());
    case Formula::Op::Bottom: return WorldSet(space());
    case Formula::Op::Atom: {
      std::size_t bit = atom_index(f.name());
      WorldSet s(space());
      for (std::size_t w = 0; w < space(); ++w)
        if ((w >> bit) & 1u) s.set(w);
      return s;
    }
    case Formula::Op::Not: return ~raw_extension(f.lhs());
    case Formula::Op::And: return raw_extension(f.lhs()) & raw_extension(f.rhs());
    case Formula::Op::Or: return raw_extension(f.lhs()) | raw_extension(f.rhs());
  }
  return WorldSet(space());
}

WorldSet Universe::extension(const Formula& f) const { return raw_extension(f) & worlds_; }

bool Universe::holds(const Formula& f, std::size_t world) const {
  switch (f.op()) {
    case Formula::Op::Top: return true;
    case Formula::Op::Bottom: return false;
    case Formula::Op::Atom: return (world >> atom_index(f.name())) & 1u;
    case Formula::Op::Not: return !holds(f.lhs(), world);
    case Formula::Op::And: return holds(f.lhs(), world) && holds(f.rhs(), world);
    case Formula::Op::Or: return holds(f.lhs(), world) || holds(f.rhs(), world);
  }
  return false;
}

Assignment Universe::assignment(std::size_t world) const {
  Assignment a;
  for (std::size_t i = 0; i < atoms_.size(); ++i) a[atoms_[i]] = (world >> i) & 1u;
  return a;
}

std::string Universe::describe(std::size_t world) const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (!((world >> i) & 1u)) out += '~';
    out += atoms_[i];
  }
  return out;
}

bool implies(const Formula& f, const Formula& g, const Universe& u) {
  return u.extension(f).within(u.extension(g));
}

bool equivalent(const Formula& f, const Formula& g, const Universe& u) {
  return u.extension(f) == u.extension(g);
}

// Parser --------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Universe* u) : text_(text), u_(u) {}

  Formula run() {
    skip();
    if (pos_ == text_.size()) fail("empty formula");
    Formula f = parse_or();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), 1, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept('|')) f = f | parse_and();
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept('&')) f = f & parse_unary();
    return f;
  }

  Formula parse_unary() {
    if (accept('~')) return ~parse_unary();
    return parse_primary();
  }

  Formula parse_primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') fail("empty parentheses");
      Formula f = parse_or();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string id(text_.substr(start, pos_ - start));
      if (id == "TRUE") return Formula::top();
      if (id == "FALSE") return Formula::bottom();
      if (id == "given") {
        pos_ = start;
        fail("'given' is reserved");
      }
      if (u_ && !u_->has_atom(id)) {
        pos_ = start;
        fail("undeclared atom '" + id + "'");
      }
      return Formula::atom(id);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Universe* u_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Universe* u) { return Parser(text, u).run(); }

}  // namespace cohkit
