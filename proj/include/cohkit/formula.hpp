#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class Formula {
 public:
  enum class Op { Top, Bottom, Atom, Not, And, Or };

  Formula();  // TOP
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  friend Formula operator~(const Formula& f);
  friend Formula operator&(const Formula& a, const Formula& b);
  friend Formula operator|(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b);  // structural

  std::string str() const;
  void collect_atoms(std::vector<std::string>& out) const;

 private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Formula> lhs, rhs;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, bool>;

bool eval_formula(const Formula& f, const Assignment& w);

// A set of worlds, indexed by the bitmask of true atoms.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t space) : bits_((space + 63) / 64, 0), space_(space) {}

  std::size_t space() const { return space_; }
  bool test(std::size_t w) const { return (bits_[w >> 6] >> (w & 63)) & 1u; }
  void set(std::size_t w) { bits_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  void reset(std::size_t w) { bits_[w >> 6] &= ~(std::uint64_t{1} << (w & 63)); }
  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  std::vector<std::size_t> members() const;

  WorldSet& operator&=(const WorldSet& o);
  WorldSet& operator|=(const WorldSet& o);
  WorldSet operator~() const;
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend bool operator==(const WorldSet& a, const WorldSet& b) = default;

  // subset test
  bool within(const WorldSet& o) const;

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t space_ = 0;
};

struct Constraint {
  Formula formula;
  bool certain = false;  // false: formula = FALSE, true: formula = TRUE
};

class Universe {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  explicit Universe(std::vector<std::string> atoms, std::vector<Constraint> constraints = {});

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool has_atom(std::string_view name) const;
  std::size_t atom_index(std::string_view name) const;
  std::size_t space() const { return std::size_t{1} << atoms_.size(); }

  // admissible worlds, i.e. the ones satisfying every constraint
  const WorldSet& worlds() const { return worlds_; }
  // admissible worlds on which f holds
  WorldSet extension(const Formula& f) const;
  bool satisfiable(const Formula& f) const { return extension(f).any(); }
  bool holds(const Formula& f, std::size_t world) const;

  Assignment assignment(std::size_t world) const;
  std::string describe(std::size_t world) const;  // e.g. "A ~B H K"

 private:
  WorldSet raw_extension(const Formula& f) const;

  std::vector<std::string> atoms_;
  std::vector<Constraint> constraints_;
  std::map<std::string, std::size_t, std::less<>> index_;
  WorldSet worlds_;
};

bool implies(const Formula& f, const Formula& g, const Universe& u);
bool equivalent(const Formula& f, const Formula& g, const Universe& u);

// Precedence ~ > & > |. With a universe, atoms must be declared there.
Formula parse_formula(std::string_view text, const Universe* u = nullptr);

}  // namespace cohkit
