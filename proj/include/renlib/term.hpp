#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace renlib {

// Prefix reserved for variables introduced by standardization-apart.
inline constexpr std::string_view kGeneratedPrefix = "_G";

bool is_generated_name(std::string_view name);

/// A variable, identified by its name text.
///
/// Two variables are equal iff their names are equal. Names beginning with
/// `_G` followed by digits are reserved for generated (standardized-apart)
/// variables; use `Var::generated` to create them.
class Var {
 public:
  explicit Var(std::string name);

  static Var generated(std::size_t index);

  const std::string& name() const { return name_; }
  bool is_generated() const { return generated_; }

  friend bool operator==(const Var& a, const Var& b) { return a.name_ == b.name_; }
  friend auto operator<=>(const Var& a, const Var& b) { return a.name_ <=> b.name_; }

 private:
  std::string name_;
  bool generated_;
};

/// Immutable first-order term: a variable or a compound f(t1,...,tn).
///
/// Constants are 0-ary compounds. Subterms are shared, so copying a Term is
/// cheap and values can be handed between threads freely.
class Term {
 public:
  static Term variable(Var v);
  static Term variable(std::string name) { return variable(Var(std::move(name))); }
  static Term compound(std::string functor, std::vector<Term> args);
  static Term constant(std::string name) { return compound(std::move(name), {}); }

  // '[]' and '.'(h,t).
  static Term nil();
  static Term cons(Term head, Term tail);
  static Term list(std::vector<Term> items, Term tail = nil());

  bool is_var() const;
  bool is_compound() const { return !is_var(); }

  // Precondition: is_var().
  const Var& var() const;
  // Precondition: is_compound().
  const std::string& functor() const;
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }

  bool same_shape(const Term& other) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline constexpr std::string_view kNilFunctor = "[]";
inline constexpr std::string_view kConsFunctor = ".";

/// An equation s = t, the unit of work for pren and unification.
struct Equation {
  Term left;
  Term right;

  friend bool operator==(const Equation&, const Equation&) = default;
};

// Variables of t in order of first occurrence, without duplicates.
std::vector<Var> vars_of(const Term& t);
std::vector<Var> vars_of(std::span<const Term> ts);

// Appends the variables of t not already in `out`.
void collect_vars(const Term& t, std::vector<Var>& out);

bool contains_var(const Term& t, const Var& v);

// s == t or s occurs in some argument of t.
bool occurs_in(const Term& s, const Term& t);

bool var_disjoint(const Term& s, const Term& t);

bool contains(std::span<const Var> vars, const Var& v);

}  // namespace renlib
