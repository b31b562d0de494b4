#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "renlib/errors.hpp"
#include "renlib/term.hpp"

namespace renlib {

struct Binding {
  Var var;
  Term image;

  bool passive() const { return image.is_var() && image.var() == var; }

  friend bool operator==(const Binding&, const Binding&) = default;
};

/// A substitution in relaxed core representation.
///
/// The binding list keeps the order it was built with. Left-hand variables
/// are pairwise distinct; passive pairs x/x are allowed and mark x as part
/// of the relaxed core without moving it. Every variable not listed maps to
/// itself.
///
/// `operator==` compares representations. Use `pointwise_equal` to compare
/// substitutions as functions.
class Subst {
 public:
  Subst() = default;
  // Throws DuplicateBinding if a variable is bound twice.
  explicit Subst(std::vector<Binding> bindings);
  Subst(std::initializer_list<Binding> bindings)
      : Subst(std::vector<Binding>(bindings)) {}

  std::span<const Binding> bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  // nullptr when v is outside the relaxed core.
  const Term* find(const Var& v) const;
  Term image(const Var& v) const;
  bool binds(const Var& v) const { return find(v) != nullptr; }

  friend bool operator==(const Subst&, const Subst&) = default;

 private:
  std::vector<Binding> bindings_;
};

class DuplicateBinding : public Error {
 public:
  explicit DuplicateBinding(Var v);
  const Var& witness() const { return witness_; }

 private:
  Var witness_;
};

// c+(a) and c+(b) share a variable, so the sum is undefined.
class OverlappingCores : public Error {
 public:
  explicit OverlappingCores(Var v);
  const Var& witness() const { return witness_; }

 private:
  Var witness_;
};

Term apply(const Subst& s, const Term& t);
std::vector<Term> apply_all(const Subst& s, std::span<const Term> ts);

// Active domain: {x | s(x) != x}, in binding order.
std::vector<Var> core(const Subst& s);
// Every left-hand variable, passive ones included.
std::vector<Var> relaxed_core(const Subst& s);
std::vector<Term> active_range(const Subst& s);
std::vector<Term> relaxed_range(const Subst& s);
// Dom(s) united with vars(Range(s)) -- ignores passive pairs.
std::vector<Var> vars_of_subst(const Subst& s);
// c+(s) united with vars(r+(s)).
std::vector<Var> relaxed_vars(const Subst& s);

Subst unrelax(const Subst& s);

// Behaves as s on `w` and as the identity elsewhere; passive pairs on `w`
// are kept.
Subst restrict(const Subst& s, std::span<const Var> w);

// Adds passive pairs for the variables of `w` outside c+(s).
Subst relax(const Subst& s, std::span<const Var> w);

/// (outer o inner)(x) = outer(inner(x)).
///
/// The result is in unrelaxed core representation: bindings for c+(inner)
/// first, then for c+(outer) minus c+(inner), with passive pairs dropped.
Subst compose(const Subst& outer, const Subst& inner);

Subst power(const Subst& s, std::size_t n);

bool is_idempotent(const Subst& s);

// Concatenation of the binding lists. Throws OverlappingCores.
Subst sum(const Subst& a, const Subst& b);

// vars(t) is a subset of c+(s).
bool is_complete_for(const Subst& s, const Term& t);
bool is_complete_for(const Subst& s, std::span<const Term> ts);

// Equality as functions on the whole variable set.
bool pointwise_equal(const Subst& a, const Subst& b);

}  // namespace renlib
