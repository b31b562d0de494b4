#pragma once

#include <span>

#include "renlib/errors.hpp"
#include "renlib/subst.hpp"
#include "renlib/term.hpp"

namespace renlib {

enum class UnifyFailureKind { Clash, OccursCheck };

class UnifyFailure : public Error {
 public:
  UnifyFailure(UnifyFailureKind kind, Equation witness);

  UnifyFailureKind kind() const { return kind_; }
  const Equation& witness() const { return witness_; }

 private:
  UnifyFailureKind kind_;
  Equation witness_;
};

/// Solved-form unification of a set of equations.
///
/// Equations are processed first-in first-out and compound arguments are
/// queued left to right. An equation x = y between distinct variables binds
/// the left one. None of the decisions look at variable names, so renaming
/// the input renames the output. The result is idempotent and uses only
/// variables of the input; its bindings are ordered by the first occurrence
/// of the bound variable in `eqs`.
///
/// Throws UnifyFailure (clash or occurs check).
Subst unify(std::span<const Equation> eqs);

Subst unify_terms(const Term& s, const Term& t);

}  // namespace renlib
