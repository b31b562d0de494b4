#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "renlib/errors.hpp"
#include "renlib/subst.hpp"
#include "renlib/term.hpp"

namespace renlib {

struct Clause {
  Term head;
  std::vector<Term> body;

  bool is_fact() const { return body.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Program {
  std::vector<Clause> clauses;
};

// A conjunction of atoms; the empty goal is the empty clause.
struct Goal {
  std::vector<Term> atoms;

  bool empty() const { return atoms.empty(); }
  friend bool operator==(const Goal&, const Goal&) = default;
};

// Term encodings used when a clause or goal has to be handled as one term,
// e.g. by pren: ':-'(head, ','(b1,...,bn)) and ','(a1,...,an).
Term clause_term(const Clause& k);
Term goal_term(const Goal& g);

std::vector<Var> vars_of(const Clause& k);
std::vector<Var> vars_of(const Goal& g);

/// One resolution step G ->{K:sigma} H.
///
/// `input_clause` is the standardized-apart variant that was actually used;
/// `clause_index` is the 1-based position of its program clause, or 0 when
/// the step was built outside `derive`.
struct DerivationStep {
  Goal goal_before;
  std::size_t selected_index = 0;
  std::size_t clause_index = 0;
  Clause input_clause;
  Subst mgu;
  Goal goal_after;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

enum class Outcome {
  Success,           // reached the empty goal
  NoStep,            // the selected atom unifies with no (or not the chosen) clause
  StepLimit,         // max_steps reached with a non-empty goal
  ChoicesExhausted,  // replay list consumed with a non-empty goal
};

const char* outcome_name(Outcome o);

struct Derivation {
  Goal query;
  std::vector<DerivationStep> steps;
  std::size_t fresh_base = 0;
  std::size_t next_fresh = 0;
  Outcome outcome = Outcome::Success;

  std::size_t length() const { return steps.size(); }
  // Goal after step i (i = 0 is the query).
  const Goal& goal_at(std::size_t i) const;
  const Goal& last_goal() const { return goal_at(steps.size()); }
  bool successful() const { return last_goal().empty(); }

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Computes the mgu of a clause head (first argument) and the selected atom.
using Unifier = std::function<Subst(const Term& head, const Term& atom)>;

Subst default_unifier(const Term& head, const Term& atom);

struct Standardized {
  Clause clause;
  std::size_t next_counter;
};

/// Replaces the variables of `k`, in order of first appearance, by `_G<n>`
/// for n = counter, counter+1, ... Names already in `avoid` are skipped.
Standardized standardize_apart(const Clause& k, std::span<const Var> avoid, std::size_t counter);

/// Resolves the atom at `index` of `g` against a fresh variant of `k`.
///
/// Advances `counter` only on success. Throws UnifyFailure when there is
/// no step, std::out_of_range for a bad index.
DerivationStep resolve_step(const Goal& g, std::size_t index, const Clause& k,
                            std::span<const Var> avoid, std::size_t& counter,
                            const Unifier& unifier = default_unifier);

struct DeriveOptions {
  // 1-based program clause indices to replay; nullopt takes the first
  // clause that applies.
  std::optional<std::vector<std::size_t>> choices;
  std::size_t max_steps = 100;
  std::size_t fresh_base = 0;
  Unifier unifier = default_unifier;
};

// Leftmost selection. Throws std::out_of_range for a choice outside the
// program.
Derivation derive(const Program& p, const Goal& query, const DeriveOptions& opts = {});

// vars of the query and of the first `upto` steps (goals, mgus, input
// clauses).
std::vector<Var> derivation_vars(const Derivation& d, std::size_t upto);

class NotSuccessful : public Error {
 public:
  NotSuccessful() : Error("derivation did not reach the empty goal") {}
};

// sigma_i o ... o sigma_1; i = 0 gives the identity.
Subst partial_answer(const Derivation& d, std::size_t i);

// Final partial answer restricted to the query variables. Throws
// NotSuccessful.
Subst computed_answer(const Derivation& d);

struct Resultant {
  Goal instantiated_query;
  Goal current;

  friend bool operator==(const Resultant&, const Resultant&) = default;
};

Resultant resultant(const Derivation& d, std::size_t i);

}  // namespace renlib
