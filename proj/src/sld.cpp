#include "renlib/sld.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "renlib/unify.hpp"

namespace renlib {

Term clause_term(const Clause& k) {
  return Term::compound(":-", {k.head, Term::compound(",", k.body)});
}

Term goal_term(const Goal& g) { return Term::compound(",", g.atoms); }

std::vector<Var> vars_of(const Clause& k) {
  std::vector<Var> out = vars_of(k.head);
  for (const auto& b : k.body) collect_vars(b, out);
  return out;
}

std::vector<Var> vars_of(const Goal& g) { return vars_of(std::span<const Term>(g.atoms)); }

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Success:
      return "success";
    case Outcome::NoStep:
      return "no_step";
    case Outcome::StepLimit:
      return "step_limit";
    case Outcome::ChoicesExhausted:
      return "choices_exhausted";
  }
  return "?";
}

const Goal& Derivation::goal_at(std::size_t i) const {
  if (i > steps.size()) throw std::out_of_range("step index " + std::to_string(i) + " beyond derivation");
  return i == 0 ? query : steps[i - 1].goal_after;
}

Subst default_unifier(const Term& head, const Term& atom) { return unify_terms(head, atom); }

Standardized standardize_apart(const Clause& k, std::span<const Var> avoid, std::size_t counter) {
  std::vector<Binding> renaming;
  for (const auto& v : vars_of(k)) {
    Var fresh = Var::generated(counter++);
    while (contains(avoid, fresh)) fresh = Var::generated(counter++);
    renaming.push_back({v, Term::variable(std::move(fresh))});
  }
  const Subst s(std::move(renaming));
  return {Clause{apply(s, k.head), apply_all(s, k.body)}, counter};
}

DerivationStep resolve_step(const Goal& g, std::size_t index, const Clause& k,
                            std::span<const Var> avoid, std::size_t& counter, const Unifier& unifier) {
  if (index >= g.atoms.size()) throw std::out_of_range("selected atom index out of range");
  std::vector<Var> all_avoid(avoid.begin(), avoid.end());
  for (const auto& v : vars_of(g))
    if (!contains(all_avoid, v)) all_avoid.push_back(v);

  auto [variant, next] = standardize_apart(k, all_avoid, counter);
  Subst mgu = unifier(variant.head, g.atoms[index]);

  // H = sigma(M, B, N)
  std::vector<Term> spliced(g.atoms.begin(), g.atoms.begin() + static_cast<std::ptrdiff_t>(index));
  spliced.insert(spliced.end(), variant.body.begin(), variant.body.end());
  spliced.insert(spliced.end(), g.atoms.begin() + static_cast<std::ptrdiff_t>(index) + 1, g.atoms.end());

  Goal after{apply_all(mgu, spliced)};
  counter = next;
  return DerivationStep{g, index, 0, std::move(variant), std::move(mgu), std::move(after)};
}

namespace {

void add_step_vars(const DerivationStep& s, std::vector<Var>& out) {
  for (const auto& v : vars_of(s.input_clause))
    if (!contains(out, v)) out.push_back(v);
  for (const auto& v : vars_of_subst(s.mgu))
    if (!contains(out, v)) out.push_back(v);
  for (const auto& a : s.goal_after.atoms) collect_vars(a, out);
}

}  // namespace

Derivation derive(const Program& p, const Goal& query, const DeriveOptions& opts) {
  Derivation d;
  d.query = query;
  d.fresh_base = opts.fresh_base;
  std::size_t counter = opts.fresh_base;
  std::vector<Var> seen = vars_of(query);

  const Goal* current = &d.query;
  d.outcome = Outcome::Success;
  while (!current->empty()) {
    const std::size_t n = d.steps.size();
    if (n >= opts.max_steps) {
      d.outcome = Outcome::StepLimit;
      break;
    }

    std::optional<DerivationStep> step;
    if (opts.choices) {
      if (n >= opts.choices->size()) {
        d.outcome = Outcome::ChoicesExhausted;
        break;
      }
      const std::size_t c = (*opts.choices)[n];
      if (c == 0 || c > p.clauses.size())
        throw std::out_of_range("clause choice " + std::to_string(c) + " outside program");
      try {
        step = resolve_step(*current, 0, p.clauses[c - 1], seen, counter, opts.unifier);
        step->clause_index = c;
      } catch (const UnifyFailure&) {
      }
    } else {
      for (std::size_t c = 1; c <= p.clauses.size() && !step; ++c) {
        try {
          step = resolve_step(*current, 0, p.clauses[c - 1], seen, counter, opts.unifier);
          step->clause_index = c;
        } catch (const UnifyFailure&) {
        }
      }
    }
    if (!step) {
      d.outcome = Outcome::NoStep;
      break;
    }
    add_step_vars(*step, seen);
    d.steps.push_back(std::move(*step));
    current = &d.steps.back().goal_after;
  }
  d.next_fresh = counter;
  return d;
}

std::vector<Var> derivation_vars(const Derivation& d, std::size_t upto) {
  if (upto > d.steps.size()) throw std::out_of_range("derivation prefix beyond length");
  std::vector<Var> out = vars_of(d.query);
  for (std::size_t i = 0; i < upto; ++i) add_step_vars(d.steps[i], out);
  return out;
}

Subst partial_answer(const Derivation& d, std::size_t i) {
  if (i > d.steps.size()) throw std::out_of_range("step index beyond derivation");
  Subst acc;
  for (std::size_t k = 0; k < i; ++k) acc = compose(d.steps[k].mgu, acc);
  return acc;
}

Subst computed_answer(const Derivation& d) {
  if (!d.successful()) throw NotSuccessful();
  return restrict(partial_answer(d, d.steps.size()), vars_of(d.query));
}

Resultant resultant(const Derivation& d, std::size_t i) {
  const Subst pa = partial_answer(d, i);
  return {Goal{apply_all(pa, d.query.atoms)}, d.goal_at(i)};
}

}  // namespace renlib
