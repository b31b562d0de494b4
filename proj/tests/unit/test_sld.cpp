#include <gtest/gtest.h>

#include "testkit.hpp"

using namespace renlib;
using namespace renlib::testkit;

namespace {

Term gt(std::string_view text) { return parse_term(text, {VarStyle::Prolog, true, "<t>"}); }
Goal gg(std::string_view text) { return parse_goal(text, {VarStyle::Prolog, true, "<t>"}); }
Subst gs(std::string_view text) { return parse_subst(text, {VarStyle::Prolog, true, "<t>"}); }

Derivation son_derivation(std::vector<std::size_t> choices) {
  DeriveOptions o;
  o.choices = std::move(choices);
  return derive(pp(kSonProgram), pg("son(A)"), o);
}

}  // namespace

TEST(Encodings, ClauseAndGoalTerms) {
  const Clause k = pc("son(X) :- male(X), child(X,A)");
  EXPECT_EQ(clause_term(k), Term::compound(":-", {pt("son(X)"), Term::compound(",", {pt("male(X)"), pt("child(X,A)")})}));
  EXPECT_EQ(goal_term(pg("p(X), q(Y)")), Term::compound(",", {pt("p(X)"), pt("q(Y)")}));
  EXPECT_EQ(vars_of(k), (std::vector<Var>{Var("X"), Var("A")}));
  EXPECT_TRUE(pc("male(c)").is_fact());
}

TEST(StandardizeApart, Examples) {
  auto [k, next] = standardize_apart(pc("son(X) :- male(X), child(X,A)"), {}, 0);
  EXPECT_EQ(k, parse_clause("son(_G0) :- male(_G0), child(_G0,_G1)", {VarStyle::Prolog, true, "<t>"}));
  EXPECT_EQ(next, 2u);

  auto [fact, n2] = standardize_apart(pc("male(c)"), {}, 5);
  EXPECT_EQ(fact, pc("male(c)"));
  EXPECT_EQ(n2, 5u);

  auto [nat, n3] = standardize_apart(pc("nat(s(A)) :- nat(A)"), {}, 7);
  EXPECT_EQ(nat, parse_clause("nat(s(_G7)) :- nat(_G7)", {VarStyle::Prolog, true, "<t>"}));
  EXPECT_EQ(n3, 8u);
}

TEST(StandardizeApart, SkipsAvoidedNames) {
  const std::vector<Var> avoid{Var("_G0"), Var("_G2")};
  auto [k, next] = standardize_apart(pc("p(X,Y)"), avoid, 0);
  EXPECT_EQ(k.head, gt("p(_G1,_G3)"));
  EXPECT_EQ(next, 4u);
}

TEST(ResolveStep, SonExample) {
  std::size_t counter = 0;
  const DerivationStep s = resolve_step(pg("son(A)"), 0, pc("son(X) :- male(X), child(X,A1)"), {}, counter);
  EXPECT_EQ(s.mgu, gs("(_G0/A)"));
  EXPECT_EQ(s.goal_after, gg("male(A), child(A,_G1)"));
  EXPECT_EQ(counter, 2u);
}

TEST(ResolveStep, NatLocalVariable) {
  std::size_t counter = 0;
  const DerivationStep s = resolve_step(pg("nat(X)"), 0, pc("nat(s(A)) :- nat(A)"), {}, counter);
  EXPECT_EQ(s.goal_after, gg("nat(_G0)"));
  EXPECT_EQ(s.mgu, gs("(X/s(_G0))"));
}

TEST(ResolveStep, FactAndFailure) {
  std::size_t counter = 3;
  const DerivationStep s = resolve_step(pg("male(d)"), 0, pc("male(d)"), {}, counter);
  EXPECT_TRUE(s.goal_after.empty());
  EXPECT_EQ(s.mgu, Subst{});
  EXPECT_THROW(resolve_step(pg("male(d)"), 0, pc("male(c)"), {}, counter), UnifyFailure);
  EXPECT_EQ(counter, 3u);
  EXPECT_THROW(resolve_step(pg("male(d)"), 1, pc("male(d)"), {}, counter), std::out_of_range);
}

TEST(ResolveStep, SplicesBodyInPlace) {
  std::size_t counter = 0;
  const DerivationStep s = resolve_step(pg("a(X), b(X), c(X)"), 1, pc("b(Y) :- d(Y), e(Y)"), {}, counter);
  EXPECT_EQ(s.goal_after, gg("a(X), d(X), e(X), c(X)"));
  // recheckable from the stored fields
  std::vector<Term> spliced{s.goal_before.atoms[0]};
  spliced.insert(spliced.end(), s.input_clause.body.begin(), s.input_clause.body.end());
  spliced.push_back(s.goal_before.atoms[2]);
  EXPECT_EQ(s.goal_after.atoms, apply_all(s.mgu, spliced));
}

TEST(Derive, SonTwoSteps) {
  const Derivation d = son_derivation({1, 3});
  ASSERT_EQ(d.length(), 2u);
  EXPECT_EQ(d.last_goal(), gg("child(d,_G1)"));
  EXPECT_EQ(d.outcome, Outcome::ChoicesExhausted);
  EXPECT_EQ(d.steps[0].clause_index, 1u);
  EXPECT_EQ(d.steps[1].mgu, gs("(A/d)"));
}

TEST(Derive, EmptyQueryAndSingleFact) {
  const Derivation d0 = derive(pp(kSonProgram), Goal{});
  EXPECT_EQ(d0.length(), 0u);
  EXPECT_TRUE(d0.successful());

  DeriveOptions o;
  o.choices = std::vector<std::size_t>{2};
  const Derivation d = derive(pp(kSonProgram), pg("male(c)"), o);
  ASSERT_EQ(d.length(), 1u);
  EXPECT_TRUE(d.successful());
  EXPECT_EQ(d.outcome, Outcome::Success);
  EXPECT_EQ(d.steps[0].mgu, Subst{});
}

TEST(Derive, Outcomes) {
  const Program p = pp(kSonProgram);
  EXPECT_EQ(derive(p, pg("male(e)")).outcome, Outcome::NoStep);

  DeriveOptions wrong;
  wrong.choices = std::vector<std::size_t>{3};
  EXPECT_EQ(derive(p, pg("male(c)"), wrong).outcome, Outcome::NoStep);

  DeriveOptions bad;
  bad.choices = std::vector<std::size_t>{9};
  EXPECT_THROW(derive(p, pg("male(c)"), bad), std::out_of_range);

  DeriveOptions limit;
  limit.max_steps = 5;
  const Derivation loop = derive(pp("p(X) :- p(X)."), pg("p(a)"), limit);
  EXPECT_EQ(loop.outcome, Outcome::StepLimit);
  EXPECT_EQ(loop.length(), 5u);
}

TEST(Derive, FirstApplicableClause) {
  const Derivation d = derive(pp(kSonProgram), pg("son(A)"));
  // son -> male(A) picks male(c), then child(c,_) has no clause
  ASSERT_EQ(d.length(), 2u);
  EXPECT_EQ(d.steps[1].clause_index, 2u);
  EXPECT_EQ(d.outcome, Outcome::NoStep);
}

TEST(Derive, ReplayIsDeterministic) {
  EXPECT_EQ(son_derivation({1, 3, 4}), son_derivation({1, 3, 4}));
}

TEST(Derive, StandardizationApartInvariant) {
  Gen g(51);
  for (int i = 0; i < 200; ++i) {
    const RandomCase c = random_case(g, default_unifier);
    DeriveOptions o;
    o.choices = c.choices;
    const Derivation d = derive(c.program, c.query, o);
    for (std::size_t k = 0; k < d.length(); ++k) {
      const auto before = derivation_vars(d, k);
      for (const auto& v : vars_of(d.steps[k].input_clause)) EXPECT_FALSE(contains(before, v));
      EXPECT_TRUE(is_idempotent(d.steps[k].mgu));
      std::vector<Var> unified = vars_of(d.steps[k].goal_before.atoms[0]);
      collect_vars(d.steps[k].input_clause.head, unified);
      for (const auto& v : vars_of_subst(d.steps[k].mgu)) EXPECT_TRUE(contains(unified, v));
    }
  }
}

TEST(Answers, PartialAndComputed) {
  const Derivation d = son_derivation({1, 3});
  EXPECT_EQ(partial_answer(d, 0), Subst{});
  const Subst pa = partial_answer(d, 2);
  // hand composition of (A/d) after (_G0/A)
  EXPECT_EQ(image_of(pa, Var("A")), pt("d"));
  EXPECT_EQ(image_of(pa, Var("_G0")), pt("d"));
  EXPECT_TRUE(composes_to(d.steps[1].mgu, d.steps[0].mgu, pa, {Var("A"), Var("_G0"), Var("_G1")}));
  EXPECT_THROW(partial_answer(d, 3), std::out_of_range);
  EXPECT_THROW(computed_answer(d), NotSuccessful);

  const Derivation full = son_derivation({1, 3, 4});
  ASSERT_TRUE(full.successful());
  EXPECT_EQ(computed_answer(full), gs("(A/d)"));

  DeriveOptions o;
  o.choices = std::vector<std::size_t>{2};
  const Derivation fact = derive(pp(kSonProgram), pg("male(c)"), o);
  EXPECT_EQ(partial_answer(fact, 1), fact.steps[0].mgu);
  EXPECT_EQ(computed_answer(fact), Subst{});
  EXPECT_EQ(computed_answer(derive(pp(kSonProgram), Goal{})), Subst{});
}

TEST(Answers, Resultants) {
  const Derivation d = son_derivation({1, 3, 4});
  EXPECT_EQ(resultant(d, 0), (Resultant{pg("son(A)"), pg("son(A)")}));
  EXPECT_EQ(resultant(d, 1), (Resultant{pg("son(A)"), gg("male(A), child(A,_G1)")}));
  EXPECT_EQ(resultant(d, 3), (Resultant{pg("son(d)"), Goal{}}));
  EXPECT_THROW(resultant(d, 4), std::out_of_range);
}
