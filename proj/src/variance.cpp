#include "renlib/variance.hpp"

#include <algorithm>
#include <utility>

#include "renlib/io.hpp"

namespace renlib {

bool SimilarityReport::similar() const { return reason().empty(); }

std::string SimilarityReport::reason() const {
  if (!queries_variant) return "queries are not variants";
  if (!same_length) return "derivations differ in length";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!steps[i].same_position) return "step " + std::to_string(i + 1) + ": selected positions differ";
    if (!steps[i].clauses_variant) return "step " + std::to_string(i + 1) + ": input clauses are not variants";
  }
  return {};
}

bool are_variants(const Term& s, const Term& t) {
  try {
    pren(s, t);
    pren(t, s);
    return true;
  } catch (const PrenFailure&) {
    return false;
  }
}

SimilarityReport check_similar(const Derivation& d, const Derivation& d2) {
  SimilarityReport r;
  r.queries_variant = are_variants(goal_term(d.query), goal_term(d2.query));
  r.same_length = d.length() == d2.length();
  const std::size_t n = std::min(d.length(), d2.length());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = d.steps[i];
    const auto& b = d2.steps[i];
    r.steps.push_back({a.selected_index == b.selected_index,
                       are_variants(clause_term(a.input_clause), clause_term(b.input_clause))});
  }
  return r;
}

ExtensionUndefined::ExtensionUndefined(Var witness, Side side)
    : Error("extension undefined: " + witness.name() + " already in the " +
            (side == Side::Core ? "core" : "range")),
      witness_(std::move(witness)),
      side_(side) {}

VerificationFailed::VerificationFailed(std::size_t step, std::string equality, std::string witness)
    : Error("verification failed at step " + std::to_string(step) + ": " + equality + " (" + witness + ")"),
      step_(step),
      equality_(std::move(equality)),
      witness_(std::move(witness)) {}

bool StepCheck::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

const Verdict* StepCheck::find(std::string_view name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

namespace {

// First element of `xs` missing from `within`.
std::optional<Var> first_outside(std::span<const Var> xs, std::span<const Var> within) {
  for (const auto& x : xs)
    if (!contains(within, x)) return x;
  return std::nullopt;
}

Verdict inclusion(const char* name, std::span<const Var> xs, std::span<const Var> within, const char* where) {
  if (auto v = first_outside(xs, within)) return {name, false, v->name() + " not in " + where};
  return {name, true, {}};
}

Verdict goal_equality(const char* name, const Prenaming& beta, const Goal& g, const Goal& expected) {
  try {
    Goal mapped{apply_pren(beta, g.atoms)};
    if (mapped == expected) return {name, true, {}};
    return {name, false, "beta gives " + to_string(mapped) + ", other side has " + to_string(expected)};
  } catch (const UnsafePrenaming& e) {
    return {name, false, "beta unsafe on " + e.witness().name()};
  }
}

Verdict subst_equality(const char* name, const Prenaming& beta, const Subst& s, const Subst& expected) {
  try {
    Subst mapped = subst_variant(beta, s);
    if (pointwise_equal(mapped, expected)) return {name, true, {}};
    return {name, false, "beta gives " + to_string(mapped) + ", other side has " + to_string(expected)};
  } catch (const UnsafePrenaming& e) {
    return {name, false, "beta unsafe on " + e.witness().name()};
  }
}

}  // namespace

StepCheck check_step(const Prenaming& alpha, const DerivationStep& step, const DerivationStep& step2,
                     const std::optional<PrefixVars>& prefix) {
  if (step.selected_index != step2.selected_index) throw NotSimilar("selected positions differ");

  Prenaming lambda;
  try {
    lambda = pren(clause_term(step.input_clause), clause_term(step2.input_clause));
  } catch (const PrenFailure& e) {
    throw NotSimilar(std::string("input clauses are not variants: ") + e.what());
  }

  Prenaming beta;
  try {
    beta = extend(alpha, lambda);
  } catch (const OverlappingCores& e) {
    throw ExtensionUndefined(e.witness(), ExtensionUndefined::Side::Core);
  } catch (const OverlappingRanges& e) {
    throw ExtensionUndefined(e.witness(), ExtensionUndefined::Side::Range);
  }

  const auto sigma_vars = vars_of_subst(step.mgu);
  std::vector<Var> unified = vars_of(step.goal_before.atoms[step.selected_index]);
  collect_vars(step.input_clause.head, unified);
  const auto h_vars = vars_of(step.goal_after);

  StepCheck out{lambda, beta, {}};
  auto& vs = out.verdicts;
  vs.push_back(inclusion(verdict::kRelevantSigma, sigma_vars, unified, "the unified atoms"));
  vs.push_back(inclusion(verdict::kCompleteH, h_vars, beta.core(), "c+(beta)"));
  vs.push_back(inclusion(verdict::kCompleteSigma, sigma_vars, beta.core(), "c+(beta)"));
  {
    Verdict cum;
    if (prefix) {
      Verdict l = inclusion(verdict::kCumulative, beta.core(), prefix->left, "vars of the first prefix");
      cum = l.holds ? inclusion(verdict::kCumulative, beta.range(), prefix->right, "vars of the second prefix") : l;
    } else {
      Verdict l = inclusion(verdict::kCumulative, lambda.core(), vars_of(step.input_clause), "vars(K)");
      cum = l.holds ? inclusion(verdict::kCumulative, lambda.range(), vars_of(step2.input_clause), "vars(K')") : l;
    }
    vs.push_back(std::move(cum));
  }
  vs.push_back(goal_equality(verdict::kHEq, beta, step.goal_after, step2.goal_after));
  vs.push_back(subst_equality(verdict::kSigmaEq, beta, step.mgu, step2.mgu));
  return out;
}

Propagation propagate(const Prenaming& alpha, const DerivationStep& step, const DerivationStep& step2) {
  StepCheck c = check_step(alpha, step, step2);
  for (const auto& v : c.verdicts)
    if (!v.holds) throw VerificationFailed(0, v.name, v.witness);
  return {std::move(c.lambda), std::move(c.beta)};
}

bool VarianceCertificate::all_hold() const { return !first_failure(); }

std::optional<VarianceCertificate::Failure> VarianceCertificate::first_failure() const {
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (const auto& v : steps[i].verdicts)
      if (!v.holds) return Failure{i + 1, &v};
  if (cas && !cas->holds) return Failure{0, &*cas};
  return std::nullopt;
}

std::vector<Prenaming> VarianceCertificate::lambdas() const {
  std::vector<Prenaming> out;
  for (const auto& s : steps) out.push_back(s.lambda);
  return out;
}

std::vector<Prenaming> VarianceCertificate::betas() const {
  std::vector<Prenaming> out;
  for (const auto& s : steps) out.push_back(s.beta);
  return out;
}

namespace {

void check_clause_origin(const Program& p, const Derivation& d, const char* which) {
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    const Term k = clause_term(s.input_clause);
    bool ok = false;
    if (s.clause_index >= 1 && s.clause_index <= p.clauses.size()) {
      ok = are_variants(k, clause_term(p.clauses[s.clause_index - 1]));
    } else {
      ok = std::any_of(p.clauses.begin(), p.clauses.end(),
                       [&](const Clause& c) { return are_variants(k, clause_term(c)); });
    }
    if (!ok)
      throw NotSimilar(std::string(which) + " derivation, step " + std::to_string(i + 1) +
                       ": input clause is not a variant of its program clause");
  }
}

}  // namespace

VarianceCertificate check_variant(const Program& p, const Derivation& d, const Derivation& d2) {
  const SimilarityReport report = check_similar(d, d2);
  if (!report.similar()) throw NotSimilar(report.reason());
  check_clause_origin(p, d, "first");
  check_clause_origin(p, d2, "second");

  VarianceCertificate cert;
  cert.alpha = pren(goal_term(d.query), goal_term(d2.query));

  Prenaming beta = cert.alpha;
  for (std::size_t i = 1; i <= d.length(); ++i) {
    PrefixVars prefix{derivation_vars(d, i), derivation_vars(d2, i)};
    StepCheck c = check_step(beta, d.steps[i - 1], d2.steps[i - 1], prefix);
    beta = c.beta;
    c.verdicts.push_back(
        subst_equality(verdict::kPartialAnswerEq, beta, partial_answer(d, i), partial_answer(d2, i)));

    const Resultant r = resultant(d, i);
    const Resultant r2 = resultant(d2, i);
    Verdict head = goal_equality(verdict::kResultantEq, beta, r.instantiated_query, r2.instantiated_query);
    c.verdicts.push_back(head.holds ? goal_equality(verdict::kResultantEq, beta, r.current, r2.current) : head);

    cert.steps.push_back({std::move(c.lambda), std::move(c.beta), std::move(c.verdicts)});
  }

  if (d.successful() && d2.successful())
    cert.cas = subst_equality(verdict::kCasEq, beta, computed_answer(d), computed_answer(d2));
  return cert;
}

}  // namespace renlib
