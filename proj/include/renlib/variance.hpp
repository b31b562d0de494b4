#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renlib/errors.hpp"
#include "renlib/prenaming.hpp"
#include "renlib/sld.hpp"

namespace renlib {

struct SimilarityReport {
  struct StepEntry {
    bool same_position = false;
    bool clauses_variant = false;
  };

  bool queries_variant = false;
  bool same_length = false;
  std::vector<StepEntry> steps;  // one per common step

  bool similar() const;
  // First reason the pair is not similar, empty when similar.
  std::string reason() const;
};

SimilarityReport check_similar(const Derivation& d, const Derivation& d2);

// pren in both directions succeeds.
bool are_variants(const Term& s, const Term& t);

/// A named equality or inclusion checked on a pair of steps.
struct Verdict {
  std::string name;
  bool holds = false;
  std::string witness;  // explanation when `holds` is false
};

// Verdict names, in the order they are recorded.
namespace verdict {
inline constexpr const char* kRelevantSigma = "relevant_sigma";
inline constexpr const char* kCompleteH = "complete_H";
inline constexpr const char* kCompleteSigma = "complete_sigma";
inline constexpr const char* kCumulative = "cumulative";
inline constexpr const char* kHEq = "H_eq";
inline constexpr const char* kSigmaEq = "sigma_eq";
inline constexpr const char* kPartialAnswerEq = "partial_answer_eq";
inline constexpr const char* kResultantEq = "resultant_eq";
inline constexpr const char* kCasEq = "cas_eq";
}  // namespace verdict

class NotSimilar : public Error {
 public:
  using Error::Error;
};

// alpha (+) lambda is undefined; the usual cause is an alpha that is not
// cumulative for the derivations, so a local variable of one side is
// already in its core or range.
class ExtensionUndefined : public Error {
 public:
  enum class Side { Core, Range };
  ExtensionUndefined(Var witness, Side side);
  const Var& witness() const { return witness_; }
  Side side() const { return side_; }

 private:
  Var witness_;
  Side side_;
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(std::size_t step, std::string equality, std::string witness);
  std::size_t step() const { return step_; }
  const std::string& equality() const { return equality_; }
  const std::string& witness() const { return witness_; }

 private:
  std::size_t step_;
  std::string equality_;
  std::string witness_;
};

// Variables of the two derivation prefixes that include the step, used for
// the cumulativity check.
struct PrefixVars {
  std::vector<Var> left;
  std::vector<Var> right;
};

struct StepCheck {
  Prenaming lambda;
  Prenaming beta;
  std::vector<Verdict> verdicts;

  bool all_hold() const;
  const Verdict* find(std::string_view name) const;
};

/// Builds lambda = pren(K, K') and beta = alpha (+) lambda for a pair of
/// steps and records whether beta is complete for H and sigma, cumulative,
/// and maps H to H' and sigma to sigma'.
///
/// Without `prefix`, cumulativity is only checked for the lambda part:
/// c+(lambda) within vars(K) and r+(lambda) within vars(K').
///
/// Throws NotSimilar when the selected positions differ or K, K' are not
/// variants, and ExtensionUndefined when the sum does not exist.
StepCheck check_step(const Prenaming& alpha, const DerivationStep& step, const DerivationStep& step2,
                     const std::optional<PrefixVars>& prefix = std::nullopt);

struct Propagation {
  Prenaming lambda;
  Prenaming beta;
};

// check_step, throwing VerificationFailed (step index 0) on the first
// verdict that does not hold.
Propagation propagate(const Prenaming& alpha, const DerivationStep& step, const DerivationStep& step2);

struct VarianceCertificate {
  struct Step {
    Prenaming lambda;
    Prenaming beta;
    std::vector<Verdict> verdicts;
  };

  Prenaming alpha;
  std::vector<Step> steps;
  // Present when both derivations reached the empty goal.
  std::optional<Verdict> cas;

  bool all_hold() const;

  struct Failure {
    std::size_t step;  // 1-based; 0 for the final check
    const Verdict* verdict;
  };
  std::optional<Failure> first_failure() const;

  std::vector<Prenaming> lambdas() const;
  std::vector<Prenaming> betas() const;
};

/// Certifies that two similar derivations have variant resolvents, mgus,
/// partial answers and resultants, via beta_i = alpha (+) lambda_1 (+) ...
/// (+) lambda_i with alpha = pren(G, G').
///
/// Input clauses must be variants of clauses of `p`. Failed equalities are
/// recorded in the certificate; throws NotSimilar or ExtensionUndefined
/// when no certificate can be built.
VarianceCertificate check_variant(const Program& p, const Derivation& d, const Derivation& d2);

}  // namespace renlib
