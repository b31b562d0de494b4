#pragma once

#include <optional>
#include <span>
#include <vector>

#include "renlib/errors.hpp"
#include "renlib/subst.hpp"
#include "renlib/term.hpp"

namespace renlib {

/// A variable-pure substitution that is injective on its relaxed core.
///
/// Holds the relaxed representation together with c+ (the left-hand
/// variables) and r+ (their images, same length and pairwise distinct).
/// Construct through `make_prenaming`, `pren` or `epsoid`; the invariants
/// are checked once there.
class Prenaming {
 public:
  Prenaming() = default;

  const Subst& subst() const { return base_; }
  std::span<const Var> core() const { return core_; }
  std::span<const Var> range() const { return range_; }
  std::size_t size() const { return core_.size(); }

  Var operator()(const Var& v) const;

  friend bool operator==(const Prenaming& a, const Prenaming& b) { return a.base_ == b.base_; }

 private:
  friend Prenaming make_prenaming(Subst s);
  Subst base_;
  std::vector<Var> core_;
  std::vector<Var> range_;
};

class NotVariablePure : public Error {
 public:
  explicit NotVariablePure(Binding b);
  const Binding& witness() const { return witness_; }

 private:
  Binding witness_;
};

class NotInjective : public Error {
 public:
  NotInjective(Var first, Var second);
  const Var& first() const { return first_; }
  const Var& second() const { return second_; }

 private:
  Var first_;
  Var second_;
};

class NotARenaming : public Error {
 public:
  using Error::Error;
};

// r+(a) and r+(b) share a variable, so the extension would alias.
class OverlappingRanges : public Error {
 public:
  explicit OverlappingRanges(Var v);
  const Var& witness() const { return witness_; }

 private:
  Var witness_;
};

// A variable of the argument falls in noninj of the prenaming.
class UnsafePrenaming : public Error {
 public:
  explicit UnsafePrenaming(Var v);
  const Var& witness() const { return witness_; }

 private:
  Var witness_;
};

enum class PrenFailureKind { Alias, Instance, Clash };

const char* rule_name(PrenFailureKind kind);

/// Failure of the pren transformation, named after the rule that fired.
///
/// For `Alias`, `conflict` is the already recorded binding that the
/// offending equation contradicts.
class PrenFailure : public Error {
 public:
  PrenFailure(PrenFailureKind kind, Equation witness, std::optional<Binding> conflict = {});

  PrenFailureKind kind() const { return kind_; }
  const Equation& witness() const { return witness_; }
  const std::optional<Binding>& conflict() const { return conflict_; }

 private:
  PrenFailureKind kind_;
  Equation witness_;
  std::optional<Binding> conflict_;
};

// Throws NotVariablePure or NotInjective.
Prenaming make_prenaming(Subst s);

Prenaming epsoid(std::span<const Var> w);

// Image of the core equals the core.
bool is_renaming(const Prenaming& a);

using Cycle = std::vector<Var>;

/// Disjoint cycles of a renaming, covering its core.
///
/// Each cycle starts at the first of its variables in binding order and
/// lists successive images. Throws NotARenaming.
std::vector<Cycle> cycle_decomposition(const Prenaming& rho);

// True when `a` and `b` list the same cycle, up to rotation.
bool same_cycle(const Cycle& a, const Cycle& b);

/// The relevant renaming that agrees with `a` outside noninj(a).
///
/// Every x in r+ minus c+ is sent back to the start of the open chain that
/// ends in x. The result is unrelaxed.
Prenaming closure(const Prenaming& a);

// (x1/y1,...,xn/yn) -> (y1/x1,...,yn/xn).
Prenaming inverse(const Prenaming& a);

// r+ minus c+, in r+ order. Its complement is the injectivity domain.
std::vector<Var> noninj(const Prenaming& a);

bool in_indom(const Prenaming& a, const Var& v);

bool is_safe_for(const Prenaming& a, const Term& t);
bool is_safe_for(const Prenaming& a, std::span<const Term> ts);

// Disjoint sum. Throws OverlappingCores or OverlappingRanges.
Prenaming extend(const Prenaming& a, const Prenaming& b);

/// The prenaming of s to t: complete for s, with c+ within vars(s) and r+
/// within vars(t), mapping s onto t. Throws PrenFailure.
Prenaming pren(const Term& s, const Term& t);

// Term application, refused when the term leaves the injectivity domain.
// Throws UnsafePrenaming.
Term apply_pren(const Prenaming& a, const Term& t);
std::vector<Term> apply_pren(const Prenaming& a, std::span<const Term> ts);

/// a(s) = { a(x)/a(s(x)) | x in Dom(s) }, in the order of s.
///
/// Requires vars(s) to avoid noninj(a); throws UnsafePrenaming otherwise.
Subst subst_variant(const Prenaming& a, const Subst& s);

}  // namespace renlib
