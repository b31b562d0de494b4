#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "renlib/errors.hpp"
#include "renlib/prenaming.hpp"
#include "renlib/sld.hpp"
#include "renlib/subst.hpp"
#include "renlib/term.hpp"
#include "renlib/variance.hpp"

namespace renlib {

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Which bare identifiers denote variables.
///
/// `Prolog`: names starting with an uppercase letter or `_`.
/// `Math`: additionally lowercase names starting with u..z, the textbook
/// convention used for substitution algebra (x, y, z, w1 are variables;
/// a, b, f, p are constants and functors).
enum class VarStyle { Prolog, Math };

struct ParseOptions {
  VarStyle style = VarStyle::Prolog;
  // Accept `_G<n>` names, e.g. when reading back a trace.
  bool allow_generated = false;
  std::string file = "<input>";
};

// 1-based line and column.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

std::string to_string(const SourceSpan& span);

class SyntaxError : public Error {
 public:
  SyntaxError(SourceSpan span, const std::string& message);
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

class ReservedVariable : public Error {
 public:
  ReservedVariable(SourceSpan span, std::string name);
  const SourceSpan& span() const { return span_; }
  const std::string& name() const { return name_; }

 private:
  SourceSpan span_;
  std::string name_;
};

Term parse_term(std::string_view text, const ParseOptions& opts = {});
// "(x/t, y/s)" or "{x/t, y/s}"; commas between bindings are optional.
Subst parse_subst(std::string_view text, const ParseOptions& opts = {});
// Comma-separated atoms; empty text is the empty goal.
Goal parse_goal(std::string_view text, const ParseOptions& opts = {});
// "h" or "h :- b1, ..., bn", optional final period.
Clause parse_clause(std::string_view text, const ParseOptions& opts = {});
Program parse_program(std::string_view text, const ParseOptions& opts = {});

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string to_string(const Var& v);
std::string to_string(const Term& t);
std::string to_string(const Equation& e);
std::string to_string(const Binding& b);
std::string to_string(const Subst& s);
std::string to_string(const Prenaming& a);
std::string to_string(std::span<const Var> vars);  // {x, y}
std::string to_string(const std::vector<Cycle>& cycles);
std::string to_string(const Goal& g);  // "□" when empty
std::string to_string(const Clause& k);

enum class TraceFormat { Text, Json };

std::string print_derivation(const Derivation& d, TraceFormat format);

// Inverse of print_derivation(d, TraceFormat::Json). Throws Error on
// malformed input.
Derivation parse_derivation_json(std::string_view text);

std::string print_certificate(const VarianceCertificate& c, TraceFormat format);

}  // namespace renlib
