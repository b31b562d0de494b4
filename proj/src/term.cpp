#include "renlib/term.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <variant>

namespace renlib {

bool is_generated_name(std::string_view name) {
  if (!name.starts_with(kGeneratedPrefix)) return false;
  auto digits = name.substr(kGeneratedPrefix.size());
  return !digits.empty() &&
         std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Var::Var(std::string name) : name_(std::move(name)), generated_(is_generated_name(name_)) {}

Var Var::generated(std::size_t index) {
  return Var(std::string(kGeneratedPrefix) + std::to_string(index));
}

struct Term::Node {
  struct Compound {
    std::string functor;
    std::vector<Term> args;
  };
  std::variant<Var, Compound> data;
};

Term Term::variable(Var v) {
  return Term(std::make_shared<const Node>(Node{std::move(v)}));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Node::Compound{std::move(functor), std::move(args)}}));
}

Term Term::nil() { return constant(std::string(kNilFunctor)); }

Term Term::cons(Term head, Term tail) {
  return compound(std::string(kConsFunctor), {std::move(head), std::move(tail)});
}

Term Term::list(std::vector<Term> items, Term tail) {
  Term out = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) out = cons(std::move(*it), std::move(out));
  return out;
}

bool Term::is_var() const { return std::holds_alternative<Var>(node_->data); }

const Var& Term::var() const {
  assert(is_var());
  return std::get<Var>(node_->data);
}

const std::string& Term::functor() const {
  assert(is_compound());
  return std::get<Node::Compound>(node_->data).functor;
}

std::span<const Term> Term::args() const {
  if (is_var()) return {};
  return std::get<Node::Compound>(node_->data).args;
}

bool Term::same_shape(const Term& other) const {
  return is_compound() && other.is_compound() && functor() == other.functor() &&
         arity() == other.arity();
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var() == b.var();
  if (!a.same_shape(b)) return false;
  auto xs = a.args();
  auto ys = b.args();
  return std::equal(xs.begin(), xs.end(), ys.begin());
}

bool contains(std::span<const Var> vars, const Var& v) {
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

void collect_vars(const Term& t, std::vector<Var>& out) {
  if (t.is_var()) {
    if (!contains(out, t.var())) out.push_back(t.var());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

std::vector<Var> vars_of(const Term& t) {
  std::vector<Var> out;
  collect_vars(t, out);
  return out;
}

std::vector<Var> vars_of(std::span<const Term> ts) {
  std::vector<Var> out;
  for (const auto& t : ts) collect_vars(t, out);
  return out;
}

bool contains_var(const Term& t, const Var& v) {
  if (t.is_var()) return t.var() == v;
  auto args = t.args();
  return std::any_of(args.begin(), args.end(), [&](const Term& a) { return contains_var(a, v); });
}

bool occurs_in(const Term& s, const Term& t) {
  if (s == t) return true;
  auto args = t.args();
  return std::any_of(args.begin(), args.end(), [&](const Term& a) { return occurs_in(s, a); });
}

bool var_disjoint(const Term& s, const Term& t) {
  for (const auto& v : vars_of(s))
    if (contains_var(t, v)) return false;
  return true;
}

}  // namespace renlib
