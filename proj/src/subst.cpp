#include "renlib/subst.hpp"

#include <algorithm>
#include <utility>

namespace renlib {

Subst::Subst(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
  for (std::size_t i = 0; i < bindings_.size(); ++i)
    for (std::size_t j = i + 1; j < bindings_.size(); ++j)
      if (bindings_[i].var == bindings_[j].var) throw DuplicateBinding(bindings_[i].var);
}

const Term* Subst::find(const Var& v) const {
  for (const auto& b : bindings_)
    if (b.var == v) return &b.image;
  return nullptr;
}

Term Subst::image(const Var& v) const {
  if (const Term* t = find(v)) return *t;
  return Term::variable(v);
}

DuplicateBinding::DuplicateBinding(Var v)
    : Error("variable bound twice: " + v.name()), witness_(std::move(v)) {}

OverlappingCores::OverlappingCores(Var v)
    : Error("relaxed cores overlap on " + v.name()), witness_(std::move(v)) {}

Term apply(const Subst& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_var()) return s.image(t.var());
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(apply(s, a));
    changed = changed || !(args.back() == a);
  }
  if (!changed) return t;
  return Term::compound(t.functor(), std::move(args));
}

std::vector<Term> apply_all(const Subst& s, std::span<const Term> ts) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(apply(s, t));
  return out;
}

std::vector<Var> core(const Subst& s) {
  std::vector<Var> out;
  for (const auto& b : s.bindings())
    if (!b.passive()) out.push_back(b.var);
  return out;
}

std::vector<Var> relaxed_core(const Subst& s) {
  std::vector<Var> out;
  for (const auto& b : s.bindings()) out.push_back(b.var);
  return out;
}

std::vector<Term> active_range(const Subst& s) {
  std::vector<Term> out;
  for (const auto& b : s.bindings())
    if (!b.passive() && std::find(out.begin(), out.end(), b.image) == out.end())
      out.push_back(b.image);
  return out;
}

std::vector<Term> relaxed_range(const Subst& s) {
  std::vector<Term> out;
  for (const auto& b : s.bindings())
    if (std::find(out.begin(), out.end(), b.image) == out.end()) out.push_back(b.image);
  return out;
}

std::vector<Var> vars_of_subst(const Subst& s) {
  std::vector<Var> out = core(s);
  for (const auto& b : s.bindings())
    if (!b.passive()) collect_vars(b.image, out);
  return out;
}

std::vector<Var> relaxed_vars(const Subst& s) {
  std::vector<Var> out = relaxed_core(s);
  for (const auto& b : s.bindings()) collect_vars(b.image, out);
  return out;
}

Subst unrelax(const Subst& s) {
  std::vector<Binding> out;
  for (const auto& b : s.bindings())
    if (!b.passive()) out.push_back(b);
  return Subst(std::move(out));
}

Subst restrict(const Subst& s, std::span<const Var> w) {
  std::vector<Binding> out;
  for (const auto& b : s.bindings())
    if (contains(w, b.var)) out.push_back(b);
  return Subst(std::move(out));
}

Subst relax(const Subst& s, std::span<const Var> w) {
  std::vector<Binding> out(s.bindings().begin(), s.bindings().end());
  for (const auto& v : w)
    if (!s.binds(v) && !std::any_of(out.begin(), out.end(), [&](const Binding& b) { return b.var == v; }))
      out.push_back({v, Term::variable(v)});
  return Subst(std::move(out));
}

Subst compose(const Subst& outer, const Subst& inner) {
  std::vector<Binding> out;
  for (const auto& b : inner.bindings()) {
    Term img = apply(outer, b.image);
    if (!(img.is_var() && img.var() == b.var)) out.push_back({b.var, std::move(img)});
  }
  for (const auto& b : outer.bindings())
    if (!inner.binds(b.var) && !b.passive()) out.push_back(b);
  return Subst(std::move(out));
}

Subst power(const Subst& s, std::size_t n) {
  Subst out;
  for (std::size_t i = 0; i < n; ++i) out = compose(s, out);
  return out;
}

bool is_idempotent(const Subst& s) { return pointwise_equal(compose(s, s), s); }

Subst sum(const Subst& a, const Subst& b) {
  std::vector<Binding> out(a.bindings().begin(), a.bindings().end());
  for (const auto& bb : b.bindings()) {
    if (a.binds(bb.var)) throw OverlappingCores(bb.var);
    out.push_back(bb);
  }
  return Subst(std::move(out));
}

bool is_complete_for(const Subst& s, const Term& t) {
  for (const auto& v : vars_of(t))
    if (!s.binds(v)) return false;
  return true;
}

bool is_complete_for(const Subst& s, std::span<const Term> ts) {
  for (const auto& t : ts)
    if (!is_complete_for(s, t)) return false;
  return true;
}

bool pointwise_equal(const Subst& a, const Subst& b) {
  for (const auto& x : a.bindings())
    if (!(a.image(x.var) == b.image(x.var))) return false;
  for (const auto& x : b.bindings())
    if (!(a.image(x.var) == b.image(x.var))) return false;
  return true;
}

}  // namespace renlib
