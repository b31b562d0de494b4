#include "renlib/prenaming.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "renlib/io.hpp"

namespace renlib {

NotVariablePure::NotVariablePure(Binding b)
    : Error("not variable-pure: " + to_string(b)), witness_(std::move(b)) {}

NotInjective::NotInjective(Var first, Var second)
    : Error("not injective: " + first.name() + " and " + second.name() + " share an image"),
      first_(std::move(first)),
      second_(std::move(second)) {}

OverlappingRanges::OverlappingRanges(Var v)
    : Error("relaxed ranges overlap on " + v.name()), witness_(std::move(v)) {}

UnsafePrenaming::UnsafePrenaming(Var v)
    : Error("prenaming is not injective on " + v.name()), witness_(std::move(v)) {}

const char* rule_name(PrenFailureKind kind) {
  switch (kind) {
    case PrenFailureKind::Alias:
      return "alias";
    case PrenFailureKind::Instance:
      return "instance";
    case PrenFailureKind::Clash:
      return "clash";
  }
  return "?";
}

namespace {

std::string pren_failure_message(PrenFailureKind kind, const Equation& e,
                                 const std::optional<Binding>& conflict) {
  std::string msg = std::string("failure: ") + rule_name(kind) + " (" + to_string(e);
  if (conflict) msg += " conflicts " + to_string(*conflict);
  return msg + ")";
}

}  // namespace

PrenFailure::PrenFailure(PrenFailureKind kind, Equation witness, std::optional<Binding> conflict)
    : Error(pren_failure_message(kind, witness, conflict)),
      kind_(kind),
      witness_(std::move(witness)),
      conflict_(std::move(conflict)) {}

Var Prenaming::operator()(const Var& v) const {
  for (std::size_t i = 0; i < core_.size(); ++i)
    if (core_[i] == v) return range_[i];
  return v;
}

Prenaming make_prenaming(Subst s) {
  Prenaming out;
  for (const auto& b : s.bindings()) {
    if (!b.image.is_var()) throw NotVariablePure(b);
    for (std::size_t i = 0; i < out.range_.size(); ++i)
      if (out.range_[i] == b.image.var()) throw NotInjective(out.core_[i], b.var);
    out.core_.push_back(b.var);
    out.range_.push_back(b.image.var());
  }
  out.base_ = std::move(s);
  return out;
}

Prenaming epsoid(std::span<const Var> w) { return make_prenaming(relax(Subst{}, w)); }

bool is_renaming(const Prenaming& a) {
  auto dom = core(a.subst());
  for (const auto& x : dom)
    if (!contains(dom, a(x))) return false;
  return true;
}

std::vector<Cycle> cycle_decomposition(const Prenaming& rho) {
  if (!is_renaming(rho)) throw NotARenaming("not a renaming: " + to_string(rho.subst()));
  std::vector<Cycle> cycles;
  std::vector<Var> seen;
  for (const auto& start : core(rho.subst())) {
    if (contains(seen, start)) continue;
    Cycle c;
    Var x = start;
    do {
      c.push_back(x);
      seen.push_back(x);
      x = rho(x);
    } while (!(x == start));
    cycles.push_back(std::move(c));
  }
  return cycles;
}

bool same_cycle(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  Cycle rotated(it, b.end());
  rotated.insert(rotated.end(), b.begin(), it);
  return rotated == a;
}

std::vector<Var> noninj(const Prenaming& a) {
  std::vector<Var> out;
  for (const auto& y : a.range())
    if (!contains(a.core(), y)) out.push_back(y);
  return out;
}

bool in_indom(const Prenaming& a, const Var& v) {
  return contains(a.core(), v) || !contains(a.range(), v);
}

Prenaming closure(const Prenaming& a) {
  // Preimage within c+, unique by injectivity.
  std::map<Var, Var> preimage;
  for (std::size_t i = 0; i < a.size(); ++i) preimage.emplace(a.range()[i], a.core()[i]);

  std::vector<Binding> out;
  for (const auto& b : a.subst().bindings())
    if (!b.passive()) out.push_back(b);
  for (const auto& x : noninj(a)) {
    Var z = x;
    for (auto it = preimage.find(z); it != preimage.end(); it = preimage.find(z)) z = it->second;
    out.push_back({x, Term::variable(z)});
  }
  return make_prenaming(Subst(std::move(out)));
}

Prenaming inverse(const Prenaming& a) {
  std::vector<Binding> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back({a.range()[i], Term::variable(a.core()[i])});
  return make_prenaming(Subst(std::move(out)));
}

bool is_safe_for(const Prenaming& a, const Term& t) {
  for (const auto& v : vars_of(t))
    if (!in_indom(a, v)) return false;
  return true;
}

bool is_safe_for(const Prenaming& a, std::span<const Term> ts) {
  return std::all_of(ts.begin(), ts.end(), [&](const Term& t) { return is_safe_for(a, t); });
}

Prenaming extend(const Prenaming& a, const Prenaming& b) {
  Subst joined = sum(a.subst(), b.subst());
  for (const auto& v : b.range())
    if (contains(a.range(), v)) throw OverlappingRanges(v);
  return make_prenaming(std::move(joined));
}

Prenaming pren(const Term& s, const Term& t) {
  std::vector<Binding> bindings;
  std::map<Var, Var> forward;
  std::map<Var, Var> backward;

  std::vector<Equation> work{{s, t}};
  while (!work.empty()) {
    Equation e = std::move(work.back());
    work.pop_back();
    if (e.left.is_var() && e.right.is_var()) {
      const Var& x = e.left.var();
      const Var& y = e.right.var();
      auto fwd = forward.find(x);
      if (fwd != forward.end()) {
        if (fwd->second == y) continue;  // elimination
        throw PrenFailure(PrenFailureKind::Alias, e, Binding{x, Term::variable(fwd->second)});
      }
      auto bwd = backward.find(y);
      if (bwd != backward.end())
        throw PrenFailure(PrenFailureKind::Alias, e, Binding{bwd->second, Term::variable(y)});
      forward.emplace(x, y);
      backward.emplace(y, x);
      bindings.push_back({x, e.right});
      continue;
    }
    if (e.left.is_var() || e.right.is_var()) throw PrenFailure(PrenFailureKind::Instance, e);
    if (!e.left.same_shape(e.right)) throw PrenFailure(PrenFailureKind::Clash, e);
    // Reverse push so arguments are visited left to right.
    auto ls = e.left.args();
    auto rs = e.right.args();
    for (std::size_t i = ls.size(); i-- > 0;) work.push_back({ls[i], rs[i]});
  }
  return make_prenaming(Subst(std::move(bindings)));
}

Term apply_pren(const Prenaming& a, const Term& t) {
  for (const auto& v : vars_of(t))
    if (!in_indom(a, v)) throw UnsafePrenaming(v);
  return apply(a.subst(), t);
}

std::vector<Term> apply_pren(const Prenaming& a, std::span<const Term> ts) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(apply_pren(a, t));
  return out;
}

Subst subst_variant(const Prenaming& a, const Subst& s) {
  for (const auto& v : vars_of_subst(s))
    if (!in_indom(a, v)) throw UnsafePrenaming(v);
  std::vector<Binding> out;
  for (const auto& b : s.bindings()) {
    if (b.passive()) continue;
    out.push_back({a(b.var), apply(a.subst(), b.image)});
  }
  return Subst(std::move(out));
}

}  // namespace renlib
