#include "renlib/unify.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "renlib/io.hpp"

namespace renlib {

namespace {

const char* kind_name(UnifyFailureKind kind) {
  return kind == UnifyFailureKind::Clash ? "clash" : "occurs check";
}

}  // namespace

UnifyFailure::UnifyFailure(UnifyFailureKind kind, Equation witness)
    : Error(std::string("unification failure: ") + kind_name(kind) + " (" + to_string(witness) + ")"),
      kind_(kind),
      witness_(std::move(witness)) {}

Subst unify(std::span<const Equation> eqs) {
  std::deque<Equation> work(eqs.begin(), eqs.end());
  std::vector<Binding> solved;

  while (!work.empty()) {
    Equation e = std::move(work.front());
    work.pop_front();
    if (e.left == e.right) continue;
    if (!e.left.is_var() && e.right.is_var()) std::swap(e.left, e.right);

    if (e.left.is_var()) {
      const Var x = e.left.var();
      if (contains_var(e.right, x)) throw UnifyFailure(UnifyFailureKind::OccursCheck, e);
      const Subst elim{{x, e.right}};
      for (auto& w : work) {
        w.left = apply(elim, w.left);
        w.right = apply(elim, w.right);
      }
      for (auto& b : solved) b.image = apply(elim, b.image);
      solved.push_back({x, e.right});
      continue;
    }

    if (!e.left.same_shape(e.right)) throw UnifyFailure(UnifyFailureKind::Clash, e);
    auto ls = e.left.args();
    auto rs = e.right.args();
    for (std::size_t i = 0; i < ls.size(); ++i) work.push_back({ls[i], rs[i]});
  }

  std::vector<Var> order;
  for (const auto& e : eqs) {
    collect_vars(e.left, order);
    collect_vars(e.right, order);
  }
  auto rank = [&](const Var& v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  std::stable_sort(solved.begin(), solved.end(),
                   [&](const Binding& a, const Binding& b) { return rank(a.var) < rank(b.var); });
  return Subst(std::move(solved));
}

Subst unify_terms(const Term& s, const Term& t) {
  const Equation e{s, t};
  return unify(std::span<const Equation>(&e, 1));
}

}  // namespace renlib
