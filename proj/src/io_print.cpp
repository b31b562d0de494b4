#include <sstream>

#include "renlib/io.hpp"

namespace renlib {

namespace {

void write_term(std::ostringstream& os, const Term& t) {
  if (t.is_var()) {
    os << t.var().name();
    return;
  }
  if (t.functor() == kConsFunctor && t.arity() == 2) {
    os << '[';
    write_term(os, t.args()[0]);
    Term rest = t.args()[1];
    while (rest.is_compound() && rest.functor() == kConsFunctor && rest.arity() == 2) {
      os << ',';
      write_term(os, rest.args()[0]);
      rest = rest.args()[1];
    }
    if (!(rest.is_compound() && rest.functor() == kNilFunctor && rest.arity() == 0)) {
      os << '|';
      write_term(os, rest);
    }
    os << ']';
    return;
  }
  os << t.functor();
  if (t.arity() == 0) return;
  os << '(';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) os << ',';
    first = false;
    write_term(os, a);
  }
  os << ')';
}

template <typename Range, typename F>
std::string join(const Range& items, const char* sep, F&& f) {
  std::string out;
  bool first = true;
  for (const auto& x : items) {
    if (!first) out += sep;
    first = false;
    out += f(x);
  }
  return out;
}

}  // namespace

std::string to_string(const Var& v) { return v.name(); }

std::string to_string(const Term& t) {
  std::ostringstream os;
  write_term(os, t);
  return os.str();
}

std::string to_string(const Equation& e) { return to_string(e.left) + "=" + to_string(e.right); }

std::string to_string(const Binding& b) { return b.var.name() + "/" + to_string(b.image); }

std::string to_string(const Subst& s) {
  return "(" + join(s.bindings(), ", ", [](const Binding& b) { return to_string(b); }) + ")";
}

std::string to_string(const Prenaming& a) { return to_string(a.subst()); }

std::string to_string(std::span<const Var> vars) {
  return "{" + join(vars, ", ", [](const Var& v) { return v.name(); }) + "}";
}

std::string to_string(const std::vector<Cycle>& cycles) {
  return "{" +
         join(cycles, ", ",
              [](const Cycle& c) { return "(" + join(c, ",", [](const Var& v) { return v.name(); }) + ")"; }) +
         "}";
}

std::string to_string(const Goal& g) {
  if (g.empty()) return "□";
  return join(g.atoms, ", ", [](const Term& t) { return to_string(t); });
}

std::string to_string(const Clause& k) {
  std::string out = to_string(k.head);
  if (!k.body.empty()) out += " :- " + join(k.body, ", ", [](const Term& t) { return to_string(t); });
  return out;
}

}  // namespace renlib
