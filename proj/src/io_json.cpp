#include <json.hpp>

#include "renlib/io.hpp"

namespace renlib {

using nlohmann::ordered_json;

namespace {

const ParseOptions kTraceOptions{VarStyle::Prolog, true, "<trace>"};

ordered_json goal_json(const Goal& g) {
  ordered_json out = ordered_json::array();
  for (const auto& a : g.atoms) out.push_back(to_string(a));
  return out;
}

ordered_json bindings_json(const Subst& s) {
  ordered_json out = ordered_json::array();
  for (const auto& b : s.bindings()) out.push_back({b.var.name(), to_string(b.image)});
  return out;
}

Goal goal_from(const ordered_json& j) {
  Goal g;
  for (const auto& a : j) g.atoms.push_back(parse_term(a.get<std::string>(), kTraceOptions));
  return g;
}

Subst subst_from(const ordered_json& j) {
  std::vector<Binding> out;
  for (const auto& b : j) {
    if (!b.is_array() || b.size() != 2) throw Error("binding must be a [variable, term] pair");
    Term v = parse_term(b[0].get<std::string>(), kTraceOptions);
    if (!v.is_var()) throw Error("binding must start with a variable");
    out.push_back({v.var(), parse_term(b[1].get<std::string>(), kTraceOptions)});
  }
  return Subst(std::move(out));
}

Outcome outcome_from(const std::string& s) {
  for (Outcome o : {Outcome::Success, Outcome::NoStep, Outcome::StepLimit, Outcome::ChoicesExhausted})
    if (s == outcome_name(o)) return o;
  throw Error("unknown outcome: " + s);
}

ordered_json verdicts_json(const std::vector<Verdict>& vs) {
  ordered_json out = ordered_json::object();
  for (const auto& v : vs) out[v.name] = v.holds;
  return out;
}

ordered_json witnesses_json(const std::vector<Verdict>& vs) {
  ordered_json out = ordered_json::object();
  for (const auto& v : vs)
    if (!v.holds) out[v.name] = v.witness;
  return out;
}

std::string derivation_text(const Derivation& d) {
  std::string out = to_string(d.query) + "\n";
  for (const auto& s : d.steps) {
    out += "  →{" + to_string(s.input_clause) + " : " + to_string(s.mgu) + "}\n";
    out += to_string(s.goal_after) + "\n";
  }
  return out;
}

std::string certificate_text(const VarianceCertificate& c) {
  std::string out = "alpha = " + to_string(c.alpha) + "\n";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    out += "step " + std::to_string(i + 1) + ": lambda = " + to_string(s.lambda) +
           ", beta = " + to_string(s.beta) + "\n";
    for (const auto& v : s.verdicts) {
      out += "  " + v.name + ": " + (v.holds ? "true" : "false");
      if (!v.holds) out += "  -- " + v.witness;
      out += "\n";
    }
  }
  if (c.cas) {
    out += std::string("final: cas_eq: ") + (c.cas->holds ? "true" : "false");
    if (!c.cas->holds) out += "  -- " + c.cas->witness;
    out += "\n";
  }
  out += c.all_hold() ? "all verdicts hold\n" : "some verdicts fail\n";
  return out;
}

}  // namespace

std::string print_derivation(const Derivation& d, TraceFormat format) {
  if (format == TraceFormat::Text) return derivation_text(d);

  ordered_json j;
  j["query"] = goal_json(d.query);
  j["fresh_base"] = d.fresh_base;
  j["next_fresh"] = d.next_fresh;
  j["outcome"] = outcome_name(d.outcome);
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    ordered_json st;
    st["goal"] = goal_json(s.goal_before);
    st["selected_index"] = s.selected_index;
    st["clause_index"] = s.clause_index;
    st["input_clause"] = to_string(s.input_clause);
    st["mgu"] = bindings_json(s.mgu);
    st["goal_after"] = goal_json(s.goal_after);
    st["partial_answer"] = bindings_json(partial_answer(d, i + 1));
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  return j.dump(2) + "\n";
}

Derivation parse_derivation_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed trace JSON: ") + e.what());
  }
  try {
    Derivation d;
    d.query = goal_from(j.at("query"));
    d.fresh_base = j.at("fresh_base").get<std::size_t>();
    d.next_fresh = j.at("next_fresh").get<std::size_t>();
    d.outcome = outcome_from(j.at("outcome").get<std::string>());
    for (const auto& st : j.at("steps")) {
      d.steps.push_back(DerivationStep{
          goal_from(st.at("goal")),
          st.at("selected_index").get<std::size_t>(),
          st.at("clause_index").get<std::size_t>(),
          parse_clause(st.at("input_clause").get<std::string>(), kTraceOptions),
          subst_from(st.at("mgu")),
          goal_from(st.at("goal_after")),
      });
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed trace JSON: ") + e.what());
  }
}

std::string print_certificate(const VarianceCertificate& c, TraceFormat format) {
  if (format == TraceFormat::Text) return certificate_text(c);

  ordered_json j;
  j["alpha"] = bindings_json(c.alpha.subst());
  ordered_json steps = ordered_json::array();
  for (const auto& s : c.steps) {
    ordered_json st;
    st["lambda"] = bindings_json(s.lambda.subst());
    st["beta"] = bindings_json(s.beta.subst());
    st["verdicts"] = verdicts_json(s.verdicts);
    st["witnesses"] = witnesses_json(s.verdicts);
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  ordered_json final_part;
  final_part["cas_eq"] = c.cas ? ordered_json(c.cas->holds) : ordered_json(nullptr);
  j["final"] = std::move(final_part);
  j["all_hold"] = c.all_hold();
  return j.dump(2) + "\n";
}

}  // namespace renlib
