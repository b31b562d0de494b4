#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "renlib/io.hpp"
#include "renlib/prenaming.hpp"
#include "renlib/sld.hpp"
#include "renlib/unify.hpp"
#include "renlib/variance.hpp"

namespace renlib::cli {

namespace {

// Raised for unreadable input files; maps to kUsageError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParseOptions algebra_options(const std::string& style) {
  ParseOptions o;
  o.style = style == "prolog" ? VarStyle::Prolog : VarStyle::Math;
  o.allow_generated = true;
  o.file = "<arg>";
  return o;
}

Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read program file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ParseOptions o;
  o.file = path;
  return parse_program(ss.str(), o);
}

Goal load_query(const std::string& text) {
  ParseOptions o;
  o.file = "<query>";
  return parse_goal(text, o);
}

TraceFormat format_of(const std::string& f) { return f == "json" ? TraceFormat::Json : TraceFormat::Text; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relaxed-core substitutions, prenamings, unification and SLD variance checking"};
  app.name(args.empty() ? "renlib" : args.front());
  app.require_subcommand(1);

  std::string style = "math";
  auto add_style = [&](CLI::App* sub) {
    sub->add_option("--style", style, "Variable convention for bare lowercase names")
        ->check(CLI::IsMember({"math", "prolog"}))
        ->capture_default_str();
  };

  std::string t1, t2, subst_text, pren_text;

  auto* pren_cmd = app.add_subcommand("pren", "Prenaming of one term to another");
  pren_cmd->add_option("from", t1)->required();
  pren_cmd->add_option("to", t2)->required();
  add_style(pren_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "Closure of a prenaming and its cycles");
  closure_cmd->add_option("prenaming", subst_text)->required();
  add_style(closure_cmd);

  auto* indom_cmd = app.add_subcommand("indom", "Complement of the injectivity domain");
  indom_cmd->add_option("prenaming", subst_text)->required();
  add_style(indom_cmd);

  auto* unify_cmd = app.add_subcommand("unify", "Algorithmic mgu of two terms");
  unify_cmd->add_option("left", t1)->required();
  unify_cmd->add_option("right", t2)->required();
  add_style(unify_cmd);

  auto* variant_cmd = app.add_subcommand("variant-subst", "Variant of a substitution by a prenaming");
  variant_cmd->add_option("prenaming", pren_text)->required();
  variant_cmd->add_option("subst", subst_text)->required();
  add_style(variant_cmd);

  std::string program_path, query, query2, format = "text";
  std::vector<std::size_t> choices;
  std::size_t max_steps = 100;
  std::size_t fresh_base = 0;
  std::size_t fresh_base2 = 1000;
  bool expect_success = false;

  auto* derive_cmd = app.add_subcommand("derive", "Run an SLD derivation and print its trace");
  derive_cmd->add_option("--program", program_path)->required();
  derive_cmd->add_option("--query", query)->required();
  derive_cmd->add_option("--choices", choices, "1-based clause indices to replay")->delimiter(',');
  derive_cmd->add_option("--max-steps", max_steps)->capture_default_str();
  derive_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  derive_cmd->add_option("--fresh-base", fresh_base)->capture_default_str();
  derive_cmd->add_flag("--expect-success", expect_success, "Exit 1 unless the empty goal is reached");

  auto* check_cmd = app.add_subcommand("check-variant", "Certify variance of two similar derivations");
  check_cmd->add_option("--program", program_path)->required();
  check_cmd->add_option("--query1", query)->required();
  check_cmd->add_option("--query2", query2)->required();
  check_cmd->add_option("--choices", choices, "1-based clause indices to replay")->delimiter(',');
  check_cmd->add_option("--max-steps", max_steps)->capture_default_str();
  check_cmd->add_option("--fresh-base2", fresh_base2)->capture_default_str();
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (pren_cmd->parsed()) {
      const auto o = algebra_options(style);
      try {
        out << to_string(pren(parse_term(t1, o), parse_term(t2, o))) << "\n";
      } catch (const PrenFailure& e) {
        out << e.what() << "\n";
        return kDomainFailure;
      }
    } else if (closure_cmd->parsed()) {
      const auto a = make_prenaming(parse_subst(subst_text, algebra_options(style)));
      const auto c = closure(a);
      out << to_string(c) << "\n";
      out << "cycles " << to_string(cycle_decomposition(c)) << "\n";
    } else if (indom_cmd->parsed()) {
      const auto a = make_prenaming(parse_subst(subst_text, algebra_options(style)));
      out << "noninj = " << to_string(noninj(a)) << "\n";
    } else if (unify_cmd->parsed()) {
      const auto o = algebra_options(style);
      try {
        out << to_string(unify_terms(parse_term(t1, o), parse_term(t2, o))) << "\n";
      } catch (const UnifyFailure& e) {
        out << e.what() << "\n";
        return kDomainFailure;
      }
    } else if (variant_cmd->parsed()) {
      const auto o = algebra_options(style);
      const auto a = make_prenaming(parse_subst(pren_text, o));
      try {
        out << to_string(subst_variant(a, parse_subst(subst_text, o))) << "\n";
      } catch (const UnsafePrenaming& e) {
        out << "failure: " << e.what() << "\n";
        return kDomainFailure;
      }
    } else if (derive_cmd->parsed()) {
      const Program p = load_program(program_path);
      DeriveOptions opts;
      if (!choices.empty()) opts.choices = choices;
      opts.max_steps = max_steps;
      opts.fresh_base = fresh_base;
      const Derivation d = derive(p, load_query(query), opts);
      out << print_derivation(d, format_of(format));
      if (expect_success && !d.successful()) {
        err << "derivation ended without success: " << outcome_name(d.outcome) << "\n";
        return kDomainFailure;
      }
    } else if (check_cmd->parsed()) {
      const Program p = load_program(program_path);
      DeriveOptions first;
      if (!choices.empty()) first.choices = choices;
      first.max_steps = max_steps;
      const Derivation d = derive(p, load_query(query), first);

      DeriveOptions second;
      second.choices = std::vector<std::size_t>{};
      for (const auto& s : d.steps) second.choices->push_back(s.clause_index);
      second.max_steps = max_steps;
      second.fresh_base = fresh_base2;
      const Derivation d2 = derive(p, load_query(query2), second);

      try {
        const VarianceCertificate c = check_variant(p, d, d2);
        out << print_certificate(c, format_of(format));
        return c.all_hold() ? kOk : kDomainFailure;
      } catch (const NotSimilar& e) {
        out << "not similar: " << e.what() << "\n";
        return kDomainFailure;
      } catch (const ExtensionUndefined& e) {
        out << e.what() << "\n";
        return kDomainFailure;
      }
    }
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const ReservedVariable& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kDomainFailure;
  }
  return kOk;
}

}  // namespace renlib::cli
