#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "workbench/formula.hpp"
#include "workbench/frame.hpp"
#include "workbench/lattice.hpp"
#include "workbench/logic.hpp"
#include "workbench/model_io.hpp"
#include "workbench/semantics.hpp"
#include "workbench/sorites.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> labels_of(const wb::Frame& frame, wb::StateSet s) {
  std::vector<std::string> out;
  for (int x : wb::set_bits(s)) out.push_back(frame.label(x));
  return out;
}

json trace_to_json(const std::vector<wb::TraceStep>& trace) {
  json steps = json::array();
  for (const auto& st : trace) {
    json prems = json::array();
    for (const auto& p : st.premises) prems.push_back(wb::print(p));
    steps.push_back({{"rule", st.rule}, {"conclusion", wb::print(st.conclusion)},
                     {"premises", prems}});
  }
  return steps;
}

void print_trace(const std::vector<wb::TraceStep>& trace, std::ostream& out) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << "  " << (i + 1) << ". " << wb::print(trace[i].conclusion) << "   [" << trace[i].rule;
    for (const auto& p : trace[i].premises) out << "; " << wb::print(p);
    out << "]\n";
  }
}

struct Options {
  std::string format = "text";
  int jobs = 0;
  bool is_json() const { return format == "json"; }
};

int run_parse(const Options& opt, const std::string& text) {
  wb::Formula f = wb::parse(text);
  if (opt.is_json()) {
    std::vector<std::string> vars;
    for (const auto& g : wb::subformulas(f))
      if (g.kind() == wb::Formula::Kind::Var) vars.push_back(g.name());
    std::sort(vars.begin(), vars.end());
    std::cout << json{{"input", text}, {"canonical", wb::print(f)}, {"variables", vars}}.dump(2)
              << "\n";
  } else {
    std::cout << wb::print(f) << "\n";
  }
  return 0;
}

int run_eval(const Options& opt, const std::string& model_path, const std::string& formula,
             const std::string& semantics) {
  wb::Model m = wb::load_model_file(model_path);
  wb::SemanticsId sem =
      semantics == "fine" ? wb::SemanticsId::Fine : wb::SemanticsId::Fixpoint;
  wb::StateSet ext = wb::eval(m, wb::parse(formula), sem);
  auto labels = labels_of(m.frame, ext);
  if (opt.is_json()) {
    std::cout << json{{"formula", formula}, {"semantics", semantics}, {"extension", labels}}.dump(2)
              << "\n";
  } else {
    std::cout << "{";
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
    std::cout << "}\n";
  }
  return 0;
}

int run_check(const Options& opt, const std::string& logic_name, const std::string& sequent_text,
              const wb::Budget& budget, bool trace, const std::string& witness_path,
              const std::string& expect) {
  wb::Sequent goal = wb::parse_sequent(sequent_text);
  wb::LogicId logic = wb::logic_from_string(logic_name);
  wb::Verdict v = wb::check(goal, logic, budget, opt.jobs);

  json j{{"logic", logic_name}, {"sequent", wb::print(goal)}};
  if (wb::is_valid(v)) {
    const auto& val = std::get<wb::Valid>(v);
    j["verdict"] = "valid";
    if (trace) j["trace"] = trace_to_json(val.trace);
    if (!opt.is_json()) {
      std::cout << "Valid\n";
      if (trace) print_trace(val.trace, std::cout);
    }
  } else if (wb::is_invalid(v)) {
    const auto& inv = std::get<wb::Invalid>(v);
    j["verdict"] = "invalid";
    j["witness"] = wb::model_to_json(inv.model);
    j["state"] = inv.model.frame.label(inv.state);
    if (!witness_path.empty()) wb::save_model_file(inv.model, witness_path);
    if (!opt.is_json()) {
      std::cout << "Invalid at state " << inv.model.frame.label(inv.state) << " in a "
                << inv.model.frame.size() << "-state model\n";
      if (witness_path.empty())
        std::cout << wb::model_to_json(inv.model).dump(2) << "\n";
      else
        std::cout << "witness written to " << witness_path << "\n";
    }
  } else {
    const auto& u = std::get<wb::Unknown>(v);
    j["verdict"] = "unknown";
    j["max_size"] = u.max_size;
    j["universe_depth"] = u.universe_depth;
    if (!opt.is_json())
      std::cout << "Unknown (no proof within depth " << u.universe_depth
                << ", no countermodel within " << u.max_size << " states)\n";
  }
  if (opt.is_json()) std::cout << j.dump(2) << "\n";
  if (!expect.empty()) {
    bool ok = (expect == "valid" && wb::is_valid(v)) || (expect == "invalid" && wb::is_invalid(v));
    if (!ok) {
      std::cerr << "expected " << expect << "\n";
      return 1;
    }
  }
  return 0;
}

int run_sorites(const Options& opt, int n, int delta, bool pseudo, bool verify,
                const std::string& eval_formula, const std::string& dot_path) {
  wb::SoritesParams params{n, delta};
  params.validate();
  wb::Model m = pseudo ? wb::build_pseudosymmetric(params) : wb::build_symmetric(params);
  json j{{"n", n}, {"delta", delta}, {"pseudo", pseudo}, {"model", wb::model_to_json(m)}};
  if (!opt.is_json())
    std::cout << (pseudo ? "pseudosymmetric" : "symmetric") << " sorites model: "
              << m.frame.size() << " states\n";
  int rc = 0;
  if (verify) {
    wb::FactReport report = wb::verify_facts(
        params, pseudo ? wb::SoritesKind::Pseudosymmetric : wb::SoritesKind::Symmetric);
    json facts = json::array();
    for (const auto& c : report.checks) {
      facts.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      if (!opt.is_json())
        std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name
                  << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    }
    j["facts"] = facts;
    j["all_pass"] = report.all_pass();
    if (!opt.is_json())
      std::cout << (report.all_pass() ? "all facts pass" : "some facts FAIL") << "\n";
    if (!report.all_pass()) rc = 1;
  }
  if (!eval_formula.empty()) {
    wb::StateSet ext = wb::eval(m, wb::parse(eval_formula), wb::SemanticsId::Fixpoint);
    auto labels = labels_of(m.frame, ext);
    j["extension"] = labels;
    if (!opt.is_json()) {
      std::cout << eval_formula << " : {";
      for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
      std::cout << "}\n";
    }
  }
  if (!dot_path.empty()) {
    wb::export_dot_file(m.frame, dot_path);
    if (!opt.is_json()) std::cout << "dot written to " << dot_path << "\n";
    j["dot"] = dot_path;
  }
  if (opt.is_json()) std::cout << j.dump(2) << "\n";
  return rc;
}

int run_translate(const Options& opt, const std::string& formula) {
  wb::Formula f = wb::parse(formula);
  std::string out = wb::print(wb::godel_gentzen(f));
  if (opt.is_json())
    std::cout << json{{"input", formula}, {"translated", out}}.dump(2) << "\n";
  else
    std::cout << out << "\n";
  return 0;
}

int run_represent(const Options& opt, const std::string& lattice_path,
                  const std::string& dot_path) {
  wb::Lattice l = wb::Lattice::load_file(lattice_path);
  wb::Representation rep = wb::represent(l);
  json j{{"states", rep.frame.states()}};
  json emb = json::object();
  for (int a = 0; a < l.size(); ++a) emb[l.label(a)] = labels_of(rep.frame, rep.embedding[a]);
  j["embedding"] = emb;
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["all_pass"] = rep.all_pass();
  if (!opt.is_json()) {
    std::cout << rep.frame.size() << " prime filters\n";
    for (int a = 0; a < l.size(); ++a) {
      auto labels = labels_of(rep.frame, rep.embedding[a]);
      std::cout << "  e(" << l.label(a) << ") = {";
      for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
      std::cout << "}\n";
    }
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name
                << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  if (!dot_path.empty()) {
    wb::export_dot_file(rep.frame, dot_path);
    j["dot"] = dot_path;
    if (!opt.is_json()) std::cout << "dot written to " << dot_path << "\n";
  }
  if (opt.is_json()) std::cout << j.dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for fundamental, ortho, compatibility, intuitionistic and classical "
               "propositional logic"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("WORKBENCH_JOBS")) opt.jobs = std::atoi(env);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "parallel workers (0 = default, 1 = serial)");
  app.fallthrough();

  std::string formula, model_path, semantics = "fixpoint";
  std::string logic_name, sequent_text, witness_path, expect;
  wb::Budget budget;
  bool trace = false;
  int n = 0, delta = 0;
  bool pseudo = false, verify = false;
  std::string eval_formula, dot_path, lattice_path, gg_formula;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and reprint a formula");
  parse_cmd->add_option("formula", formula, "formula text")->required();

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model file");
  eval_cmd->add_option("--model", model_path, "model JSON file")->required();
  eval_cmd->add_option("--formula", formula, "formula text")->required();
  eval_cmd->add_option("--semantics", semantics, "semantics")
      ->check(CLI::IsMember({"fixpoint", "fine"}));

  CLI::App* check_cmd = app.add_subcommand("check", "decide a sequent within budgets");
  check_cmd->add_option("--logic", logic_name, "logic")
      ->required()
      ->check(CLI::IsMember(
          {"fundamental", "ortho", "compatibility", "intuitionistic", "classical"}));
  check_cmd->add_option("--sequent", sequent_text, "sequent \"PHI |- PSI\"")->required();
  check_cmd->add_option("--max-size", budget.max_size, "countermodel search bound");
  check_cmd->add_option("--depth", budget.universe_depth, "negation stacking depth");
  check_cmd->add_flag("--trace", trace, "print the derivation on Valid");
  check_cmd->add_option("--witness", witness_path, "write countermodel JSON here");
  check_cmd->add_option("--expect", expect, "fail unless the verdict matches")
      ->check(CLI::IsMember({"valid", "invalid"}));

  CLI::App* sorites_cmd = app.add_subcommand("sorites", "build and inspect sorites models");
  sorites_cmd->add_option("--n", n, "number of predicates")->required();
  sorites_cmd->add_option("--delta", delta, "slack")->required();
  sorites_cmd->add_flag("--pseudo", pseudo, "pseudosymmetric variant with rejector states");
  sorites_cmd->add_flag("--verify-facts", verify, "check the extension identities");
  sorites_cmd->add_option("--eval", eval_formula, "evaluate a formula in the model");
  sorites_cmd->add_option("--dot", dot_path, "write the frame as graphviz dot");

  CLI::App* translate_cmd = app.add_subcommand("translate", "apply the double-negation translation");
  translate_cmd->add_option("--gg", gg_formula, "formula text")->required();

  CLI::App* represent_cmd =
      app.add_subcommand("represent", "prime-filter representation of a lattice");
  represent_cmd->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  represent_cmd->add_option("--dot", dot_path, "write the filter frame as graphviz dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (*parse_cmd) return run_parse(opt, formula);
    if (*eval_cmd) return run_eval(opt, model_path, formula, semantics);
    if (*check_cmd)
      return run_check(opt, logic_name, sequent_text, budget, trace, witness_path, expect);
    if (*sorites_cmd)
      return run_sorites(opt, n, delta, pseudo, verify, eval_formula, dot_path);
    if (*translate_cmd) return run_translate(opt, gg_formula);
    if (*represent_cmd) return run_represent(opt, lattice_path, dot_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
