#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uasc/algebra_file.hpp"
#include "uasc/admissibility.hpp"
#include "uasc/discriminator.hpp"
#include "uasc/free_algebra.hpp"
#include "uasc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitInconsistent = 3;

uasc::GeneratingClass load_class(const std::string& path) {
  auto named = uasc::load_algebra_file(path);
  std::vector<uasc::FiniteAlgebra> members;
  for (auto& n : named) members.push_back(std::move(n.algebra));
  return uasc::GeneratingClass(std::move(members));
}

int run(int argc, char** argv) {
  CLI::App app{"Structural completeness toolkit for finite algebras"};
  app.require_subcommand(1);

  uasc::Limits limits;

  std::string file;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "parse and validate an algebra file");
  validate->add_option("file", file)->required();

  auto* free_cmd = app.add_subcommand("free", "build a finite-rank free algebra");
  int rank = 1;
  bool show_terms = false;
  free_cmd->add_option("file", file)->required();
  free_cmd->add_option("-k,--rank", rank, "number of free generators")->required();
  free_cmd->add_option("--cap", limits.free_element_cap, "element cap");
  free_cmd->add_flag("--terms", show_terms, "print every witness term");

  auto* disc = app.add_subcommand("disc", "search for a discriminator term");
  disc->add_option("file", file)->required();
  disc->add_option("--cap", limits.free_element_cap, "element cap");

  auto* verdict = app.add_subcommand("verdict", "SC/ASC verdict for the generated quasivariety");
  uasc::RefuteBudget verdict_refute{2, 2, 2, 10, 50000};
  bool no_refute = false;
  verdict->add_option("file", file)->required();
  verdict->add_flag("--json", json, "machine-readable report");
  verdict->add_option("--cap", limits.free_element_cap, "element cap");
  verdict->add_flag("--no-refute", no_refute,
                    "skip the refutation search when no discriminator term exists");

  auto* classify_cmd = app.add_subcommand("classify", "classify quasi-identities");
  std::string q_text;
  std::string q_file;
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("-q,--quasi", q_text, "quasi-identity to classify");
  classify_cmd->add_option("-Q,--corpus", q_file,
                           "file with one quasi-identity per line");
  classify_cmd->add_flag("--json", json, "machine-readable report");

  auto* refute = app.add_subcommand("refute-sc", "search for an admissible quasi-identity failing in the class");
  uasc::RefuteBudget budget;
  refute->add_option("file", file)->required();
  refute->add_option("--max-vars", budget.max_vars)->required();
  refute->add_option("--max-premises", budget.max_premises)->required();
  refute->add_option("--max-depth", budget.max_depth)->required();
  refute->add_option("--max-nodes", budget.max_total_nodes,
                     "total term nodes per premise set");
  refute->add_option("--max-candidates", budget.max_candidates,
                     "premise sets examined before giving up");
  refute->add_flag("--json", json, "machine-readable report");

  auto* survey = app.add_subcommand("survey", "random-algebra survey");
  uasc::SurveyParams params;
  params.limits.free_element_cap = 6000;
  survey->add_option("--size", params.size)->required();
  survey->add_option("--arity", params.arities, "operation arities")
      ->required()
      ->delimiter(',');
  survey->add_option("--samples", params.samples)->required();
  survey->add_option("--seed", params.seed);
  survey->add_option("--cap", params.limits.free_element_cap,
                     "per-sample closure element cap");
  survey->add_option("--threads", params.threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      auto named = uasc::load_algebra_file(file);
      std::cout << "ok: " << named.size() << " algebra(s) over "
                << named.front().algebra.sig.symbols.size() << " operation(s)\n";
      return kExitOk;
    }

    if (*free_cmd) {
      auto K = load_class(file);
      uasc::TermFunctionAlgebra f = uasc::free_algebra(K, rank, limits);
      std::cout << "size " << f.size() << "\n";
      if (show_terms)
        for (std::size_t e = 0; e < f.size(); ++e)
          std::cout << e << ": " << f.witness(static_cast<int>(e)).to_string()
                    << "\n";
      return kExitOk;
    }

    if (*disc) {
      auto K = load_class(file);
      uasc::DiscSearch r = uasc::decide_discriminator(K, limits);
      switch (r.status) {
        case uasc::DiscStatus::found:
          if (r.term)
            std::cout << r.term->to_string() << "\n";
          else
            std::cout << "exists (" << r.note << ")\n";
          return kExitOk;
        case uasc::DiscStatus::none:
          std::cout << "none\n";
          return kExitOk;
        default:
          std::cout << "unknown(budget)\n";
          return kExitCapacity;
      }
    }

    if (*verdict) {
      auto K = load_class(file);
      uasc::VerdictOptions opts;
      opts.limits = limits;
      opts.refute = verdict_refute;
      opts.run_refutation = !no_refute;
      uasc::Verdict v = uasc::sc_verdict(K, opts);
      if (json)
        std::cout << uasc::verdict_to_json(v).dump(2) << "\n";
      else
        std::cout << uasc::verdict_to_text(v);
      if (v.consequence && !v.consequence->pass) return kExitInconsistent;
      if (!v.capacity_note.empty()) return kExitCapacity;
      return kExitOk;
    }

    if (*classify_cmd) {
      auto K = load_class(file);
      if (q_text.empty() == q_file.empty())
        throw uasc::Error("classify needs exactly one of -q or -Q");
      std::vector<uasc::QuasiIdentity> qs;
      if (!q_text.empty()) {
        qs.push_back(uasc::parse_quasi_identity(q_text, K.signature()));
      } else {
        std::ifstream in(q_file);
        if (!in) throw uasc::Error("cannot open '" + q_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        qs = uasc::parse_quasi_identity_lines(buf.str(), K.signature());
      }
      for (const auto& q : qs) {
        uasc::Classification c = uasc::classify(K, q, limits);
        if (json)
          std::cout << uasc::classification_to_json(c).dump(2) << "\n";
        else
          std::cout << uasc::classification_to_text(c) << "\n";
      }
      return kExitOk;
    }

    if (*refute) {
      auto K = load_class(file);
      uasc::RefuteResult r = uasc::refute_sc(K, budget, limits);
      if (json) {
        std::cout << uasc::refute_to_json(r).dump(2) << "\n";
        return r.witness || r.search_exhausted ? kExitOk : kExitCapacity;
      }
      if (r.witness) {
        std::cout << r.witness->to_string() << "\n";
        return kExitOk;
      }
      std::cout << (r.search_exhausted ? "none\n" : "none (budget)\n");
      return r.search_exhausted ? kExitOk : kExitCapacity;
    }

    if (*survey) {
      uasc::SurveyReport r = uasc::run_survey(params);
      std::cout << uasc::survey_to_json(r).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const uasc::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const uasc::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const uasc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
