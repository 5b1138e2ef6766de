#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "c2lab/error.hpp"
#include "verify.hpp"

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2, kBudgetRefusal = 3 };

c2lab::RouteSelection parse_routes(const std::string& route) {
  if (route == "all") return {true, true, true};
  if (route == "direct") return {true, false, false};
  if (route == "denom") return {false, true, false};
  if (route == "partition") return {false, false, true};
  throw c2lab::InvalidInput("unknown route " + route);
}

template <typename Report>
void emit(const Report& report, bool json) {
  if (json) {
    std::cout << c2lab::verify::to_json(report).dump(2) << '\n';
  } else {
    std::cout << c2lab::verify::to_table(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c2lab: c2 invariants of graphs over prime fields"};
  app.require_subcommand(1);
  bool json = false;
  unsigned threads = 1;
  app.add_flag("--json", json, "Machine-readable JSON report");
  app.add_option("--threads", threads, "Worker threads for point counting")->check(CLI::Range(1U, 256U));

  std::string graph_file;
  std::vector<std::uint32_t> primes{2};
  std::string route = "all";
  std::optional<std::uint32_t> vertex;
  std::string mode = "auto";
  std::uint64_t budget = c2lab::AssignmentSpace::kDefaultBudget;
  std::uint64_t enumeration_budget = 10'000'000;
  auto* compute = app.add_subcommand("compute", "c2 of one graph by the selected routes");
  compute->add_option("--graph", graph_file, "graph6 or JSON edge-list file")->required();
  compute->add_option("--prime", primes, "Prime(s), comma separated")->delimiter(',');
  compute->add_option("--route", route, "direct, denom, partition or all")
      ->check(CLI::IsMember({"direct", "denom", "partition", "all"}));
  compute->add_option("--vertex", vertex, "Only this decompletion vertex");
  compute->add_option("--mode", mode, "decompletion, graph or auto")
      ->check(CLI::IsMember({"auto", "decompletion", "graph"}));
  compute->add_option("--budget", budget, "Maximum point evaluations per count");
  compute->add_option("--enumeration-budget", enumeration_budget, "Maximum search nodes");

  std::string corpus_path;
  auto* completion = app.add_subcommand("verify-completion", "c2 of every decompletion over a corpus");
  completion->add_option("--corpus", corpus_path, "graph6 file or directory of JSON edge lists")
      ->required();
  completion->add_option("--primes", primes, "Primes, comma separated")->delimiter(',');
  completion->add_option("--route", route, "direct, denom, partition or all")
      ->check(CLI::IsMember({"direct", "denom", "partition", "all"}));
  completion->add_option("--budget", budget, "Maximum point evaluations per count");
  completion->add_option("--enumeration-budget", enumeration_budget, "Maximum search nodes");

  std::uint32_t sweep_prime = 2;
  auto* sweep = app.add_subcommand("sweep-involutions", "Exhaustive involution and orbit sweeps");
  sweep->add_option("--corpus", corpus_path, "graph6 file or directory of JSON edge lists")->required();
  sweep->add_option("--prime", sweep_prime, "2 for the S/R sweeps, odd for T orbit sweeps");
  sweep->add_option("--budget", enumeration_budget, "Maximum search nodes");

  std::uint64_t seed = 1;
  std::size_t rounds = 200;
  auto* identities = app.add_subcommand("check-identities", "Random-point polynomial identity suite");
  identities->add_option("--seed", seed, "Random seed");
  identities->add_option("--rounds", rounds, "Cases per identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    c2lab::CountOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    opts.enumeration_budget = enumeration_budget;
    namespace v = c2lab::verify;

    if (*compute) {
      const auto g = v::load_graph(graph_file);
      const bool regular = g.is_simple() && g.is_regular(4) && g.is_connected();
      const bool decompletion = mode == "decompletion" || (mode == "auto" && regular);
      const auto result = v::compute(graph_file, g, primes, parse_routes(route),
                                     vertex, decompletion, route != "all", opts);
      emit(result, json);
      return result.ok() ? kOk : kViolation;
    }
    if (*completion) {
      const auto corpus = v::load_corpus(corpus_path);
      for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
      const auto report = v::verify_completion(corpus, primes, parse_routes(route), opts);
      emit(report, json);
      if (report.violations()) return kViolation;
      return report.budget_refusals() ? kBudgetRefusal : kOk;
    }
    if (*sweep) {
      const auto corpus = v::load_corpus(corpus_path);
      for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
      const auto report = v::sweep_involutions(corpus, sweep_prime, enumeration_budget);
      emit(report, json);
      if (report.violations()) return kViolation;
      return report.budget_refusals() ? kBudgetRefusal : kOk;
    }
    const auto report = v::check_identities(seed, rounds);
    emit(report, json);
    return report.ok() ? kOk : kViolation;
  } catch (const c2lab::BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << '\n';
    return kBudgetRefusal;
  } catch (const c2lab::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const c2lab::InvalidInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const c2lab::Error& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
}
