#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/hunt.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/oracle.hpp"
#include "pancyclic/pipeline.hpp"
#include "pancyclic/rotation.hpp"
#include "pancyclic/util.hpp"

using namespace pancyclic;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

nlohmann::json profile_json(const Graph& g, const ConditionProfile& prof) {
  nlohmann::json j;
  j["n"] = g.n();
  j["alpha"] = prof.alpha;
  j["kappa"] = prof.kappa;
  j["min_degree"] = prof.min_degree;
  return j;
}

int run_check(const std::string& file, const std::string& format) {
  Graph g = load_graph_file(file, format);
  Certificate cert = certify_pancyclic(g);
  nlohmann::json j;
  j["profile"] = profile_json(g, cert.profile);
  j["certificate"] = nlohmann::json::parse(cert.to_json());
  j["pancyclic"] = cert.pancyclic();
  std::cout << j.dump(2) << "\n";
  if (cert.hypothesis_holds() && !cert.pancyclic()) return kViolated;
  return kOk;
}

int run_find_cycle(const std::string& file, const std::string& format, int ell) {
  Graph g = load_graph_file(file, format);
  if (ell < 3 || ell > g.n()) {
    std::cerr << "find-cycle: length must lie in [3, n]\n";
    return kInputError;
  }
  PipelineParams params;
  ConditionProfile prof = condition_profile(g, params.alpha_budget);
  std::string tag;
  std::optional<OrientedCycle> cyc;
  if (prof.kappa > prof.alpha) {
    if (ell == g.n()) {
      if (auto h = ce_hamilton(g, prof)) {
        cyc = *h;
        tag = "hamilton";
      }
    } else {
      DispatchWindows w = dispatch_windows(g.n(), prof.alpha, ell, params.delta);
      Expected<RangeOutcome> r =
          (ell <= 7 || w.lower) ? lower_range(g, ell, params, prof)
          : w.upper             ? upper_range(g, ell, params, prof)
          : w.middle            ? middle_range(g, ell, params, prof)
                                : Expected<RangeOutcome>::fail("no window");
      if (r) {
        cyc = r->cycle;
        tag = r->provenance;
      }
    }
  }
  if (!cyc) {
    OracleResult o = brute_find_cycle(g, ell, params.search_budget);
    if (o.answer == OracleAnswer::found) {
      cyc = *o.cycle;
      tag = "search";
    } else {
      nlohmann::json j;
      j["length"] = ell;
      j["found"] = false;
      j["reason"] = o.answer == OracleAnswer::none
                        ? "no cycle of this length exists"
                        : "search budget exhausted";
      std::cout << j.dump(2) << "\n";
      return o.answer == OracleAnswer::none ? kViolated : kBudget;
    }
  }
  nlohmann::json j;
  j["length"] = ell;
  j["found"] = true;
  j["route"] = tag;
  j["cycle"] = cyc->vertices();
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int run_hunt(int n_max, const std::string& g6file, int jobs) {
  HuntReport rep =
      g6file.empty() ? hunt(n_max, PipelineParams{}, jobs) : hunt_file(g6file);
  std::cout << nlohmann::json::parse(rep.to_json()).dump(2) << "\n";
  return rep.counterexamples.empty() && rep.disagreements.empty() ? kOk : kViolated;
}

int run_lemma_test(const std::string& name, long long trials, uint64_t seed) {
  auto res = lemma_test(name, trials, seed);
  if (!res) {
    std::cerr << res.error() << "\n";
    std::cerr << "known ids:";
    for (const auto& id : lemma_test_names()) std::cerr << " " << id;
    std::cerr << "\n";
    return kInputError;
  }
  std::cout << nlohmann::json::parse(res->to_json()).dump(2) << "\n";
  return res->pass() ? kOk : kViolated;
}

int run_profile(const std::string& file, const std::string& format) {
  Graph g = load_graph_file(file, format);
  ConditionProfile prof = condition_profile(g);
  std::cout << profile_json(g, prof).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle-spectrum toolkit: certificates, hunts, lemma tests"};
  app.require_subcommand(1);

  std::string file, format = "graph6", g6file, name;
  int ell = 0, n_max = 7, jobs = 1;
  long long trials = 100;
  uint64_t seed = 7;

  auto* check = app.add_subcommand("check", "profile + certificate JSON");
  check->add_option("file", file)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* fc = app.add_subcommand("find-cycle", "one cycle of a given length");
  fc->add_option("file", file)->required();
  fc->add_option("--length", ell)->required();
  fc->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* hu = app.add_subcommand("hunt", "exhaustive counterexample scan");
  hu->add_option("--n-max", n_max)->check(CLI::Range(1, 7));
  hu->add_option("--graph6", g6file);
  hu->add_option("--jobs", jobs)->check(CLI::Range(1, 64));

  auto* lt = app.add_subcommand("lemma-test", "randomized invariant suite");
  lt->add_option("--name", name)->required();
  lt->add_option("--trials", trials);
  lt->add_option("--seed", seed);

  auto* pr = app.add_subcommand("profile", "n, alpha, kappa, min degree");
  pr->add_option("file", file)->required();
  pr->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (app.got_subcommand(check)) return run_check(file, format);
    if (app.got_subcommand(fc)) return run_find_cycle(file, format, ell);
    if (app.got_subcommand(hu)) return run_hunt(n_max, g6file, jobs);
    if (app.got_subcommand(lt)) return run_lemma_test(name, trials, seed);
    if (app.got_subcommand(pr)) return run_profile(file, format);
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
