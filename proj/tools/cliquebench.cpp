// Command-line front end: gen, attack, advise, bench, oracle.
//
// Exit codes: 0 success (for attack: some attack inverted), 2 usage or
// input error, 3 attacks ran but none inverted.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cliquebench/advisor.hpp"
#include "cliquebench/dimacs.hpp"
#include "cliquebench/harness.hpp"
#include "cliquebench/instance.hpp"
#include "cliquebench/oracle.hpp"
#include "cliquebench/records.hpp"

using namespace cliquebench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotInverted = 3;

struct SeedOption {
  std::uint64_t value = 0;
  bool given = false;

  std::uint64_t resolve() const {
    if (given) return value;
    if (const char* env = std::getenv("WORKBENCH_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw InputError(std::string("WORKBENCH_SEED is not an unsigned integer: ") + env);
      }
    }
    return 0;
  }
};

void add_seed(CLI::App* cmd, SeedOption& seed) {
  cmd->add_option_function<std::uint64_t>(
      "--seed",
      [&seed](const std::uint64_t& v) {
        seed.value = v;
        seed.given = true;
      },
      "root seed (falls back to WORKBENCH_SEED, then 0)");
}

std::size_t default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void print_params(std::ostream& out, const PlantParams& params) {
  out << "n = " << params.n << ", p = " << params.p << ", k = " << params.k;
  const double eps = params.epsilon();
  if (!std::isnan(eps)) out << ", epsilon = " << std::setprecision(6) << eps;
  out << '\n';
}

// Accepts both instance containers and bare DIMACS files.
PlantedInstance load_graph_or_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream stream(text);
  if (text.find("[metadata]") != std::string::npos) return read_instance(stream);
  PlantedInstance inst;
  inst.public_graph = read_dimacs(stream);
  inst.params.n = inst.public_graph.n();
  return inst;
}

struct GenArgs {
  std::size_t n = 0;
  double p = 0.5;
  std::size_t k = 0;
  SeedOption seed;
  std::string out;
};

int run_gen(const GenArgs& a) {
  PlantParams params{a.n, a.p, a.k};
  params.validate();
  if (params.k == 0) std::cerr << "warning: k = 0, writing an unplanted G(n,p) sample\n";
  const PlantedInstance inst = owf_evaluate(params, a.seed.resolve());
  write_instance_file(a.out, inst);
  print_params(std::cout, params);
  std::cout << "seed = " << inst.seed << ", edges = " << inst.public_graph.edge_count()
            << ", written to " << a.out << '\n';
  return kExitOk;
}

struct AttackArgs {
  std::string in;
  std::vector<std::string> algs;
  SeedOption seed;
  double budget_secs = 60.0;
  bool json = false;
  bool timings = false;
  std::uint64_t brute_budget = AttackOptions{}.brute_force_budget;
  std::uint64_t subset_budget = AttackOptions{}.spectral_subset_budget;
  std::size_t restarts = 1;
  std::size_t feige_t = 2;
  bool feige_asymptotic = false;
  double dekel_alpha = 0.5;
  double dekel_beta = 1.3;
};

AttackOptions attack_options(const AttackArgs& a) {
  AttackOptions opts;
  opts.greedy_restarts = a.restarts;
  opts.brute_force_budget = a.brute_budget;
  opts.spectral_subset_budget = a.subset_budget;
  opts.feige_t = a.feige_t;
  opts.feige_asymptotic_t = a.feige_asymptotic;
  opts.dekel_alpha = a.dekel_alpha;
  opts.dekel_beta = a.dekel_beta;
  return opts;
}

int run_attack(const AttackArgs& a) {
  PlantedInstance inst;
  try {
    inst = read_instance_file(a.in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto registry = make_registry(a.algs.empty() ? std::vector<std::string>{"all"} : a.algs,
                                      inst.params, attack_options(a));
  const RunAllResult run = run_all(inst, registry, Rng(a.seed.resolve()), {a.budget_secs});

  bool inverted = false;
  for (const auto& r : run.reports) inverted = inverted || r.inverted;
  if (a.json) {
    for (const auto& r : run.reports) std::cout << to_record(r, a.timings).dump() << '\n';
    Record best;
    best["schema"] = kRecordSchemaVersion;
    best["type"] = "run";
    best["params"] = to_record(inst.params);
    best["best_attack"] =
        run.best_index ? Record(run.reports[*run.best_index].attack_name) : Record(nullptr);
    best["best_size"] = run.best.size();
    best["inverted"] = inverted;
    std::cout << best.dump() << '\n';
  } else {
    print_params(std::cout, inst.params);
    std::cout << std::left << std::setw(12) << "attack" << std::setw(8) << "size" << std::setw(8)
              << "clique" << std::setw(10) << "inverted" << std::setw(9) << "matched"
              << std::setw(14) << "steps" << "time(s)\n";
    for (const auto& r : run.reports) {
      std::cout << std::left << std::setw(12) << r.attack_name << std::setw(8) << r.size
                << std::setw(8) << (r.is_valid_clique ? "yes" : "no") << std::setw(10)
                << (r.inverted ? "yes" : "no") << std::setw(9) << (r.matched_hidden ? "yes" : "no")
                << std::setw(14) << r.steps << std::fixed << std::setprecision(3) << r.wall_time
                << std::defaultfloat;
      if (!r.error.empty()) std::cout << "  error: " << r.error;
      if (r.budget_exceeded) std::cout << "  (budget exceeded)";
      std::cout << '\n';
    }
    std::cout << "best: " << run.best.size() << " vertices"
              << (run.best_index ? " from " + run.reports[*run.best_index].attack_name : "")
              << '\n';
  }
  return inverted ? kExitOk : kExitNotInverted;
}

struct AdviseArgs {
  double lambda = 128;
  double p = 0.5;
  double q = 0.6;
  double r_eps = 1.0;
  bool json = false;
};

int run_advise(const AdviseArgs& a) {
  AdvisorOptions opts;
  opts.q = a.q;
  opts.r_eps = a.r_eps;
  const auto rows = advise(a.lambda, a.p, opts);
  if (a.json) {
    for (const auto& r : rows) std::cout << to_record(r).dump() << '\n';
    return kExitOk;
  }
  std::cout << "security level lambda = " << a.lambda << ", p = " << a.p << '\n';
  write_advice_table(std::cout, rows);
  const Recommendation& all = rows.back();
  std::cout << "storage at n = " << to_string(*all.min_n) << ": "
            << to_string(storage_estimate(*all.min_n, 0.5)) << " bytes\n";
  return kExitOk;
}

struct BenchArgs {
  std::size_t n = 0;
  double p = 0.5;
  std::size_t k = 0;
  std::size_t trials = 1;
  AttackArgs attack;
  bool csv = false;
  std::string trials_csv;
  bool game = false;
  std::size_t threads = 0;
};

int run_bench(const BenchArgs& a) {
  const PlantParams params{a.n, a.p, a.k};
  params.validate();
  const auto registry = make_registry(
      a.attack.algs.empty() ? std::vector<std::string>{"greedy"} : a.attack.algs, params,
      attack_options(a.attack));
  ExperimentOptions opts;
  opts.run.budget_secs = a.attack.budget_secs;
  opts.threads = a.threads == 0 ? default_threads() : a.threads;
  const Rng root(a.attack.seed.resolve());

  if (a.game) {
    const DistinguishingSummary s = run_distinguishing_game(params, a.trials, registry, root, opts);
    if (a.attack.json) {
      std::cout << to_record(s).dump() << '\n';
    } else {
      std::cout << "distinguishing game: " << s.correct << "/" << s.trials
                << " correct, advantage " << s.advantage << ", planted trials " << s.planted_trials
                << ", inversions " << s.inversions << '\n';
    }
    return kExitOk;
  }

  const ExperimentSummary summary = run_experiment(params, a.trials, registry, root, opts);
  if (!a.trials_csv.empty()) {
    std::ofstream out(a.trials_csv);
    if (!out) throw std::runtime_error("cannot write " + a.trials_csv);
    write_trials_csv(out, summary, a.attack.timings);
  }
  if (a.csv) {
    write_summary_csv(std::cout, summary, a.attack.timings);
  } else if (a.attack.json) {
    for (const auto& t : summary.records) std::cout << to_record(t, a.attack.timings).dump() << '\n';
    std::cout << to_record(summary, a.attack.timings).dump() << '\n';
  } else {
    print_params(std::cout, params);
    std::cout << a.trials << " trials\n";
    std::cout << std::left << std::setw(12) << "attack" << std::setw(14) << "success" << std::setw(10)
              << "matched" << std::setw(12) << "mean size" << std::setw(10) << "min" << std::setw(10)
              << "max" << "mean time(s)\n";
    for (const auto& s : summary.attacks) {
      std::cout << std::left << std::setw(12) << s.attack_name << std::setw(14) << s.success_rate
                << std::setw(10) << s.matches << std::setw(12) << s.mean_size << std::setw(10)
                << s.min_size << std::setw(10) << s.max_size << s.mean_wall_time << '\n';
    }
  }
  return kExitOk;
}

struct OracleArgs {
  std::string in;
  bool json = false;
};

int run_oracle(const OracleArgs& a) {
  PlantedInstance inst;
  try {
    inst = load_graph_or_instance(a.in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const VertexSet best = max_clique_exact(inst.public_graph);
  if (a.json) {
    Record r;
    r["schema"] = kRecordSchemaVersion;
    r["type"] = "max_clique";
    r["n"] = inst.public_graph.n();
    r["size"] = best.size();
    Record members = Record::array();
    for (Vertex v : best) members.push_back(v);
    r["clique"] = std::move(members);
    std::cout << r.dump() << '\n';
  } else {
    std::cout << "maximum clique size " << best.size() << ":";
    for (Vertex v : best) std::cout << ' ' << v + 1;
    std::cout << '\n';
  }
  return kExitOk;
}

void add_attack_flags(CLI::App* cmd, AttackArgs& a) {
  cmd->add_option("--alg", a.algs, "greedy|metropolis|spectral|dekel|feige|brute|all (repeatable)")
      ->check(CLI::IsMember({"greedy", "metropolis", "spectral", "dekel", "feige", "brute", "all"}));
  add_seed(cmd, a.seed);
  cmd->add_option("--budget-secs", a.budget_secs, "wall-clock budget per attack; <= 0 disables");
  cmd->add_flag("--json", a.json, "line-delimited JSON records");
  cmd->add_flag("--timings", a.timings, "include wall times in structured output");
  cmd->add_option("--brute-budget", a.brute_budget, "prefixes the brute-force search may visit");
  cmd->add_option("--subset-budget", a.subset_budget, "seed subsets the boosted spectral attack may try");
  cmd->add_option("--restarts", a.restarts, "greedy restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--feige-t", a.feige_t, "Feige subset size t")->check(CLI::PositiveNumber);
  cmd->add_flag("--feige-asymptotic-t", a.feige_asymptotic, "t = ceil(ln n / ln ln n)");
  cmd->add_option("--dekel-alpha", a.dekel_alpha, "Dekel sampling probability");
  cmd->add_option("--dekel-beta", a.dekel_beta, "Dekel threshold offset");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted-clique one-way function workbench"};
  app.require_subcommand(1);
  int code = kExitOk;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "sample an instance f(n,p,k) and write it to a file");
  gen_cmd->add_option("--n", gen.n, "vertices")->required();
  gen_cmd->add_option("--p", gen.p, "edge probability");
  gen_cmd->add_option("--k", gen.k, "planted clique size")->required();
  add_seed(gen_cmd, gen.seed);
  gen_cmd->add_option("--out", gen.out, "instance file to write")->required();
  gen_cmd->callback([&] { code = run_gen(gen); });

  AttackArgs attack;
  auto* attack_cmd = app.add_subcommand("attack", "run attacks on an instance file");
  attack_cmd->add_option("--in", attack.in, "instance file")->required();
  add_attack_flags(attack_cmd, attack);
  attack_cmd->callback([&] { code = run_attack(attack); });

  AdviseArgs adv;
  auto* advise_cmd = app.add_subcommand("advise", "print secure parameter recommendations");
  advise_cmd->add_option("--lambda", adv.lambda, "security level in bits")->required();
  advise_cmd->add_option("--p", adv.p, "edge probability");
  advise_cmd->add_option("--q", adv.q, "exponent for 2^(lambda^q), in (1/2, 1]");
  advise_cmd->add_option("--r-eps", adv.r_eps, "SOS constant");
  advise_cmd->add_flag("--json", adv.json, "line-delimited JSON records");
  advise_cmd->callback([&] { code = run_advise(adv); });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "seeded experiment over many planted instances");
  bench_cmd->add_option("--n", bench.n, "vertices")->required();
  bench_cmd->add_option("--p", bench.p, "edge probability");
  bench_cmd->add_option("--k", bench.k, "planted clique size")->required();
  bench_cmd->add_option("--trials", bench.trials, "instances")->check(CLI::PositiveNumber);
  add_attack_flags(bench_cmd, bench.attack);
  bench_cmd->add_flag("--csv", bench.csv, "summary as CSV");
  bench_cmd->add_option("--trials-csv", bench.trials_csv, "also write per-trial CSV rows here");
  bench_cmd->add_flag("--game", bench.game, "play the planted-or-not distinguishing game");
  bench_cmd->add_option("--threads", bench.threads, "worker threads (default: all cores)");
  bench_cmd->callback([&] { code = run_bench(bench); });

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum clique of a small graph");
  oracle_cmd->add_option("--in", oracle.in, "instance or DIMACS file")->required();
  oracle_cmd->add_flag("--json", oracle.json, "JSON record");
  oracle_cmd->callback([&] { code = run_oracle(oracle); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
