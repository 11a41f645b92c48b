#include "assign/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "assign/bench.hpp"
#include "assign/matrix_io.hpp"
#include "assign/solvers.hpp"

namespace assign::cli {

namespace {

using nlohmann::json;

constexpr const char* kCapVariable = "ASSIGNBENCH_MAX_K";

// Optional override of the brute-force and blind branch-and-bound caps.
std::optional<std::size_t> cap_override() {
  const char* raw = std::getenv(kCapVariable);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string solver_list() {
  std::string names;
  for (SolverKind kind : kAllSolvers) {
    if (!names.empty()) names += ", ";
    names += solver_name(kind);
  }
  return names;
}

CostMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  std::size_t used = 0;
  if (s.empty() || s.front() == '-') throw std::invalid_argument("'" + s + "' is not a count");
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("'" + s + "' is not a count");
  return v;
}

// "3..10" (inclusive) or "3,5,8".
std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, dots));
    const std::uint64_t hi = parse_u64(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("size range " + text + " is empty");
    for (std::uint64_t k = lo; k <= hi; ++k) sizes.push_back(k);
  } else {
    for (const auto& item : split(text, ',')) sizes.push_back(parse_u64(item));
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes in '" + text + "'");
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
    throw std::invalid_argument("sizes must be >= 1");
  }
  return sizes;
}

bench::CostRange parse_cost_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("cost range must be LO..HI");
  bench::CostRange range{static_cast<Cost>(parse_u64(text.substr(0, dots))),
                         static_cast<Cost>(parse_u64(text.substr(dots + 2)))};
  if (range.lo > range.hi) throw std::invalid_argument("cost range " + text + " is empty");
  return range;
}

json report_json(SolverKind kind, const CostMatrix& m, const SolveReport& report) {
  json j;
  j["solver"] = solver_name(kind);
  j["input_digest"] = matrix_digest(m);
  j["optimal_cost"] = report.optimal_cost;
  j["assignment"] = report.assignment.mapping;
  j["nodes_expanded"] = report.nodes_expanded;
  j["edges_generated"] = report.edges_generated;
  j["elapsed_ns"] = report.elapsed.count();
  if (report.certificate) {
    j["certificate"] = {{"row_potentials", report.certificate->row_potentials},
                        {"col_potentials", report.certificate->col_potentials}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

std::string join(const std::vector<Cost>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return "[" + out + "]";
}

int cmd_solve(const std::string& path, const std::string& solver, bool as_json,
              std::ostream& out, std::ostream& err) {
  const auto kind = parse_solver(solver);
  if (!kind) {
    err << "error: unknown solver '" << solver << "'\n"
        << "usage: assignbench solve PATH --solver {" << solver_list() << "} [--json]\n";
    return kExitOperational;
  }
  CostMatrix m;
  try {
    m = load_matrix(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  SolveReport report;
  try {
    report = solve(*kind, m, SolveOptions{cap_override()});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOperational;
  }

  if (as_json) {
    out << report_json(*kind, m, report).dump() << '\n';
    return kExitOk;
  }
  out << "solver: " << solver_name(*kind) << '\n'
      << "optimal cost: " << report.optimal_cost << '\n';
  for (std::size_t i = 0; i < report.assignment.size(); ++i) {
    out << "worker " << i << " -> job " << report.assignment.mapping[i] << '\n';
  }
  out << "nodes expanded: " << report.nodes_expanded << '\n'
      << "edges generated: " << report.edges_generated << '\n'
      << "elapsed ns: " << report.elapsed.count() << '\n';
  if (report.certificate) {
    out << "row potentials: " << join(report.certificate->row_potentials) << '\n'
        << "col potentials: " << join(report.certificate->col_potentials) << '\n';
  }
  return kExitOk;
}

struct BenchFlags {
  std::string sizes = "3..8";
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  std::string solvers;
  std::string csv;
  std::string svg;
  std::string cost_range = "0..99";
  std::size_t threads = 1;
  bool no_warm_up = false;
};

bool write_file(const std::string& path, const std::string& data, std::ostream& out,
                std::ostream& err) {
  if (path == "-") {
    out << data;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << data;
  f.close();
  if (!f) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

int cmd_bench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  bench::BenchConfig config;
  try {
    config.sizes = parse_sizes(flags.sizes);
    config.trials_per_size = flags.trials;
    config.seed = flags.seed;
    config.cost_range = parse_cost_range(flags.cost_range);
    config.threads = flags.threads;
    config.warm_up = !flags.no_warm_up;
    if (!flags.solvers.empty()) {
      config.solvers.clear();
      for (const auto& name : split(flags.solvers, ',')) {
        const auto kind = parse_solver(name);
        if (!kind) throw std::invalid_argument("unknown solver '" + name + "'");
        config.solvers.push_back(*kind);
      }
    }
    if (auto cap = cap_override()) {
      config.per_solver_caps[SolverKind::kBrute] = *cap;
      config.per_solver_caps[SolverKind::kBnbFifo] = *cap;
      config.per_solver_caps[SolverKind::kBnbLifo] = *cap;
    }
    bench::validate(config);
    if (!flags.svg.empty() &&
        std::set<std::size_t>(config.sizes.begin(), config.sizes.end()).size() < 2) {
      throw Error(ErrorCode::kInsufficientData, "the plot needs at least two sizes");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto records = bench::run_suite(config);
  std::size_t skipped = 0;
  std::size_t failed = 0;
  for (const auto& r : records) {
    if (r.status == bench::RecordStatus::kSkippedByCap) ++skipped;
    if (r.status == bench::RecordStatus::kError) {
      ++failed;
      err << "warning: " << solver_name(r.solver) << " k=" << r.k << " trial=" << r.trial
          << ": " << r.error << '\n';
    }
  }
  if (skipped > 0) err << "note: " << skipped << " rows skipped by size cap\n";

  std::string svg;
  if (!flags.svg.empty()) {
    try {
      svg = bench::emit_svg_plot(records);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  const std::string csv_path = flags.csv.empty() && flags.svg.empty() ? "-" : flags.csv;
  if (!csv_path.empty() && !write_file(csv_path, bench::emit_csv(records), out, err)) {
    return kExitOperational;
  }
  if (!flags.svg.empty() && !write_file(flags.svg, svg, out, err)) return kExitOperational;
  return kExitOk;
}

struct CheckTally {
  std::string name;
  std::size_t runs = 0;
  std::optional<std::string> first_failure;

  void record(bool ok, const std::string& detail) {
    ++runs;
    if (!ok && !first_failure) first_failure = detail;
  }
};

// Every generated node with at most this many unassigned workers gets its
// bound compared against a brute-forced completion.
constexpr std::size_t kSpotCheckDepth = 6;
constexpr std::size_t kSpotCheckNodes = 256;

Cost best_completion(const CostMatrix& m, const SearchNode& node) {
  const std::size_t k = m.size();
  std::vector<std::size_t> free_jobs;
  std::vector<bool> used(k, false);
  for (std::size_t j : node.partial_mapping) used[j] = true;
  for (std::size_t j = 0; j < k; ++j) {
    if (!used[j]) free_jobs.push_back(j);
  }
  Cost best = std::numeric_limits<Cost>::max();
  for (const Assignment& p : permutations(free_jobs.size())) {
    Cost total = node.g_cost;
    for (std::size_t t = 0; t < p.size(); ++t) {
      total = checked_add(total, m(node.depth() + t, free_jobs[p.mapping[t]]));
    }
    best = std::min(best, total);
  }
  return best;
}

void verify_instance(const CostMatrix& m, const std::string& label,
                     std::vector<CheckTally>& tallies) {
  const auto cap = cap_override();
  BruteForceOptions brute_options;
  if (cap) brute_options.max_size = *cap;
  const SolveReport oracle = solve_brute_force(m, brute_options);

  std::vector<std::pair<SolverKind, SolveReport>> reports;
  std::vector<ExploredTreeStats> tree_stats;
  reports.emplace_back(SolverKind::kHungarian, solve_hungarian(m));
  std::vector<SearchNode> sampled;
  for (SolverKind kind : kAllSolvers) {
    const auto strategy = bnb_strategy(kind);
    if (!strategy) continue;
    BranchBoundOptions options;
    if (cap) options.blind_max_size = *cap;
    if (*strategy == Strategy::kAStar) {
      options.on_generate = [&](const SearchNode& node) {
        if (m.size() - node.depth() <= kSpotCheckDepth && sampled.size() < kSpotCheckNodes) {
          sampled.push_back(node);
        }
      };
    }
    auto result = solve_bnb_detailed(m, *strategy, options);
    reports.emplace_back(kind, std::move(result.report));
    tree_stats.push_back(result.stats);
  }

  for (const auto& [kind, report] : reports) {
    const bool agree = report.optimal_cost == oracle.optimal_cost;
    tallies[0].record(agree, label + ": " + std::string(solver_name(kind)) + " returned " +
                                 std::to_string(report.optimal_cost) + ", brute force " +
                                 std::to_string(oracle.optimal_cost));
    bool consistent = false;
    try {
      consistent = assignment_cost(m, report.assignment) == report.optimal_cost;
    } catch (const Error&) {
    }
    tallies[1].record(consistent, label + ": " + std::string(solver_name(kind)) +
                                      " assignment does not match its cost");
  }
  const auto violation = verify_certificate(m, reports.front().second);
  tallies[2].record(!violation, label + ": " + (violation ? violation->detail : ""));
  for (const auto& stats : tree_stats) {
    const auto issue = tree_stats_check(stats);
    tallies[3].record(!issue, label + ": " + issue.value_or(""));
  }
  for (const SearchNode& node : sampled) {
    const Cost completion = best_completion(m, node);
    tallies[4].record(node.f_bound() <= completion,
                      label + ": bound " + std::to_string(node.f_bound()) +
                          " exceeds completion " + std::to_string(completion));
  }
}

int cmd_verify(const std::optional<std::string>& path, const std::vector<std::uint64_t>& random,
               std::ostream& out, std::ostream& err) {
  std::vector<CheckTally> tallies;
  for (const char* name : {"cost agreement with brute force", "assignment matches reported cost",
                           "hungarian dual certificate",
                           "explored tree has one edge per non-root node",
                           "A* bound admissibility spot-check"}) {
    tallies.push_back(CheckTally{name, 0, std::nullopt});
  }
  std::vector<std::pair<std::string, CostMatrix>> instances;
  if (path) {
    try {
      instances.emplace_back(*path, load_matrix(*path));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  } else {
    const std::size_t k = random[0];
    const std::size_t count = random[1];
    const std::uint64_t seed = random[2];
    for (std::size_t t = 0; t < count; ++t) {
      const std::uint64_t s = bench::trial_seed(seed, k, t);
      instances.emplace_back("random #" + std::to_string(t) + " (seed " + std::to_string(s) + ")",
                             bench::gen_instance(k, s, bench::CostRange{0, 99}));
    }
  }

  try {
    for (const auto& [label, m] : instances) verify_instance(m, label, tallies);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOperational;
  }

  bool all_ok = true;
  for (const auto& t : tallies) {
    if (t.first_failure) {
      all_ok = false;
      out << "FAIL " << t.name << " (" << t.runs << " checks): " << *t.first_failure << '\n';
    } else {
      out << "PASS " << t.name << " (" << t.runs << " checks)\n";
    }
  }
  out << instances.size() << " instance(s) verified\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced assignment solvers and benchmark harness", "assignbench"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve one matrix file");
  std::string solve_path;
  std::string solver = "hungarian";
  bool as_json = false;
  solve_cmd->add_option("path", solve_path, "Matrix file")->required();
  solve_cmd->add_option("--solver,-s", solver, "One of: " + solver_list());
  solve_cmd->add_flag("--json", as_json, "Emit one JSON object");

  auto* bench_cmd = app.add_subcommand("bench", "Time every solver on seeded random instances");
  BenchFlags flags;
  bench_cmd->add_option("--sizes", flags.sizes, "Range LO..HI or comma list");
  bench_cmd->add_option("--trials", flags.trials, "Instances per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", flags.seed, "Base seed");
  bench_cmd->add_option("--solvers", flags.solvers, "Comma list (default: all)");
  bench_cmd->add_option("--csv", flags.csv, "CSV output path ('-' for stdout)");
  bench_cmd->add_option("--svg", flags.svg, "SVG plot output path");
  bench_cmd->add_option("--cost-range", flags.cost_range, "Inclusive LO..HI");
  bench_cmd->add_option("--threads", flags.threads, "Trials timed concurrently")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-warmup", flags.no_warm_up, "Skip the discarded warm-up solves");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all solvers against brute force");
  std::string verify_path;
  std::vector<std::uint64_t> random;
  auto* path_opt = verify_cmd->add_option("path", verify_path, "Matrix file");
  auto* random_opt =
      verify_cmd->add_option("--random", random, "K N SEED: N seeded random K x K instances")
          ->expected(3);
  path_opt->excludes(random_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (solve_cmd->parsed()) return cmd_solve(solve_path, solver, as_json, out, err);
  if (bench_cmd->parsed()) return cmd_bench(flags, out, err);
  if (verify_path.empty() && random.empty()) {
    err << "error: verify needs a matrix file or --random K N SEED\n";
    return kExitUsage;
  }
  std::optional<std::string> path;
  if (!verify_path.empty()) path = verify_path;
  return cmd_verify(path, random, out, err);
}

}  // namespace assign::cli
