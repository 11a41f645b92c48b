#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "assign/cost_matrix.hpp"
#include "assign/solvers.hpp"

namespace assign::bench {

// SplitMix64 with the standard published constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

struct CostRange {
  Cost lo = 0;
  Cost hi = 99;
};

// Row-major fill: entry = lo + next() % (hi - lo + 1), from a SplitMix64
// stream seeded with `seed`. Throws kInvalidRange when lo < 0 or lo > hi.
CostMatrix gen_instance(std::size_t k, std::uint64_t seed, CostRange range);

// Per-trial seed: the first SplitMix64 output for the state
//   base ^ (0x9E3779B97F4A7C15 * (k + 1)) ^ (0xC2B2AE3D27D4EB4F * (trial + 1))
// with wrapping 64-bit multiplication.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t k, std::size_t trial);

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t trials_per_size = 1;
  std::uint64_t seed = 0;
  CostRange cost_range;
  std::vector<SolverKind> solvers{kAllSolvers.begin(), kAllSolvers.end()};
  // Solver name -> largest K run; solvers absent from the map use
  // default_bench_cap.
  std::map<SolverKind, std::size_t> per_solver_caps;
  // Number of (k, trial) pairs timed at once.
  std::size_t threads = 1;
  bool warm_up = true;
};

// brute 11, fifo/lifo 12, everything else unbounded.
std::optional<std::size_t> default_bench_cap(SolverKind kind);

// Throws kInvalidRange when the config breaks its invariants.
void validate(const BenchConfig& config);

enum class RecordStatus { kOk, kSkippedByCap, kError };

struct BenchRecord {
  SolverKind solver = SolverKind::kBrute;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  RecordStatus status = RecordStatus::kOk;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t edges_generated = 0;
  std::uint64_t elapsed_ns = 0;
  Cost optimal_cost = 0;
  std::string error;  // Only for kError.

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct TrialIds {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
};

// Times a single solve with a monotonic clock around the solver call only.
// Solver errors propagate; `options.max_size` lifts the solver's own cap.
BenchRecord run_trial(SolverKind solver, const CostMatrix& m, const TrialIds& ids,
                      const SolveOptions& options = {});

// One instance per (k, trial), every enabled solver on it. Per-trial solver
// failures become kError rows; solvers above their cap produce kSkippedByCap
// rows. Ordered by (k, trial, solver name).
std::vector<BenchRecord> run_suite(const BenchConfig& config);

inline constexpr const char* kCsvHeader =
    "solver,k,seed,trial,nodes_expanded,edges_generated,elapsed_ns,optimal_cost";

// Header plus one LF-terminated line per record. Skipped rows carry -1 and
// error rows -2 in the four measurement columns.
std::string emit_csv(const std::vector<BenchRecord>& records);

// Median elapsed_ns per solver and size over kOk rows.
std::map<SolverKind, std::map<std::size_t, double>> median_elapsed(
    const std::vector<BenchRecord>& records);

// SVG 1.1 line chart: K on x, median elapsed_ns on a log10 y axis, one
// polyline and legend entry per solver with at least one measured point.
// Throws kInsufficientData without a measured solver or with fewer than two
// measured sizes.
std::string emit_svg_plot(const std::vector<BenchRecord>& records);

}  // namespace assign::bench
