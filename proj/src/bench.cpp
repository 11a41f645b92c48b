#include "assign/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

namespace assign::bench {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CostMatrix gen_instance(std::size_t k, std::uint64_t seed, CostRange range) {
  if (range.lo < 0 || range.lo > range.hi) {
    throw Error(ErrorCode::kInvalidRange, "cost range [" + std::to_string(range.lo) + ", " +
                                              std::to_string(range.hi) + "] is invalid");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(range.hi) - static_cast<std::uint64_t>(range.lo) + 1;
  SplitMix64 rng(seed);
  SquareGrid grid(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Cost& c : grid.row(i)) c = range.lo + static_cast<Cost>(rng.next() % span);
  }
  return CostMatrix(std::move(grid));
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t k, std::size_t trial) {
  const std::uint64_t state = base_seed ^ (0x9E3779B97F4A7C15ULL * (k + 1)) ^
                              (0xC2B2AE3D27D4EB4FULL * (trial + 1));
  return SplitMix64(state).next();
}

std::optional<std::size_t> default_bench_cap(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBrute: return 11;
    case SolverKind::kBnbFifo:
    case SolverKind::kBnbLifo: return 12;
    default: return std::nullopt;
  }
}

void validate(const BenchConfig& config) {
  if (config.sizes.empty()) throw Error(ErrorCode::kInvalidRange, "no sizes requested");
  if (config.trials_per_size < 1) throw Error(ErrorCode::kInvalidRange, "trials must be >= 1");
  if (config.cost_range.lo < 0 || config.cost_range.lo > config.cost_range.hi) {
    throw Error(ErrorCode::kInvalidRange, "cost range must satisfy 0 <= lo <= hi");
  }
  if (config.solvers.empty()) throw Error(ErrorCode::kInvalidRange, "no solvers requested");
}

namespace {

std::optional<std::size_t> cap_for(const BenchConfig& config, SolverKind kind) {
  if (auto it = config.per_solver_caps.find(kind); it != config.per_solver_caps.end()) {
    return it->second;
  }
  return default_bench_cap(kind);
}

BenchRecord marker(SolverKind solver, const TrialIds& ids, RecordStatus status) {
  BenchRecord r;
  r.solver = solver;
  r.k = ids.k;
  r.seed = ids.seed;
  r.trial = ids.trial;
  r.status = status;
  return r;
}

std::vector<SolverKind> sorted_solvers(const BenchConfig& config) {
  std::set<SolverKind> unique(config.solvers.begin(), config.solvers.end());
  std::vector<SolverKind> out(unique.begin(), unique.end());
  std::sort(out.begin(), out.end(), [](SolverKind a, SolverKind b) {
    return solver_name(a) < solver_name(b);
  });
  return out;
}

std::vector<BenchRecord> run_one(const BenchConfig& config,
                                 const std::vector<SolverKind>& solvers, const TrialIds& ids) {
  std::vector<BenchRecord> out;
  const CostMatrix m = gen_instance(ids.k, ids.seed, config.cost_range);
  for (SolverKind solver : solvers) {
    const auto cap = cap_for(config, solver);
    if (cap && ids.k > *cap) {
      out.push_back(marker(solver, ids, RecordStatus::kSkippedByCap));
      continue;
    }
    try {
      out.push_back(run_trial(solver, m, ids, SolveOptions{cap}));
    } catch (const std::exception& e) {
      BenchRecord r = marker(solver, ids, RecordStatus::kError);
      r.error = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

BenchRecord run_trial(SolverKind solver, const CostMatrix& m, const TrialIds& ids,
                      const SolveOptions& options) {
  const SolveReport report = solve(solver, m, options);
  BenchRecord r;
  r.solver = solver;
  r.k = ids.k;
  r.seed = ids.seed;
  r.trial = ids.trial;
  r.nodes_expanded = report.nodes_expanded;
  r.edges_generated = report.edges_generated;
  r.elapsed_ns = static_cast<std::uint64_t>(report.elapsed.count());
  r.optimal_cost = report.optimal_cost;
  return r;
}

std::vector<BenchRecord> run_suite(const BenchConfig& config) {
  validate(config);
  const std::vector<SolverKind> solvers = sorted_solvers(config);

  std::vector<TrialIds> work;
  for (std::size_t k : config.sizes) {
    for (std::size_t t = 0; t < config.trials_per_size; ++t) {
      work.push_back(TrialIds{k, trial_seed(config.seed, k, t), t});
    }
  }
  std::sort(work.begin(), work.end(), [](const TrialIds& a, const TrialIds& b) {
    return a.k != b.k ? a.k < b.k : a.trial < b.trial;
  });
  work.erase(std::unique(work.begin(), work.end(),
                         [](const TrialIds& a, const TrialIds& b) {
                           return a.k == b.k && a.trial == b.trial;
                         }),
             work.end());

  if (config.warm_up) {
    std::size_t last_k = 0;
    bool first = true;
    for (const TrialIds& ids : work) {
      if (!first && ids.k == last_k) continue;
      first = false;
      last_k = ids.k;
      run_one(config, solvers, ids);
    }
  }

  std::vector<std::vector<BenchRecord>> slots(work.size());
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, work.size()));
  if (threads == 1) {
    for (std::size_t w = 0; w < work.size(); ++w) slots[w] = run_one(config, solvers, work[w]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t w = next++; w < work.size(); w = next++) {
          slots[w] = run_one(config, solvers, work[w]);
        }
      });
    }
  }

  std::vector<BenchRecord> records;
  for (auto& slot : slots) {
    for (auto& r : slot) records.push_back(std::move(r));
  }
  return records;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const BenchRecord& r : records) {
    out += solver_name(r.solver);
    out += ',' + std::to_string(r.k) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.trial) + ',';
    if (r.status == RecordStatus::kOk) {
      out += std::to_string(r.nodes_expanded) + ',' + std::to_string(r.edges_generated) + ',' +
             std::to_string(r.elapsed_ns) + ',' + std::to_string(r.optimal_cost);
    } else {
      const char* v = r.status == RecordStatus::kSkippedByCap ? "-1" : "-2";
      out += std::string(v) + ',' + v + ',' + v + ',' + v;
    }
    out += '\n';
  }
  return out;
}

std::map<SolverKind, std::map<std::size_t, double>> median_elapsed(
    const std::vector<BenchRecord>& records) {
  std::map<SolverKind, std::map<std::size_t, std::vector<double>>> samples;
  for (const BenchRecord& r : records) {
    if (r.status == RecordStatus::kOk) {
      samples[r.solver][r.k].push_back(static_cast<double>(r.elapsed_ns));
    }
  }
  std::map<SolverKind, std::map<std::size_t, double>> medians;
  for (auto& [solver, by_k] : samples) {
    for (auto& [k, values] : by_k) {
      std::sort(values.begin(), values.end());
      const std::size_t n = values.size();
      medians[solver][k] = n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
    }
  }
  return medians;
}

namespace {

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b"};

}  // namespace

std::string emit_svg_plot(const std::vector<BenchRecord>& records) {
  const auto medians = median_elapsed(records);
  std::set<std::size_t> sizes;
  for (const auto& [solver, by_k] : medians) {
    for (const auto& [k, t] : by_k) sizes.insert(k);
  }
  if (medians.empty() || sizes.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "plot needs at least one measured solver and two sizes");
  }

  std::vector<std::pair<SolverKind, std::map<std::size_t, double>>> series(medians.begin(),
                                                                          medians.end());
  std::sort(series.begin(), series.end(), [](const auto& a, const auto& b) {
    return solver_name(a.first) < solver_name(b.first);
  });

  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& [solver, by_k] : series) {
    for (const auto& [k, t] : by_k) {
      const double y = std::log10(std::max(t, 1.0));
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  }
  lo = std::floor(lo);
  hi = std::max(std::ceil(hi), lo + 1);
  const double k_min = static_cast<double>(*sizes.begin());
  const double k_max = static_cast<double>(*sizes.rbegin());

  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double k) { return kLeft + (k - k_min) / (k_max - k_min) * plot_w; };
  auto py = [&](double t) {
    return kTop + (hi - std::log10(std::max(t, 1.0))) / (hi - lo) * plot_h;
  };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" fill=\"white\"/>\n"
    << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
    << " font-size=\"16\">Median solve time by instance size</text>\n";

  s << "<g stroke=\"#cccccc\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double e = lo; e <= hi; e += 1) {
    const double y = kTop + (hi - e) / (hi - lo) * plot_h;
    s << "<line x1=\"" << kLeft << "\" y1=\"" << fmt2(y) << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << fmt2(y) << "\"/>\n"
      << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt2(y + 4)
      << "\" text-anchor=\"end\" stroke=\"none\" fill=\"black\">1e" << static_cast<int>(e)
      << "</text>\n";
  }
  for (std::size_t k : sizes) {
    const double x = px(static_cast<double>(k));
    s << "<text x=\"" << fmt2(x) << "\" y=\"" << kTop + plot_h + 18
      << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">" << k << "</text>\n";
  }
  s << "</g>\n";
  s << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
    << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n"
    << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 16
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">K</text>\n"
    << "<text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\""
    << " font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 "
    << kTop + plot_h / 2 << ")\">median elapsed (ns, log scale)</text>\n";

  std::size_t index = 0;
  for (const auto& [solver, by_k] : series) {
    const char* color = kPalette[index % std::size(kPalette)];
    s << "<polyline data-solver=\"" << solver_name(solver) << "\" fill=\"none\" stroke=\""
      << color << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [k, t] : by_k) {
      if (!first) s << ' ';
      first = false;
      s << fmt2(px(static_cast<double>(k))) << ',' << fmt2(py(t));
    }
    s << "\"/>\n";
    const double ly = kTop + 10 + 20 * static_cast<double>(index);
    s << "<g class=\"legend\"><line x1=\"" << kLeft + plot_w + 15 << "\" y1=\"" << ly
      << "\" x2=\"" << kLeft + plot_w + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/><text x=\"" << kLeft + plot_w + 46 << "\" y=\"" << ly + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << solver_name(solver)
      << "</text></g>\n";
    ++index;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace assign::bench
