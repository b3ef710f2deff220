#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setpart/bell.hpp"
#include "setpart/enumerate.hpp"

namespace setpart {

struct BenchConfig {
  int n_min = 8;
  int n_max = 15;
  std::vector<Engine> engines{kPublishedEngines.begin(), kPublishedEngines.end()};
  int repetitions = 5;
  int warmup_runs = 1;
  /// Once a cell has spent this long (warmups included), it stops after the
  /// current repetition. At least one timed repetition always runs.
  std::optional<double> time_budget_per_cell_s;
  bool allow_large = false;
};

/// Throws std::out_of_range / std::invalid_argument on a bad config.
void validate(const BenchConfig& config);

struct BenchRecord {
  Engine engine = Engine::reference;
  int n = 0;
  double median_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
  int repetitions_done = 0;
  std::uint64_t checksum = 0;
  BigUint partitions_counted;
  /// Median process CPU time, when the platform reports it.
  std::optional<double> cpu_median_ms;
};

/// One timed run of a cell.
struct RunSample {
  double wall_ms = 0.0;
  std::optional<double> cpu_ms;
  DrainResult result;
};

/// Builds a record from the timed repetitions of one cell. Throws
/// std::runtime_error if the runs disagree on checksum or count, or if the
/// count is not B_n.
BenchRecord summarize_cell(Engine engine, int n, std::span<const RunSample> runs);

/// Runs every (engine, n) cell sequentially on the calling thread, engines
/// in config order and n ascending. on_record, if set, sees each record as
/// soon as its cell finishes.
std::vector<BenchRecord> run_benchmark(
    const BenchConfig& config,
    const std::function<void(const BenchRecord&)>& on_record = {});

enum class TableFormat { markdown, csv };

/// Markdown: one row per engine, one column per n, medians rounded to whole
/// milliseconds. CSV: one row per record, engine-major then n ascending.
/// Throws std::invalid_argument on empty input.
std::string render_table(std::span<const BenchRecord> records, TableFormat format);

}  // namespace setpart
