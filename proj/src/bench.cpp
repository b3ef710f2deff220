#include "setpart/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace setpart {
namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

std::optional<double> process_cpu_ms() {
  const std::clock_t c = std::clock();
  if (c == static_cast<std::clock_t>(-1)) return std::nullopt;
  return 1000.0 * static_cast<double>(c) / CLOCKS_PER_SEC;
}

RunSample timed_run(Engine engine, int n, bool allow_large) {
  Generator gen = make_generator(engine, n, allow_large);
  const auto cpu0 = process_cpu_ms();
  const auto t0 = std::chrono::steady_clock::now();
  const DrainResult result = drain(gen);
  const auto t1 = std::chrono::steady_clock::now();
  const auto cpu1 = process_cpu_ms();

  RunSample sample;
  sample.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (cpu0 && cpu1) sample.cpu_ms = *cpu1 - *cpu0;
  sample.result = result;
  return sample;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64, v);
  return buf;
}

}  // namespace

void validate(const BenchConfig& config) {
  check_enumeration_size(config.n_min, config.allow_large);
  check_enumeration_size(config.n_max, config.allow_large);
  if (config.n_min > config.n_max) {
    throw std::out_of_range("bench: n_min must not exceed n_max");
  }
  if (config.engines.empty()) throw std::invalid_argument("bench: no engines selected");
  if (config.repetitions < 1) throw std::out_of_range("bench: repetitions must be >= 1");
  if (config.warmup_runs < 0) throw std::out_of_range("bench: warmup runs must be >= 0");
  if (config.time_budget_per_cell_s && !(*config.time_budget_per_cell_s > 0.0)) {
    throw std::out_of_range("bench: time budget must be positive");
  }
}

BenchRecord summarize_cell(Engine engine, int n, std::span<const RunSample> runs) {
  if (runs.empty()) throw std::invalid_argument("bench: cell has no timed runs");
  const DrainResult& first = runs.front().result;
  for (const RunSample& r : runs) {
    if (r.result.checksum != first.checksum || r.result.count != first.count) {
      throw std::runtime_error("bench: nondeterministic output for " +
                               std::string(engine_id(engine)) + " at n=" + std::to_string(n));
    }
  }
  BenchRecord rec;
  rec.engine = engine;
  rec.n = n;
  rec.checksum = first.checksum;
  rec.partitions_counted = first.count;
  if (rec.partitions_counted != bell_exact(n).value) {
    throw std::runtime_error("bench: " + std::string(engine_id(engine)) + " emitted " +
                             std::to_string(first.count) + " partitions at n=" +
                             std::to_string(n) + ", expected B_n");
  }

  std::vector<double> wall;
  std::vector<double> cpu;
  for (const RunSample& r : runs) {
    wall.push_back(r.wall_ms);
    if (r.cpu_ms) cpu.push_back(*r.cpu_ms);
  }
  rec.repetitions_done = static_cast<int>(runs.size());
  rec.min_ms = *std::min_element(wall.begin(), wall.end());
  rec.max_ms = *std::max_element(wall.begin(), wall.end());
  rec.median_ms = median_of(wall);
  if (cpu.size() == runs.size()) rec.cpu_median_ms = median_of(cpu);
  return rec;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& config,
                                       const std::function<void(const BenchRecord&)>& on_record) {
  validate(config);
  std::vector<BenchRecord> records;
  for (Engine engine : config.engines) {
    for (int n = config.n_min; n <= config.n_max; ++n) {
      double spent_ms = 0.0;
      const auto over_budget = [&] {
        return config.time_budget_per_cell_s &&
               spent_ms > 1000.0 * *config.time_budget_per_cell_s;
      };

      std::optional<std::uint64_t> warm_checksum;
      for (int w = 0; w < config.warmup_runs && !over_budget(); ++w) {
        const RunSample s = timed_run(engine, n, config.allow_large);
        spent_ms += s.wall_ms;
        warm_checksum = s.result.checksum;
      }

      std::vector<RunSample> runs;
      do {
        runs.push_back(timed_run(engine, n, config.allow_large));
        spent_ms += runs.back().wall_ms;
      } while (static_cast<int>(runs.size()) < config.repetitions && !over_budget());

      if (warm_checksum && *warm_checksum != runs.front().result.checksum) {
        throw std::runtime_error("bench: warmup and timed checksums differ for " +
                                 std::string(engine_id(engine)) + " at n=" + std::to_string(n));
      }
      records.push_back(summarize_cell(engine, n, runs));
      if (on_record) on_record(records.back());
    }
  }
  return records;
}

std::string render_table(std::span<const BenchRecord> records, TableFormat format) {
  if (records.empty()) throw std::invalid_argument("render_table: no records");

  std::vector<const BenchRecord*> sorted;
  for (const BenchRecord& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const BenchRecord* a, const BenchRecord* b) {
    if (a->engine != b->engine) return a->engine < b->engine;
    return a->n < b->n;
  });

  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "engine,n,median_ms,min_ms,max_ms,repetitions,checksum,cpu_median_ms\n";
    for (const BenchRecord* r : sorted) {
      out << engine_id(r->engine) << ',' << r->n << ',' << fixed3(r->median_ms) << ','
          << fixed3(r->min_ms) << ',' << fixed3(r->max_ms) << ',' << r->repetitions_done << ','
          << hex64(r->checksum) << ',' << (r->cpu_median_ms ? fixed3(*r->cpu_median_ms) : "")
          << '\n';
    }
    return out.str();
  }

  std::set<int> columns;
  std::map<Engine, std::map<int, double>> cells;
  for (const BenchRecord* r : sorted) {
    columns.insert(r->n);
    cells[r->engine][r->n] = r->median_ms;
  }

  out << "| n value: |";
  for (int n : columns) out << ' ' << n << " |";
  out << "\n|:---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "---:|";
  out << '\n';
  for (const auto& [engine, row] : cells) {
    out << "| " << engine_display_name(engine) << " |";
    for (int n : columns) {
      const auto it = row.find(n);
      if (it == row.end()) {
        out << " - |";
      } else {
        out << ' ' << std::llround(it->second) << " |";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace setpart
