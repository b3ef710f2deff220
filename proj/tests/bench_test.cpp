#include "setpart/bench.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace setpart {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

BenchRecord fake(Engine e, int n, double median) {
  BenchRecord r;
  r.engine = e;
  r.n = n;
  r.median_ms = median;
  r.min_ms = median * 0.9;
  r.max_ms = median * 1.1;
  r.repetitions_done = 3;
  r.checksum = 0xabcdefULL + n;
  r.partitions_counted = bell_exact(n).value;
  return r;
}

RunSample sample(double ms, std::uint64_t count, std::uint64_t checksum) {
  RunSample s;
  s.wall_ms = ms;
  s.result = {count, checksum};
  return s;
}

TEST(SummarizeCell, MedianMinMax) {
  const std::vector<RunSample> runs{sample(3.0, 52, 9), sample(1.0, 52, 9), sample(2.0, 52, 9),
                                    sample(10.0, 52, 9)};
  const BenchRecord r = summarize_cell(Engine::semba, 5, runs);
  EXPECT_DOUBLE_EQ(r.min_ms, 1.0);
  EXPECT_DOUBLE_EQ(r.max_ms, 10.0);
  EXPECT_DOUBLE_EQ(r.median_ms, 2.5);
  EXPECT_EQ(r.repetitions_done, 4);
  EXPECT_EQ(r.checksum, 9u);
  EXPECT_EQ(r.partitions_counted, 52);
}

TEST(SummarizeCell, RejectsInconsistentRuns) {
  const std::vector<RunSample> drift{sample(1.0, 52, 9), sample(1.0, 52, 10)};
  EXPECT_THROW(summarize_cell(Engine::er, 5, drift), std::runtime_error);
  const std::vector<RunSample> short_count{sample(1.0, 51, 9)};
  EXPECT_THROW(summarize_cell(Engine::er, 5, short_count), std::runtime_error);
  EXPECT_THROW(summarize_cell(Engine::er, 5, std::vector<RunSample>{}), std::invalid_argument);
}

TEST(RunBenchmark, SingleReferenceCell) {
  BenchConfig config;
  config.n_min = config.n_max = 3;
  config.engines = {Engine::reference};
  config.repetitions = 3;
  const auto records = run_benchmark(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].partitions_counted, 5);
  EXPECT_EQ(records[0].repetitions_done, 3);
  EXPECT_EQ(records[0].checksum, checksum_all(Engine::reference, 3));
  EXPECT_LE(records[0].min_ms, records[0].median_ms);
  EXPECT_LE(records[0].median_ms, records[0].max_ms);
}

TEST(RunBenchmark, AllEnginesAtEight) {
  BenchConfig config;
  config.n_min = config.n_max = 8;
  config.engines = {kAllEngines.begin(), kAllEngines.end()};
  config.repetitions = 2;
  std::vector<Engine> seen;
  const auto records = run_benchmark(config, [&](const BenchRecord& r) { seen.push_back(r.engine); });
  ASSERT_EQ(records.size(), 5u);
  for (const auto& r : records) EXPECT_EQ(r.partitions_counted, 4140);
  EXPECT_EQ(seen, config.engines);
}

TEST(RunBenchmark, BudgetTruncatesAfterOneRepetition) {
  BenchConfig config;
  config.n_min = 9;
  config.n_max = 10;
  config.engines = {Engine::djokic};
  config.repetitions = 5;
  config.warmup_runs = 2;
  config.time_budget_per_cell_s = 1e-9;
  const auto records = run_benchmark(config);
  ASSERT_EQ(records.size(), 2u);
  for (const auto& r : records) EXPECT_EQ(r.repetitions_done, 1);
}

TEST(RunBenchmark, MedianGrowsWithWorkload) {
  BenchConfig config;
  config.n_min = 12;
  config.n_max = 13;
  config.engines = {Engine::djokic};
  config.repetitions = 3;
  const auto records = run_benchmark(config);
  ASSERT_EQ(records.size(), 2u);
  if (records[0].median_ms > 50.0) EXPECT_LE(records[0].median_ms, records[1].median_ms);
  EXPECT_GT(records[1].median_ms, 50.0);
}

TEST(RunBenchmark, RejectsBadConfig) {
  BenchConfig c;
  c.n_min = 0;
  EXPECT_THROW(run_benchmark(c), std::out_of_range);
  c = {};
  c.n_min = 9;
  c.n_max = 8;
  EXPECT_THROW(run_benchmark(c), std::out_of_range);
  c = {};
  c.repetitions = 0;
  EXPECT_THROW(run_benchmark(c), std::out_of_range);
  c = {};
  c.n_max = 27;
  EXPECT_THROW(run_benchmark(c), std::out_of_range);
  c = {};
  c.engines.clear();
  EXPECT_THROW(run_benchmark(c), std::invalid_argument);
  c = {};
  c.time_budget_per_cell_s = 0.0;
  EXPECT_THROW(run_benchmark(c), std::out_of_range);
}

TEST(RenderTable, SingleRecordCsv) {
  const std::vector<BenchRecord> records{fake(Engine::er, 8, 0.25)};
  EXPECT_EQ(render_table(records, TableFormat::csv),
            "engine,n,median_ms,min_ms,max_ms,repetitions,checksum,cpu_median_ms\n"
            "er,8,0.250,0.225,0.275,3,0x0000000000abcdf7,\n");
}

TEST(RenderTable, MarkdownShape) {
  std::vector<BenchRecord> records;
  for (Engine e : {Engine::djokic, Engine::hutchinson}) {
    for (int n : {10, 8, 9}) records.push_back(fake(e, n, 0.4 + n * 100.0));
  }
  const auto out = lines(render_table(records, TableFormat::markdown));
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], "| n value: | 8 | 9 | 10 |");
  EXPECT_EQ(out[1], "|:---|---:|---:|---:|");
  EXPECT_EQ(out[2], "| Hutchinson | 800 | 900 | 1000 |");
  EXPECT_EQ(out[3], "| Djokic | 800 | 900 | 1000 |");
}

TEST(RenderTable, SubMillisecondRendersAsZero) {
  const std::vector<BenchRecord> records{fake(Engine::semba, 8, 0.49), fake(Engine::semba, 9, 1.5)};
  const auto out = lines(render_table(records, TableFormat::markdown));
  EXPECT_EQ(out[2], "| Semba | 0 | 2 |");
}

TEST(RenderTable, MissingCellShowsDash) {
  const std::vector<BenchRecord> records{fake(Engine::semba, 8, 1.0), fake(Engine::er, 9, 1.0)};
  const auto out = lines(render_table(records, TableFormat::markdown));
  EXPECT_EQ(out[2], "| Semba | 1 | - |");
  EXPECT_EQ(out[3], "| Er | - | 1 |");
}

TEST(RenderTable, CsvRowOrderAndDeterminism) {
  std::vector<BenchRecord> records{fake(Engine::djokic, 9, 1.0), fake(Engine::semba, 9, 1.0),
                                   fake(Engine::djokic, 8, 1.0), fake(Engine::semba, 8, 1.0)};
  records[0].cpu_median_ms = 0.5;
  const std::string csv = render_table(records, TableFormat::csv);
  const auto out = lines(csv);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(out[1].substr(0, 8), "semba,8,");
  EXPECT_EQ(out[2].substr(0, 8), "semba,9,");
  EXPECT_EQ(out[3].substr(0, 9), "djokic,8,");
  EXPECT_EQ(out[4].substr(0, 9), "djokic,9,");
  EXPECT_EQ(out[4].substr(out[4].size() - 6), ",0.500");
  EXPECT_EQ(render_table(records, TableFormat::csv), csv);
  EXPECT_EQ(render_table(records, TableFormat::markdown),
            render_table(records, TableFormat::markdown));
}

TEST(RenderTable, EmptyInput) {
  EXPECT_THROW(render_table({}, TableFormat::csv), std::invalid_argument);
  EXPECT_THROW(render_table({}, TableFormat::markdown), std::invalid_argument);
}

}  // namespace
}  // namespace setpart
