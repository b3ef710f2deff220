#include "setpart/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "setpart/bell.hpp"
#include "setpart/bench.hpp"
#include "setpart/enumerate.hpp"
#include "setpart/rgs.hpp"

namespace setpart::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string approx_text(const LogApprox& a) {
  std::ostringstream s;
  if (a.direct_value) {
    s << std::setprecision(15) << *a.direct_value;
  } else {
    s << "exp(" << std::setprecision(15) << a.log_value << ")";
  }
  return s.str();
}

std::optional<double> relative_error(const LogApprox& a) {
  if (a.n > kMaxExactBellN) return std::nullopt;
  return std::abs(std::expm1(a.log_value - log_of(bell_exact(a.n).value)));
}

std::vector<Engine> parse_engine_list(const std::string& spec) {
  if (spec == "all") return {kAllEngines.begin(), kAllEngines.end()};
  if (spec == "published") return {kPublishedEngines.begin(), kPublishedEngines.end()};
  std::vector<Engine> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto e = parse_engine(item);
    if (!e) throw UsageError("unknown engine '" + item + "'");
    if (std::find(out.begin(), out.end(), *e) == out.end()) out.push_back(*e);
  }
  if (out.empty()) throw UsageError("no engines given");
  return out;
}

Engine parse_single_engine(const std::string& id) {
  const auto e = parse_engine(id);
  if (!e) throw UsageError("unknown engine '" + id + "'");
  return *e;
}

int cmd_bell(int n, const std::string& mode, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (mode == "exact" && n > kMaxExactBellN) {
    throw UsageError("--n must be <= " + std::to_string(kMaxExactBellN) + " for exact mode");
  }

  const auto with_error = [](const LogApprox& a) {
    std::string line = approx_text(a);
    if (const auto e = relative_error(a)) line += " (relative error " + sci(*e) + ")";
    return line;
  };

  if (mode == "exact") {
    out << bell_exact(n).value << '\n';
  } else if (mode == "approx") {
    out << with_error(bell_moser_wyman(n)) << '\n';
  } else if (mode == "bound") {
    out << with_error(bell_berend_tassa(n)) << '\n';
  } else {
    out << std::left << std::setw(14) << "exact";
    if (n <= kMaxExactBellN) {
      out << bell_exact(n).value << '\n';
    } else {
      out << "(not computed for n > " << kMaxExactBellN << ")\n";
    }
    out << std::setw(14) << "moser-wyman" << with_error(bell_moser_wyman(n)) << '\n';
    out << std::setw(14) << "berend-tassa" << with_error(bell_berend_tassa(n)) << '\n';
  }
  return kOk;
}

int cmd_enum(int n, const std::string& engine_name, const std::string& format,
             std::optional<long long> limit, bool allow_large, std::ostream& out,
             std::ostream& err) {
  const Engine engine = parse_single_engine(engine_name);
  if (limit && *limit < 1) throw UsageError("--limit must be >= 1");
  Generator gen = make_generator(engine, n, allow_large);

  const bool blocks = format == "blocks";
  unsigned long long emitted = 0;
  while (auto v = gen.next()) {
    if (blocks) {
      const RestrictedGrowthString r(std::vector<Label>(v->begin(), v->end()));
      out << to_block_string(rgs_to_blocks(r)) << '\n';
    } else {
      out << to_letters(*v) << '\n';
    }
    out.flush();
    ++emitted;
    if (limit && emitted >= static_cast<unsigned long long>(*limit)) break;
  }
  err << "emitted " << emitted << " partitions\n";
  return kOk;
}

int cmd_verify(int max_n_enum, int max_n_bell, const Hooks& hooks, std::ostream& out) {
  VerifyOptions options;
  options.max_n_enum = max_n_enum;
  options.max_n_bell = max_n_bell;
  options.source = hooks.verify_source;
  try {
    validate(options);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const VerifyReport report = run_verify(options);
  print_report(report, out);
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_bench(BenchConfig config, const std::string& output, const std::string& outfile,
              std::ostream& out, std::ostream& err) {
  validate(config);
  const TableFormat format = output == "csv" ? TableFormat::csv : TableFormat::markdown;

  std::unique_ptr<std::ofstream> file;
  if (!outfile.empty()) {
    file = std::make_unique<std::ofstream>(outfile, std::ios::binary | std::ios::trunc);
    if (!*file) {
      err << "error: cannot open '" << outfile << "' for writing\n";
      return kWriteFailed;
    }
  }

  const auto records = run_benchmark(config, [&](const BenchRecord& r) {
    err << engine_id(r.engine) << " n=" << r.n << " median " << std::fixed
        << std::setprecision(3) << r.median_ms << " ms (" << r.repetitions_done << " runs)\n"
        << std::defaultfloat;
  });
  const std::string table = render_table(records, format);

  if (file) {
    *file << table;
    file->flush();
    if (!*file) {
      err << "error: failed writing '" << outfile << "'\n";
      return kWriteFailed;
    }
  } else {
    out << table;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Set partition enumeration, Bell numbers and benchmarks", "setpart"};
  app.require_subcommand(1, 1);

  int bell_n = 0;
  std::string bell_mode = "exact";
  auto* bell = app.add_subcommand("bell", "Bell numbers: exact, approximate and bound");
  bell->add_option("--n", bell_n, "Set size")->required();
  bell->add_option("--mode", bell_mode, "exact | approx | bound | all")
      ->check(CLI::IsMember({"exact", "approx", "bound", "all"}));

  int enum_n = 0;
  std::string enum_engine = "reference";
  std::string enum_format = "rgs";
  std::optional<long long> enum_limit;
  bool enum_large = false;
  auto* enumerate = app.add_subcommand("enum", "List the partitions of {1..n}");
  enumerate->add_option("--n", enum_n, "Set size")->required();
  enumerate->add_option("--engine", enum_engine,
                        "reference | hutchinson | semba | er | djokic");
  enumerate->add_option("--format", enum_format, "rgs | blocks")
      ->check(CLI::IsMember({"rgs", "blocks"}));
  enumerate->add_option("--limit", enum_limit, "Stop after this many partitions");
  enumerate->add_flag("--allow-large", enum_large, "Raise the n guard from 26 to 64");

  int max_n_enum = 11;
  int max_n_bell = 50;
  auto* verify = app.add_subcommand("verify", "Check Bell numbers, approximations and engines");
  verify->add_option("--max-n-enum", max_n_enum, "Largest n for engine comparison");
  verify->add_option("--max-n-bell", max_n_bell, "Largest n for approximation checks");

  BenchConfig config;
  std::string engines = "published";
  std::string output = "markdown";
  std::string outfile;
  double budget = 0.0;
  auto* bench = app.add_subcommand("bench", "Time full enumerations per engine and n");
  bench->add_option("--min", config.n_min, "Smallest n");
  bench->add_option("--max", config.n_max, "Largest n");
  bench->add_option("--engines", engines,
                    "Comma separated engine ids, 'published' (default) or 'all'");
  bench->add_option("--reps", config.repetitions, "Timed repetitions per cell");
  bench->add_option("--warmup", config.warmup_runs, "Untimed warmup runs per cell");
  auto* budget_opt = bench->add_option("--budget", budget, "Seconds per cell before truncating");
  bench->add_option("--output", output, "markdown | csv")
      ->check(CLI::IsMember({"markdown", "csv"}));
  bench->add_option("--outfile", outfile, "Write the table here instead of stdout");
  bench->add_flag("--allow-large", config.allow_large, "Raise the n guard from 26 to 64");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (bell->parsed()) return cmd_bell(bell_n, bell_mode, out);
    if (enumerate->parsed()) {
      return cmd_enum(enum_n, enum_engine, enum_format, enum_limit, enum_large, out, err);
    }
    if (verify->parsed()) return cmd_verify(max_n_enum, max_n_bell, hooks, out);
    if (bench->parsed()) {
      config.engines = parse_engine_list(engines);
      if (budget_opt->count() > 0) config.time_budget_per_cell_s = budget;
      return cmd_bench(std::move(config), output, outfile, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace setpart::cli
