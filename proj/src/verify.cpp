#include "setpart/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "setpart/bell.hpp"

namespace setpart {
namespace {

// Bell numbers B_1 .. B_20 as published.
constexpr std::array<std::uint64_t, 20> kPublishedBell{
    1ULL,           2ULL,           5ULL,           15ULL,
    52ULL,          203ULL,         877ULL,         4140ULL,
    21147ULL,       115975ULL,      678570ULL,      4213597ULL,
    27644437ULL,    190899322ULL,   1382958545ULL,  10480142147ULL,
    82864869804ULL, 682076806159ULL, 5832742205057ULL, 51724158235372ULL};

constexpr double kMwTolerance = 3e-3;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// 5 bits per label; n <= 12 fits in 60 bits.
std::uint64_t pack(std::span<const Label> labels) {
  std::uint64_t key = 0;
  for (Label l : labels) key = (key << 5) | l;
  return key;
}

VerifyCheck check_table() {
  VerifyCheck c{"Table 1 fidelity", true, "B_1..B_20 match"};
  for (int n = 1; n <= 20; ++n) {
    const BigUint got = bell_exact(n).value;
    if (got != kPublishedBell[n - 1]) {
      c.passed = false;
      c.detail = "B_" + std::to_string(n) + " = " + got.str() + ", table says " +
                 std::to_string(kPublishedBell[n - 1]);
      break;
    }
  }
  return c;
}

VerifyCheck check_triangle(int max_n) {
  VerifyCheck c{"Bell recursion vs triangle", true,
                "n=0.." + std::to_string(max_n) + " agree"};
  const auto triangle = bell_triangle(max_n);
  for (int n = 0; n <= max_n; ++n) {
    if (bell_exact(n).value != triangle[n].value) {
      c.passed = false;
      c.detail = "disagree at n=" + std::to_string(n);
      break;
    }
  }
  return c;
}

std::vector<std::uint64_t> reference_keys(int n) {
  std::vector<std::uint64_t> keys;
  std::optional<RestrictedGrowthString> r = rgs_first(n);
  while (r) {
    keys.push_back(pack(r->labels()));
    r = rgs_successor(*r);
  }
  return keys;  // already ascending: lexicographic order matches key order
}

VerifyCheck check_engine(Engine engine, int max_n, const PartitionSource& source) {
  VerifyCheck c{engine_check_name(engine), true, ""};
  std::uint64_t total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<std::uint64_t> expected = reference_keys(n);
    std::vector<std::uint64_t> keys;
    bool valid = true;
    source(engine, n, [&](std::span<const Label> v) {
      if (static_cast<int>(v.size()) != n || !is_restricted_growth(v)) valid = false;
      keys.push_back(pack(v));
    });
    total += keys.size();
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (!valid) {
      c.passed = false;
      c.detail = at + "emitted an invalid restricted growth string";
      return c;
    }
    if (BigUint(keys.size()) != bell_exact(n).value) {
      c.passed = false;
      c.detail = at + std::to_string(keys.size()) + " emissions, B_n = " +
                 bell_exact(n).value.str();
      return c;
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      c.passed = false;
      c.detail = at + "duplicate emission";
      return c;
    }
    if (keys != expected) {
      c.passed = false;
      c.detail = at + "emitted set differs from the lexicographic reference";
      return c;
    }
  }
  c.detail = "n=1.." + std::to_string(max_n) + ", " + std::to_string(total) +
             " emissions, sets equal, no duplicates";
  return c;
}

VerifyCheck check_mw_band(int max_n) {
  double worst = 0.0;
  int worst_n = 2;
  for (int n = 2; n <= max_n; ++n) {
    const double e = relative_error_mw(n);
    if (e > worst) {
      worst = e;
      worst_n = n;
    }
  }
  return {"MW max relative error", worst < kMwTolerance,
          sci(worst) + " at n=" + std::to_string(worst_n) + " over n=2.." +
              std::to_string(max_n) + " (limit " + sci(kMwTolerance) + ")"};
}

VerifyCheck check_mw_floor() {
  VerifyCheck c{"MW floor", true, "floor(B*_n) = B_n for n=1..7"};
  for (int n = 1; n <= 7; ++n) {
    const auto approx = bell_moser_wyman(n);
    const BigUint floored(static_cast<std::uint64_t>(std::floor(*approx.direct_value)));
    if (floored != bell_exact(n).value) {
      c.passed = false;
      c.detail = "floor(B*_" + std::to_string(n) + ") = " + floored.str() + ", B_n = " +
                 bell_exact(n).value.str();
      break;
    }
  }
  return c;
}

VerifyCheck check_bt_bound(int max_n) {
  VerifyCheck c{"BT upper bound", true, ""};
  double tightest = INFINITY;
  for (int n = 1; n <= max_n; ++n) {
    const double gap = bell_berend_tassa(n).log_value - log_of(bell_exact(n).value);
    tightest = std::min(tightest, gap);
    if (!(gap > 0.0)) {
      c.passed = false;
      c.detail = "bound not above B_n at n=" + std::to_string(n);
      return c;
    }
  }
  c.detail = "holds for n=1.." + std::to_string(max_n) + ", smallest ratio " +
             std::to_string(std::exp(tightest));
  return c;
}

}  // namespace

PartitionSource default_partition_source() {
  return [](Engine engine, int n, const PartitionVisitor& visit) {
    Generator gen = make_generator(engine, n);
    gen.for_each([&](engines::View v) { visit(v); });
  };
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

const VerifyCheck* VerifyReport::find(std::string_view name) const {
  for (const VerifyCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string engine_check_name(Engine e) {
  return "engine " + std::string(engine_id(e)) + " vs reference";
}

void validate(const VerifyOptions& options) {
  if (options.max_n_enum < 1 || options.max_n_enum > kMaxVerifyEnumN) {
    throw std::out_of_range("verify: max-n-enum must be in [1, " +
                            std::to_string(kMaxVerifyEnumN) + "]");
  }
  if (options.max_n_bell < 2 || options.max_n_bell > kMaxExactBellN) {
    throw std::out_of_range("verify: max-n-bell must be in [2, " +
                            std::to_string(kMaxExactBellN) + "]");
  }
}

VerifyReport run_verify(const VerifyOptions& options) {
  validate(options);
  const PartitionSource source = options.source ? options.source : default_partition_source();
  VerifyReport report;
  report.checks.push_back(check_table());
  report.checks.push_back(check_triangle(options.max_n_bell));
  for (Engine e : kPublishedEngines) {
    report.checks.push_back(check_engine(e, options.max_n_enum, source));
  }
  report.checks.push_back(check_mw_band(options.max_n_bell));
  report.checks.push_back(check_mw_floor());
  report.checks.push_back(check_bt_bound(options.max_n_bell));
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const VerifyCheck& c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
  }
  std::size_t failed = 0;
  for (const VerifyCheck& c : report.checks) failed += c.passed ? 0 : 1;
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
      << '\n';
}

}  // namespace setpart
