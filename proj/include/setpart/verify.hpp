#pragma once

#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "setpart/enumerate.hpp"

namespace setpart {

using PartitionVisitor = std::function<void(std::span<const Label>)>;

/// Feeds every partition an engine emits for n to the visitor. Swappable so
/// a deliberately broken engine can be substituted.
using PartitionSource = std::function<void(Engine, int, const PartitionVisitor&)>;

/// Streams straight from make_generator.
PartitionSource default_partition_source();

struct VerifyOptions {
  int max_n_enum = 11;
  int max_n_bell = 50;
  PartitionSource source = default_partition_source();
};

inline constexpr int kMaxVerifyEnumN = 12;

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  /// The check with this exact name, or nullptr.
  const VerifyCheck* find(std::string_view name) const;
};

/// Throws std::out_of_range when max_n_enum is outside [1, 12] or
/// max_n_bell outside [2, 1000].
void validate(const VerifyOptions& options);

/// Runs the full claims check:
///   - Bell numbers for n = 1..20 against the published table
///   - recursion vs Bell triangle for n = 0..max_n_bell
///   - every published engine vs the reference set for n = 1..max_n_enum
///   - Moser-Wyman relative error below 3e-3 for n = 2..max_n_bell
///   - floor of the Moser-Wyman estimate equal to B_n for n = 1..7
///   - Berend-Tassa bound above B_n for n = 1..max_n_bell
VerifyReport run_verify(const VerifyOptions& options);

/// One "PASS|FAIL  name: detail" line per check.
void print_report(const VerifyReport& report, std::ostream& out);

/// Name of the engine-equivalence check for engine e.
std::string engine_check_name(Engine e);

}  // namespace setpart
