#pragma once

// Fault injection for negative-control testing of `verify`.

#include <cstdint>

#include "setpart/verify.hpp"

namespace setpart::mutation {

enum class Fault { skip, duplicate };

/// Wraps the default source so that, for `target` only, emission number `at`
/// (0-based) of every run is dropped or delivered twice. Runs shorter than
/// at + 1 emissions are unaffected; with the default at = 1 every n >= 2 is
/// hit. Other engines pass through untouched.
inline PartitionSource mutated_source(Engine target, Fault fault, std::uint64_t at = 1) {
  return [=](Engine engine, int n, const PartitionVisitor& visit) {
    const PartitionSource base = default_partition_source();
    if (engine != target) {
      base(engine, n, visit);
      return;
    }
    std::uint64_t index = 0;
    base(engine, n, [&](std::span<const Label> v) {
      if (index++ != at) {
        visit(v);
      } else if (fault == Fault::duplicate) {
        visit(v);
        visit(v);
      }
    });
  };
}

}  // namespace setpart::mutation
