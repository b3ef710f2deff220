#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>

#include "setpart/engines.hpp"
#include "setpart/rgs.hpp"

namespace setpart {

enum class Engine { reference, hutchinson, semba, er, djokic };

inline constexpr std::array<Engine, 5> kAllEngines{
    Engine::reference, Engine::hutchinson, Engine::semba, Engine::er, Engine::djokic};
inline constexpr std::array<Engine, 4> kPublishedEngines{
    Engine::hutchinson, Engine::semba, Engine::er, Engine::djokic};

/// Lower-case identifier used on the command line and in CSV output.
std::string_view engine_id(Engine e);
/// Capitalized name used in rendered tables.
std::string_view engine_display_name(Engine e);
std::optional<Engine> parse_engine(std::string_view id);

/// A running enumeration over one engine. Single-threaded; may be moved
/// between threads between calls to next().
class Generator {
 public:
  using State = std::variant<engines::Reference, engines::Hutchinson, engines::Semba,
                             engines::Er, engines::Djokic>;

  Generator(Engine engine, State state) : engine_(engine), state_(std::move(state)) {}

  Engine engine() const { return engine_; }
  int size() const {
    return std::visit([](const auto& s) { return s.size(); }, state_);
  }
  bool exhausted() const {
    return std::visit([](const auto& s) { return s.exhausted(); }, state_);
  }
  /// Words of working storage held by the engine.
  std::size_t state_words() const {
    return std::visit([](const auto& s) { return s.state_words(); }, state_);
  }

  /// Next partition, or nullopt once exhausted. The view aliases internal
  /// state and is invalidated by the following call.
  std::optional<engines::View> next() {
    return std::visit([](auto& s) { return s.next(); }, state_);
  }

  /// Drains the remaining partitions into visit(View). Dispatches on the
  /// engine once, outside the loop.
  template <class Visitor>
  void for_each(Visitor&& visit) {
    std::visit(
        [&](auto& s) {
          while (auto v = s.next()) visit(*v);
        },
        state_);
  }

 private:
  Engine engine_;
  State state_;
};

/// Throws std::out_of_range when n is outside the enumeration guard.
Generator make_generator(Engine engine, int n, bool allow_large = false);

inline constexpr std::uint64_t kChecksumSeed = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kChecksumPrime = 0x100000001b3ULL;

/// acc <- (acc ^ (label + position)) * prime for every label, position
/// counted from 0 within the string.
inline std::uint64_t checksum_fold(std::uint64_t acc, std::span<const Label> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    acc = (acc ^ (static_cast<std::uint64_t>(labels[i]) + i)) * kChecksumPrime;
  }
  return acc;
}

struct DrainResult {
  std::uint64_t count = 0;
  std::uint64_t checksum = kChecksumSeed;
};

/// Runs gen to exhaustion, counting and checksumming every emission.
DrainResult drain(Generator& gen);

/// Number of partitions emitted by a full run. A 64-bit counter is enough
/// for every n that can be enumerated in practice (B_25 < 2^64).
std::uint64_t count_all(Engine engine, int n, bool allow_large = false);

/// Order-dependent checksum over a full run, seeded with kChecksumSeed.
std::uint64_t checksum_all(Engine engine, int n, bool allow_large = false);

}  // namespace setpart
