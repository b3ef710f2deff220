#include "setpart/enumerate.hpp"

#include <stdexcept>

namespace setpart {

std::string_view engine_id(Engine e) {
  switch (e) {
    case Engine::reference: return "reference";
    case Engine::hutchinson: return "hutchinson";
    case Engine::semba: return "semba";
    case Engine::er: return "er";
    case Engine::djokic: return "djokic";
  }
  throw std::invalid_argument("unknown engine");
}

std::string_view engine_display_name(Engine e) {
  switch (e) {
    case Engine::reference: return "Reference";
    case Engine::hutchinson: return "Hutchinson";
    case Engine::semba: return "Semba";
    case Engine::er: return "Er";
    case Engine::djokic: return "Djokic";
  }
  throw std::invalid_argument("unknown engine");
}

std::optional<Engine> parse_engine(std::string_view id) {
  for (Engine e : kAllEngines) {
    if (engine_id(e) == id) return e;
  }
  return std::nullopt;
}

Generator make_generator(Engine engine, int n, bool allow_large) {
  check_enumeration_size(n, allow_large);
  switch (engine) {
    case Engine::reference: return {engine, engines::Reference(n)};
    case Engine::hutchinson: return {engine, engines::Hutchinson(n)};
    case Engine::semba: return {engine, engines::Semba(n)};
    case Engine::er: return {engine, engines::Er(n)};
    case Engine::djokic: return {engine, engines::Djokic(n)};
  }
  throw std::invalid_argument("unknown engine");
}

DrainResult drain(Generator& gen) {
  DrainResult out;
  gen.for_each([&](engines::View v) {
    ++out.count;
    out.checksum = checksum_fold(out.checksum, v);
  });
  return out;
}

std::uint64_t count_all(Engine engine, int n, bool allow_large) {
  Generator gen = make_generator(engine, n, allow_large);
  std::uint64_t count = 0;
  gen.for_each([&](engines::View) { ++count; });
  return count;
}

std::uint64_t checksum_all(Engine engine, int n, bool allow_large) {
  Generator gen = make_generator(engine, n, allow_large);
  return drain(gen).checksum;
}

}  // namespace setpart
