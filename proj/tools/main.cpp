#include <iostream>
#include <string>
#include <vector>

#include "setpart/cli.hpp"
#ifdef SETPART_MUTANT
#include "mutation.hpp"
#endif

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv, argv + argc);
  setpart::cli::Hooks hooks;
#ifdef SETPART_MUTANT
  // Fault-injected build: one engine skips or repeats an emission.
  hooks.verify_source = setpart::mutation::mutated_source(
      setpart::Engine::SETPART_MUTANT_ENGINE, setpart::mutation::Fault::SETPART_MUTANT);
#endif
  return setpart::cli::run(args, std::cout, std::cerr, hooks);
}
