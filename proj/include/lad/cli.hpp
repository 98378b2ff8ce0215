#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lad/entailment.hpp"
#include "lad/variant.hpp"

namespace lad::cli {

// Exit codes shared by the verdict-style subcommands (entail, check, equiv,
// persistent, countermodel).
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

struct Config {
  std::size_t atom_bound = kDefaultAtomBound;
  Variant variant = Variant::gauker;
  bool json = false;
};

// Default configuration with LAD_ATOM_BOUND applied. Throws
// std::invalid_argument when the variable is not an integer in 1..6.
Config default_config();

// Runs one command line; `args` excludes the program name. LAD_ATOM_BOUND is
// read from the environment as the default for --atom-bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lad::cli
