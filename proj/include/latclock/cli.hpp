#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace latclock {

// Command-line entry point. Subcommands: atoms-table, tau-min, qfi-curve,
// simulate, povm-fisher. Returns 0 on success, 2 on usage errors (message
// on err), 1 on runtime errors.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

// Convenience overload for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args,
            std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace latclock
