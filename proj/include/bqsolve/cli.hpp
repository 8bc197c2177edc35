#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bqsolve/registry.hpp"

namespace bqsolve {

/// Registry with the bundled solvers: pt, random, bruteforce.
Registry default_registry();

/// Runs one solve against the given registry. `args` excludes the program
/// name. Grammar:
///
///   <prog> [-h] <solver> [input] [--output PATH]
///          [--vartype {SPIN,BINARY}] [solver flags...]
///
/// The problem is read from the positional input path (stdin when absent)
/// as COO with the mandatory --vartype, dispatched to the solver, and the
/// sample set written as CSV to --output (stdout when absent).
///
/// Exit codes: 0 success or help; 1 usage error; 2 unreadable or malformed
/// input; 3 solver parameter/capacity error.
int run(const Registry& registry, const std::vector<std::string>& args,
        std::istream& in, std::ostream& out, std::ostream& err,
        const std::string& prog = "bqsolve");

}  // namespace bqsolve
