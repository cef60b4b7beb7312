#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mocklie/derivations.hpp"

namespace mocklie {

enum ExitCode : int {
    kExitOk = 0,
    kExitAxiomViolation = 1,
    kExitUsage = 2,
    kExitMismatch = 3,
    kExitInternal = 4,
};

/// Source of the derivation families checked by "verify-catalog".
using FamilyLookup = std::function<ParametricFamily(const std::string& catalog_name)>;

/// Runs the mocklie command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const FamilyLookup& families);

}  // namespace mocklie
