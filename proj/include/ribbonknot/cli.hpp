#ifndef RIBBONKNOT_CLI_HPP
#define RIBBONKNOT_CLI_HPP

/// Command-line front end, factored as a function so the golden tests can
/// drive it in process.  Exit codes: 0 success, 1 validation failure or
/// disallowed width, 2 bad arguments, 3 infeasible optimization.

#include <string>
#include <vector>

namespace ribbonknot {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace ribbonknot

#endif
