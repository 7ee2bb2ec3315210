#include <cstdio>
#include <string>
#include <vector>

#include "ribbonknot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const ribbonknot::CliResult res = ribbonknot::run_cli(args);
    std::fputs(res.out.c_str(), stdout);
    std::fputs(res.err.c_str(), stderr);
    return res.exit_code;
}
