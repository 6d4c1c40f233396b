#ifndef BWDB_CLI_HPP
#define BWDB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bwdb::cli {

enum ExitCode : int {
    success = 0,
    usage_error = 1,
    constraint_violation = 2,
    selftest_failure = 3,
};

// Runs one command line (without the program name). Results go to out,
// one-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bwdb::cli

#endif  // BWDB_CLI_HPP
