#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tauchart {

// Exit status contract of the command-line driver.
enum ExitCode : int {
    exit_ok = 0,             // success, or the predicate holds
    exit_no = 1,             // the predicate fails, or a diff is nonempty
    exit_indeterminate = 2,  // the window does not decide the predicate
    exit_usage = 64,
    exit_data = 65,          // malformed or mathematically inconsistent input
    exit_internal = 70,
};

// Runs one command; args excludes the program name. Documents and reports
// go to files or `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tauchart
