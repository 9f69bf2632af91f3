#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace profiles::cli
{
    /// Exit statuses: 0 success, 1 a negative answer (no solutions, reducible), 2 usage or input errors.
    enum ExitStatus : int
    {
        success = 0,
        negative = 1,
        failure = 2
    };

    /// Runs one subcommand. `args` excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    /// Multiplication table of all profiles of size at most max_size, in canonical order.
    auto format_table(unsigned max_size) -> std::string;
}
