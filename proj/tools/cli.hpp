#ifndef SMP_TOOLS_CLI_HPP
#define SMP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace smp::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1; // a requested assertion did not hold
inline constexpr int exit_error = 2;  // bad usage, unreadable or malformed input

// Runs one command line (without the program name). Data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a batch job line `<command> key=value ...` into arguments for run().
// Keys become --key=value, except k which becomes -k value. Blank lines and
// lines starting with '#' yield an empty vector.
std::vector<std::string> job_arguments(const std::string& line);

// ASCII glyph for a color: 1-9 as digits, 10-35 as letters a-z, '?' beyond.
char color_glyph(int color);

} // namespace smp::cli

#endif // SMP_TOOLS_CLI_HPP
