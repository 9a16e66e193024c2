/**
 * Command-line front end.
 *
 *   dmorse <subcommand> -g <digraph> [-f <morse>] [--max-dim N]
 *          [--t-grid a,b,c] [--eps-low X] [--format text|json|csv] [--out PATH]
 *
 * Exit codes: 0 success, 2 validation failure, 1 internal error, 64 usage.
 */
#ifndef DMORSE_CLI_HPP
#define DMORSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dmorse {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace dmorse

#endif
