#ifndef EVOLKIT_CLI_HPP
#define EVOLKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace evolkit {

/// Runs one command (args exclude the program name); the report goes to
/// `out`, diagnostics to `err`. Exit codes: 0 success, 1 input error,
/// 2 numeric failure, 3 verdict left uncertified under --strict.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace evolkit

#endif
