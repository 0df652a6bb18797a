#ifndef SYMDET_CLI_HPP
#define SYMDET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace symdet {

/// Dispatch a full command line (without argv[0]).
/// Exit codes: 0 success, 2 usage/domain error, 3 internal identity violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symdet

#endif
