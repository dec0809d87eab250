#ifndef TQV_CLI_HPP_
#define TQV_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tqv::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
};

/// Runs one CLI invocation. args[0] is the program name. Reports go to out,
/// diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqv::cli

#endif  // TQV_CLI_HPP_
