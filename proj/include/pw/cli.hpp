#ifndef PW_CLI_HPP
#define PW_CLI_HPP

#include <iosfwd>

namespace pw::cli {

/// Exit codes of run().
enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kInvalid = 2,
  kPrecision = 3,
  kNoSuchObject = 4,
};

/// Runs one command line. JSON results (and error diagnostics) go to out
/// unless --out names a file; human-readable errors go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace pw::cli

#endif // PW_CLI_HPP
