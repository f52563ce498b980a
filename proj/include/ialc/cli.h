// The `ialc` command line, callable in-process.

#ifndef IALC_CLI_H_
#define IALC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ialc {

enum ExitStatus : int {
  kSuccess = 0,  // proved, accepted, valid
  kRefuted = 1,  // rejected, counterexample
  kUnknown = 2,  // search budget exhausted
  kInputError = 3,
};

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ialc

#endif  // IALC_CLI_H_
