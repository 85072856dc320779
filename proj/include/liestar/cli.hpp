#ifndef LIESTAR_CLI_HPP
#define LIESTAR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace liestar {

enum ExitCode { kExitOk = 0, kExitValidation = 1, kExitParse = 2 };

// argv[0] is the program name; the JSON report goes to out (or --out)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liestar

#endif
