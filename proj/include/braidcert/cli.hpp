#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknownOnly = 2;

// Environment variable that overrides the handle-reduction length cap.
inline constexpr const char* kBudgetEnv = "BRAIDCERT_MAX_WORD_LENGTH";

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out`, diagnostics to `err`. Returns 0 on success, 2 when every record is
// an Unknown verdict, 1 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidcert::cli
