#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace planelift::cli {

/// Runs one command. `args` excludes the program name. Exit codes:
/// 0 success / ok verdicts, 1 mathematical check failures (defect data
/// printed), 2 usage or config errors. Output is deterministic for a
/// fixed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The dispatch table (every subcommand reachable from run).
const std::vector<std::string>& command_names();

}  // namespace planelift::cli
