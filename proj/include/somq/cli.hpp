#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "somq/errors.hpp"

namespace somq {

/// Process exit status for an error kind: 1 input, 2 config, 3 computation.
int exit_code(ErrorKind kind) noexcept;

/**
 * Runs the `somq` command line on `args` (program name excluded).
 *
 * Subcommands: evaluate, train, demo. Reports and file lists go to `out`;
 * failures print one line `somq: error[<kind>]: <reason>` to `err`.
 * Returns the process exit status.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace somq
