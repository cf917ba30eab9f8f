#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivinv {

/*
 * Parse and execute one command line (program name excluded). Results go to
 * out, diagnostics to err. Returns 0 on success, 1 on bad input (unreadable
 * quiver file, malformed arguments), 2 when an internal exactness guarantee
 * fails.
 */
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quivinv
