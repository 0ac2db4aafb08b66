#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sctx {

// Dispatches one sctx invocation.  Reports go to `out` (or the --out file);
// diagnostics to `err`.  Exit codes: 0 computed verdict (contextual is not
// an error), 2 validation failure, 1 internal error, 64 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sctx
