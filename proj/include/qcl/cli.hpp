#pragma once

#include <iosfwd>

namespace qcl::cli {

/// Command-line entry point. Writes JSON to `out`; returns 0 on success,
/// 1 on input errors and 2 on mathematical refusals or failed verification.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qcl::cli
