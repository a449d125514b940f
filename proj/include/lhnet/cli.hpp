#pragma once

#include <iosfwd>

namespace lhnet {

// Full command-line surface. Returns the process exit code:
// 0 success, 2 input/validation error, 3 enumeration cap exceeded,
// 4 failed --assert. Diagnostics go to `err`, summaries to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lhnet
