#pragma once

namespace xsolve {

// Full command-line entry point. Returns the process exit code:
// 10 satisfiable, 20 unsatisfiable, 0 other success, 1 any error.
int runMain(int argc, const char* const* argv);

} // namespace xsolve
