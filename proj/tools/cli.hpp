#pragma once

#include <ostream>

namespace lgbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotConverged = 3;
inline constexpr int kExitIo = 4;

/// Entry point of the `lgbell` tool. Subcommands:
///   bell-max, bell-scan, corr, schmidt, wigner, elliptical-profile.
/// JSON goes to `out` unless --out is given; CSV goes to --out (with a
/// `<out>.manifest.json` sidecar) or to `out`. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgbell::cli
