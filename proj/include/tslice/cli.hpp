#pragma once

#include <iosfwd>

#include "tslice/event_model.hpp"

namespace tslice {

// Exit status for command-line usage errors; module errors exit with their
// ErrorCode value.
inline constexpr int kUsageExit = 1;

// Native resolution, raised to at least T / 10000 so histograms stay bounded
// on fine-grained, long streams. Throws Error(ResolutionUndefined).
double auto_bin_width(const DynamicGraph& g);

// Entry point for `tslice <subcommand> ...`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tslice
