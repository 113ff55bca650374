#pragma once

#include <iosfwd>

namespace branchdiv::cli {

enum ExitCode { kOk = 0, kDegenerate = 1, kParse = 2, kInternal = 3 };

// branchdiv <command> [spec] [options]; reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace branchdiv::cli
