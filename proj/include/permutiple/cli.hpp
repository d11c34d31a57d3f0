#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permutiple::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permutiple::cli
