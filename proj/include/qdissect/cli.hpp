#pragma once

#include <string>
#include <vector>

namespace qdissect {

// Exit codes: 0 all checks passed, 1 a check was refuted or mismatched,
// 2 usage or parameter errors.
int run_cli(int argc, const char* const* argv);

// Same contract, without the program name; convenient for in-process tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace qdissect
