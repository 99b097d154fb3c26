#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside {

/// Command-line front end. Exit codes: 0 success, 1 computation error,
/// 2 when a checker report contains failures, 64 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace burnside
