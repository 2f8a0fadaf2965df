#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmdseg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;

/// Runs one command line (without the program name). Results go to `out` unless an
/// --output file is given; diagnostics go to `err` as a one-line JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace mmdseg::cli
