#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cssg::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2, // parse failure, unsupported language, invalid graph
    kIo = 3,
    kEmpty = 4, // no triplets could be built
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cssg::cli
