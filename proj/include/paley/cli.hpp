#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paley::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kDomain = 3 };

// args excludes the program name. JSON goes to out (or --output), a one-line
// summary to err; "--input -" reads from in.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace paley::cli
