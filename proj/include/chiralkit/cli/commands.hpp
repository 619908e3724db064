#pragma once

#include <iosfwd>

namespace chiralkit::cli {

/// Runs one command line. Exit status: 0 success, 1 bad input, 2 a
/// mathematical precondition failed.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chiralkit::cli
