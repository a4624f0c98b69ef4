#pragma once

#include <ostream>

namespace appellkit {

/// Entry point of the `appellkit` binary, with the streams injectable for tests.
/// Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace appellkit
