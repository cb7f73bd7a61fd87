#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slocc/extended_complex.hpp"

namespace slocc {

// Exit codes: 0 success / equivalent, 1 not equivalent, 2 I/O or usage
// error, 3 non-generic / inconclusive input.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// "1.5", "-2i", "1+2i", "i" and friends.
Complex parse_complex(const std::string& text);

}  // namespace slocc
