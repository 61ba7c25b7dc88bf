#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgs::cli {

// Runs one CLI invocation (args exclude the program name).
// Exit codes: 0 success, 2 usage/validation, 3 I/O.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Radians ("1.5708") or pi-rational forms ("pi", "pi/2", "3pi/2", "0.5pi").
double parse_angle(const std::string& text);

}  // namespace qgs::cli
