#pragma once

// Line-oriented text form of programs and certificates. Numbers are exact
// rationals written "p" or "p/q"; tokens are whitespace-separated.
//
//   ratlp 1
//   sense minimize
//   var q{a} 0 inf
//   objective 1 q{} 1 q{a}
//   row elem:a 2 q{a} -1 q{} <= 0
//
// Outcomes follow the program:
//
//   status optimal | infeasible | unbounded
//   value 45
//   primal <var> <value>       (optimal)
//   dual <row-index> <value>   (optimal)
//   farkas <row-index> <value> (infeasible)
//   point <var> <value>        (unbounded)
//   ray <var> <value>          (unbounded)

#include <string>
#include <string_view>

#include "ucf/ratlp.hpp"

namespace ucf::lp {

std::string format_program(const LinearProgram& lp);
/// Throws std::invalid_argument on malformed text.
LinearProgram parse_program(std::string_view text);

std::string format_outcome(const LpOutcome& outcome);

}  // namespace ucf::lp
