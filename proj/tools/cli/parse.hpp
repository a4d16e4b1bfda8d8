#pragma once

// Argument parsing for numbers and state specifiers.
//
// Reals: plain decimals or one of cosh, sinh, cos, sin, exp, sqrt, tanh
// applied to a decimal, with or without parentheses ("cosh0.5", "exp(-1)").
// Complex: "re,im" or "re+imi" ("0.3-0.2i", "2i", "1.5").

#include "su11kit/numkernel.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace su11kit::cli {

/// Malformed command-line input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

double parse_real(std::string_view text);
Complex parse_complex(std::string_view text);

/// Splits "a,b" at its single comma.
std::pair<std::string, std::string> split_pair(std::string_view text);

struct NumberStateSpec {
  Index n;
};
struct CoherentStateSpec {
  Complex zeta;
};
using DiskStateSpec = std::variant<NumberStateSpec, CoherentStateSpec>;

/// "n:K" or "zeta:<complex>".
DiskStateSpec parse_disk_state(std::string_view text);

}  // namespace su11kit::cli
