#pragma once

#include <string>

namespace aps {

/// Fixed-point text with `decimals` digits after the point. Rounding is
/// exact on the binary value; exact ties go to even. Negative zero prints
/// without a sign.
std::string format_fixed(double value, int decimals);

/// Shortest decimal text that parses back to the same double.
std::string format_shortest(double value);

/// Percentage text with two significant figures ("85", "8.2", "0.51").
std::string format_two_sig(double value);

}  // namespace aps
