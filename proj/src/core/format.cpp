#include "aps/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace aps {

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                           std::chars_format::fixed, decimals);
  std::string out(buf.data(), res.ptr);
  if (!out.empty() && out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string format_two_sig(double value) {
  if (value == 0.0 || !std::isfinite(value)) return format_fixed(value, 0);
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const int decimals = magnitude >= 1 ? 0 : 1 - magnitude;
  // Rounding can carry into a new digit (9.96 -> "10.0"); recompute once.
  std::string text = format_fixed(value, decimals);
  double rounded = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  rounded = std::fabs(rounded);
  if (decimals > 0 && rounded > 0 &&
      static_cast<int>(std::floor(std::log10(rounded))) > magnitude) {
    text = format_fixed(value, decimals - 1);
  }
  return text;
}

}  // namespace aps
