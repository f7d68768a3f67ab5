#ifndef AGBOUNDS_DIVISOR_EXPR_HPP
#define AGBOUNDS_DIVISOR_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "agbounds/divisor.hpp"

namespace agc {

class DivisorParseError : public std::invalid_argument {
 public:
  DivisorParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses sums such as "32*P0 + 1*Pinf", "41*Pinf" or "-2*P0 - 3*Pinf".
/// Repeated places are summed.
Divisor parse_divisor(std::string_view text);

/// Inverse of parse_divisor for two-point divisors: "<b>*P0 + <a>*Pinf".
std::string render_divisor(const Divisor& d);

}  // namespace agc

#endif  // AGBOUNDS_DIVISOR_EXPR_HPP
