#ifndef AGBOUNDS_DIVISOR_HPP
#define AGBOUNDS_DIVISOR_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace agc {

/// The two designated places.
enum class Place { kInfinity, kOrigin };

const char* place_name(Place p);

/// inf * P_inf + origin * P_00 - sum_{i in constraints} P_i.
/// Constraint entries are point indices (see Curve::points()), sorted and
/// distinct, each naming an affine point other than P_00.
struct Divisor {
  int inf = 0;
  int origin = 0;
  std::vector<std::size_t> constraints;

  int degree() const { return inf + origin - static_cast<int>(constraints.size()); }
  bool is_two_point() const { return constraints.empty(); }
  bool is_effective() const { return inf >= 0 && origin >= 0 && constraints.empty(); }

  int coefficient(Place p) const { return p == Place::kInfinity ? inf : origin; }
  Divisor plus(Place p, int n) const;

  /// Appends -1 coefficients at the given points; throws on overlap.
  Divisor minus_points(std::vector<std::size_t> points) const;

  /// Pointwise <= (constraints compare as -1 entries).
  bool operator<=(const Divisor& other) const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  /// Subtrahend must be two-point.
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor& a, const Divisor& b) {
    if (auto c = a.inf <=> b.inf; c != 0) return c;
    if (auto c = a.origin <=> b.origin; c != 0) return c;
    return a.constraints <=> b.constraints;
  }
};

/// Pointwise minimum of coefficients.
Divisor divisor_gcd(const Divisor& a, const Divisor& b);

/// Debug form such as "32*P0 + 1*Pinf - P[7]".
std::string to_string(const Divisor& d);

}  // namespace agc

#endif  // AGBOUNDS_DIVISOR_HPP
