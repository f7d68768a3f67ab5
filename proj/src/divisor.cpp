#include "agbounds/divisor.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace agc {

const char* place_name(Place p) { return p == Place::kInfinity ? "Pinf" : "P0"; }

Divisor Divisor::plus(Place p, int n) const {
  Divisor d = *this;
  (p == Place::kInfinity ? d.inf : d.origin) += n;
  return d;
}

Divisor Divisor::minus_points(std::vector<std::size_t> points) const {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("duplicate constraint point");
  }
  Divisor d = *this;
  std::vector<std::size_t> merged;
  std::set_union(constraints.begin(), constraints.end(), points.begin(), points.end(),
                 std::back_inserter(merged));
  if (merged.size() != constraints.size() + points.size()) {
    throw std::invalid_argument("constraint coefficient below -1");
  }
  d.constraints = std::move(merged);
  return d;
}

bool Divisor::operator<=(const Divisor& other) const {
  // Coefficient -1 at our constraints, 0 elsewhere; we need ours <= theirs.
  return inf <= other.inf && origin <= other.origin &&
         std::includes(constraints.begin(), constraints.end(), other.constraints.begin(),
                       other.constraints.end());
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor d{a.inf + b.inf, a.origin + b.origin, {}};
  return d.minus_points(a.constraints).minus_points(b.constraints);
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  if (!b.constraints.empty()) throw std::invalid_argument("subtrahend must be two-point");
  return Divisor{a.inf - b.inf, a.origin - b.origin, a.constraints};
}

Divisor divisor_gcd(const Divisor& a, const Divisor& b) {
  Divisor d{std::min(a.inf, b.inf), std::min(a.origin, b.origin), {}};
  std::set_union(a.constraints.begin(), a.constraints.end(), b.constraints.begin(),
                 b.constraints.end(), std::back_inserter(d.constraints));
  return d;
}

std::string to_string(const Divisor& d) {
  std::string s = std::to_string(d.origin) + "*P0 + " + std::to_string(d.inf) + "*Pinf";
  for (std::size_t p : d.constraints) s += " - P[" + std::to_string(p) + "]";
  return s;
}

}  // namespace agc
