#ifndef AGBOUNDS_SERIES_HPP
#define AGBOUNDS_SERIES_HPP

#include <optional>
#include <vector>

#include "agbounds/field.hpp"

namespace agc {

/// Truncated Laurent series in a local parameter x:
///   f = sum_{i = offset}^{precision - 1} c_i x^i + O(x^precision).
/// Every operation tracks the absolute precision it can certify, so a
/// valuation is either known exactly or reported as beyond precision.
class LocalExpansion {
 public:
  LocalExpansion(const Field& field, int offset, std::vector<Element> coeffs);

  static LocalExpansion constant(const Field& field, Element c, int precision);
  static LocalExpansion monomial(const Field& field, int exponent, int precision);
  static LocalExpansion zero(const Field& field, int precision);

  const Field& field() const { return *field_; }
  int offset() const { return offset_; }
  /// Absolute precision: the series is known modulo x^precision().
  int precision() const { return offset_ + static_cast<int>(coeffs_.size()); }

  /// Coefficient of x^exponent; throws if exponent >= precision().
  Element coefficient(int exponent) const;

  /// Index of the first nonzero coefficient, or nullopt when every known
  /// coefficient vanishes ("beyond precision").
  std::optional<int> valuation() const;

  LocalExpansion truncated(int precision) const;

  friend LocalExpansion operator+(const LocalExpansion& a, const LocalExpansion& b);
  friend LocalExpansion operator-(const LocalExpansion& a, const LocalExpansion& b);
  friend LocalExpansion operator*(const LocalExpansion& a, const LocalExpansion& b);
  LocalExpansion scaled(Element c) const;
  LocalExpansion pow(int e) const;

  /// Multiplicative inverse; requires a certified valuation.
  LocalExpansion inverse() const;

  /// Square root in characteristic 2; requires every odd coefficient to vanish.
  LocalExpansion sqrt() const;

  /// Agreement on every coefficient both series know.
  bool agrees_with(const LocalExpansion& other) const;

 private:
  const Field* field_;
  int offset_;
  std::vector<Element> coeffs_;
};

}  // namespace agc

#endif  // AGBOUNDS_SERIES_HPP
