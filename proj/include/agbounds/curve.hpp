#ifndef AGBOUNDS_CURVE_HPP
#define AGBOUNDS_CURVE_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agbounds/field.hpp"
#include "agbounds/series.hpp"

namespace agc {

enum class CurveKind { kHermitian, kSuzuki };

struct RationalPoint {
  bool at_infinity = false;
  Element x{};
  Element y{};

  static RationalPoint infinity() { return {true, {}, {}}; }
  static RationalPoint affine(Element x, Element y) { return {false, x, y}; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Product of generator powers times a power of the shift function.
/// Generators are (x, y) on Hermitian curves and (x, y, z, w) on the Suzuki
/// curve; unused slots stay zero.
struct Monomial {
  std::array<int, 4> exponents{};
  int shift = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Hermitian curve y^q + y = x^(q+1) over GF(q^2), or the Suzuki curve
/// y^8 - y = x^10 - x^3 over GF(8), with the two designated places
/// P_inf (the unique place at infinity) and P_00 = (0,0).
///
/// The shift function (y on Hermitian, w on Suzuki) has divisor
/// m_s (P_00 - P_inf), where m_s is shift_period().
class Curve {
 public:
  static Curve hermitian(int q);
  static Curve suzuki();
  /// hermitian4, hermitian9, hermitian16 or suzuki8.
  static Curve from_name(std::string_view name);

  const std::string& name() const { return name_; }
  CurveKind kind() const { return kind_; }
  const Field& field() const { return *field_; }
  int genus() const { return genus_; }
  int shift_period() const { return shift_period_; }

  int generator_count() const { return static_cast<int>(generator_poles_.size()); }
  std::span<const int> generator_poles() const { return generator_poles_; }
  /// Index of the shift function among the generators.
  int shift_generator() const { return kind_ == CurveKind::kHermitian ? 1 : 3; }

  /// Pole order at P_inf (negative for monomials with a zero there).
  int pole_order(const Monomial& m) const;

  const std::vector<RationalPoint>& points() const { return points_; }
  std::size_t origin_index() const { return origin_index_; }
  std::size_t infinity_index() const { return points_.size() - 1; }
  bool satisfies_equation(Element x, Element y) const;

  /// Values of all generators at an affine point.
  std::array<Element, 4> generator_values(const RationalPoint& p) const;
  /// Throws std::domain_error at a pole.
  Element evaluate(const Monomial& m, const RationalPoint& p) const;
  Element evaluate_shift(const RationalPoint& p) const;

  /// Power series of a generator at P_00 in the local parameter x, known
  /// modulo x^precision.
  LocalExpansion generator_expansion(int generator, int precision) const;
  /// Expansion of a monomial at P_00, certified to at least `precision`.
  LocalExpansion expand_at_origin(const Monomial& m, int precision) const;

 private:
  Curve() = default;
  void enumerate_points();

  std::string name_;
  CurveKind kind_ = CurveKind::kHermitian;
  int q_ = 0;
  std::shared_ptr<const Field> field_;
  int genus_ = 0;
  int shift_period_ = 0;
  std::vector<int> generator_poles_;
  std::vector<RationalPoint> points_;
  std::size_t origin_index_ = 0;
};

}  // namespace agc

#endif  // AGBOUNDS_CURVE_HPP
