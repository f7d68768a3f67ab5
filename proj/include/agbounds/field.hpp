#ifndef AGBOUNDS_FIELD_HPP
#define AGBOUNDS_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace agc {

/// Monic modulus over Z_p defining GF(p^m) in the polynomial basis.
/// `modulus` holds the m+1 coefficients, constant term first.
struct FieldSpec {
  int characteristic = 2;
  int degree = 1;
  std::vector<int> modulus;

  static FieldSpec gf4();   // t^2 + t + 1
  static FieldSpec gf8();   // t^3 + t + 1
  static FieldSpec gf9();   // t^2 + 1 over Z_3
  static FieldSpec gf16();  // t^4 + t + 1
};

/// Field element encoded by its index sum(c_i p^i) over the polynomial basis.
struct Element {
  std::uint8_t index = 0;

  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;
};

/// GF(p^m) with p in {2,3} and p^m <= 16. Arithmetic goes through full
/// addition/multiplication tables; a Field is immutable once built.
class Field {
 public:
  static constexpr int kMaxOrder = 16;

  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  int order() const { return order_; }
  int characteristic() const { return spec_.characteristic; }
  int degree() const { return spec_.degree; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  /// The class of t, a root of the modulus.
  Element generator() const;
  Element element(int index) const;
  std::vector<Element> elements() const;

  Element add(Element a, Element b) const { return Element{add_[a.index][b.index]}; }
  Element sub(Element a, Element b) const { return Element{add_[a.index][neg_[b.index]]}; }
  Element neg(Element a) const { return Element{neg_[a.index]}; }
  Element mul(Element a, Element b) const { return Element{mul_[a.index][b.index]}; }
  Element inv(Element a) const;  // throws std::domain_error on zero
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, long long e) const;
  Element frobenius(Element a) const { return pow(a, characteristic()); }

  /// Square root in characteristic 2 (the inverse Frobenius).
  Element sqrt(Element a) const;

  std::vector<int> coefficients(Element a) const;
  Element from_coefficients(const std::vector<int>& c) const;

  std::string to_string(Element a) const { return std::to_string(a.index); }

 private:
  using Table = std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder>;

  FieldSpec spec_;
  int order_ = 0;
  Table add_{};
  Table mul_{};
  std::array<std::uint8_t, kMaxOrder> neg_{};
  std::array<std::uint8_t, kMaxOrder> inv_{};
  std::array<std::uint8_t, kMaxOrder> sqrt_{};
};

/// True iff the monic polynomial (constant term first) is irreducible over Z_p.
/// Exhaustive factor search; intended for degree <= 4.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace agc

#endif  // AGBOUNDS_FIELD_HPP
