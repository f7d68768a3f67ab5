#include "agbounds/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace agc {

LocalExpansion::LocalExpansion(const Field& field, int offset, std::vector<Element> coeffs)
    : field_(&field), offset_(offset), coeffs_(std::move(coeffs)) {}

LocalExpansion LocalExpansion::constant(const Field& field, Element c, int precision) {
  std::vector<Element> coeffs(std::max(precision, 0), field.zero());
  if (!coeffs.empty()) coeffs[0] = c;
  return LocalExpansion(field, 0, std::move(coeffs));
}

LocalExpansion LocalExpansion::monomial(const Field& field, int exponent, int precision) {
  std::vector<Element> coeffs(std::max(precision - exponent, 0), field.zero());
  if (!coeffs.empty()) coeffs[0] = field.one();
  return LocalExpansion(field, exponent, std::move(coeffs));
}

LocalExpansion LocalExpansion::zero(const Field& field, int precision) {
  return LocalExpansion(field, 0, std::vector<Element>(std::max(precision, 0), field.zero()));
}

Element LocalExpansion::coefficient(int exponent) const {
  if (exponent >= precision()) throw std::out_of_range("coefficient beyond precision");
  if (exponent < offset_) return field_->zero();
  return coeffs_[exponent - offset_];
}

std::optional<int> LocalExpansion::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != field_->zero()) return offset_ + static_cast<int>(i);
  }
  return std::nullopt;
}

LocalExpansion LocalExpansion::truncated(int precision) const {
  if (precision >= this->precision()) return *this;
  const int keep = std::max(precision - offset_, 0);
  return LocalExpansion(*field_, std::min(offset_, precision),
                        std::vector<Element>(coeffs_.begin(), coeffs_.begin() + keep));
}

namespace {

LocalExpansion combine(const LocalExpansion& a, const LocalExpansion& b, bool subtract) {
  const Field& f = a.field();
  const int lo = std::min(a.offset(), b.offset());
  const int hi = std::min(a.precision(), b.precision());
  std::vector<Element> out(std::max(hi - lo, 0), f.zero());
  for (int e = lo; e < hi; ++e) {
    const Element bv = b.coefficient(e);
    out[e - lo] = f.add(a.coefficient(e), subtract ? f.neg(bv) : bv);
  }
  return LocalExpansion(f, std::min(lo, hi), std::move(out));
}

}  // namespace

LocalExpansion operator+(const LocalExpansion& a, const LocalExpansion& b) {
  return combine(a, b, false);
}

LocalExpansion operator-(const LocalExpansion& a, const LocalExpansion& b) {
  return combine(a, b, true);
}

LocalExpansion operator*(const LocalExpansion& a, const LocalExpansion& b) {
  const Field& f = a.field();
  // Lower bounds on the true valuations decide how far the product is known.
  const int va = a.valuation().value_or(a.precision());
  const int vb = b.valuation().value_or(b.precision());
  const int precision = std::min(a.precision() + vb, b.precision() + va);
  const int lo = a.offset() + b.offset();
  std::vector<Element> out(std::max(precision - lo, 0), f.zero());
  for (int i = a.offset(); i < a.precision(); ++i) {
    const Element ai = a.coefficient(i);
    if (ai == f.zero()) continue;
    for (int j = b.offset(); j < b.precision() && i + j < precision; ++j) {
      out[i + j - lo] = f.add(out[i + j - lo], f.mul(ai, b.coefficient(j)));
    }
  }
  return LocalExpansion(f, std::min(lo, precision), std::move(out));
}

LocalExpansion LocalExpansion::scaled(Element c) const {
  std::vector<Element> out(coeffs_);
  for (auto& v : out) v = field_->mul(v, c);
  return LocalExpansion(*field_, offset_, std::move(out));
}

LocalExpansion LocalExpansion::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LocalExpansion result = constant(*field_, field_->one(), precision() * std::max(e, 1) + 1);
  LocalExpansion base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LocalExpansion LocalExpansion::inverse() const {
  const auto v = valuation();
  if (!v) throw std::domain_error("inverse of a series with valuation beyond precision");
  const Field& f = *field_;
  // this = x^v * u with u a unit known to relative precision n.
  const int n = precision() - *v;
  std::vector<Element> u(n);
  for (int i = 0; i < n; ++i) u[i] = coefficient(*v + i);
  const Element u0_inv = f.inv(u[0]);
  std::vector<Element> w(n, f.zero());
  w[0] = u0_inv;
  for (int k = 1; k < n; ++k) {
    Element acc = f.zero();
    for (int i = 1; i <= k; ++i) acc = f.add(acc, f.mul(u[i], w[k - i]));
    w[k] = f.neg(f.mul(acc, u0_inv));
  }
  return LocalExpansion(f, -*v, std::move(w));
}

LocalExpansion LocalExpansion::sqrt() const {
  const Field& f = *field_;
  if (f.characteristic() != 2) throw std::domain_error("series sqrt requires characteristic 2");
  const auto v = valuation();
  const int start = v ? *v : precision();
  if (v && (*v % 2) != 0) throw std::domain_error("odd valuation has no square root");
  const int lo = start - (start % 2 != 0 ? 1 : 0);
  for (int e = lo; e < precision(); ++e) {
    if ((e % 2 != 0) && coefficient(e) != f.zero()) {
      throw std::domain_error("series is not a square");
    }
  }
  const int half_lo = lo / 2;
  // f known mod x^p determines sqrt(f) mod x^ceil(p/2).
  const int p = precision();
  const int half_p = (p >= 0) ? (p + 1) / 2 : -((-p) / 2);
  std::vector<Element> out(std::max(half_p - half_lo, 0), f.zero());
  for (int i = half_lo; i < half_p; ++i) out[i - half_lo] = f.sqrt(coefficient(2 * i));
  return LocalExpansion(f, std::min(half_lo, half_p), std::move(out));
}

bool LocalExpansion::agrees_with(const LocalExpansion& other) const {
  const int lo = std::min(offset_, other.offset_);
  const int hi = std::min(precision(), other.precision());
  for (int e = lo; e < hi; ++e) {
    if (coefficient(e) != other.coefficient(e)) return false;
  }
  return true;
}

}  // namespace agc
