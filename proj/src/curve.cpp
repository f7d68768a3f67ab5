#include "agbounds/curve.hpp"

#include <stdexcept>

namespace agc {

namespace {

FieldSpec hermitian_field(int q) {
  switch (q) {
    case 2: return FieldSpec::gf4();
    case 3: return FieldSpec::gf9();
    case 4: return FieldSpec::gf16();
    default: throw std::invalid_argument("unsupported Hermitian parameter q=" + std::to_string(q));
  }
}

// (sum c_i x^i)^power for power a power of the characteristic, truncated.
std::vector<Element> frobenius_series(const Field& f, const std::vector<Element>& s, int power) {
  std::vector<Element> out(s.size(), f.zero());
  for (std::size_t i = 0; i * power < s.size(); ++i) out[i * power] = f.pow(s[i], power);
  return out;
}

}  // namespace

Curve Curve::hermitian(int q) {
  Curve c;
  c.field_ = std::make_shared<const Field>(hermitian_field(q));
  c.kind_ = CurveKind::kHermitian;
  c.q_ = q;
  c.name_ = "hermitian" + std::to_string(q * q);
  c.genus_ = q * (q - 1) / 2;
  c.shift_period_ = q + 1;
  c.generator_poles_ = {q, q + 1};
  c.enumerate_points();
  return c;
}

Curve Curve::suzuki() {
  Curve c;
  c.field_ = std::make_shared<const Field>(FieldSpec::gf8());
  c.kind_ = CurveKind::kSuzuki;
  c.q_ = 8;
  c.name_ = "suzuki8";
  c.genus_ = 14;
  c.shift_period_ = 13;
  c.generator_poles_ = {8, 10, 12, 13};
  c.enumerate_points();
  return c;
}

Curve Curve::from_name(std::string_view name) {
  if (name == "hermitian4") return hermitian(2);
  if (name == "hermitian9") return hermitian(3);
  if (name == "hermitian16") return hermitian(4);
  if (name == "suzuki8") return suzuki();
  throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

bool Curve::satisfies_equation(Element x, Element y) const {
  const Field& f = *field_;
  if (kind_ == CurveKind::kHermitian) {
    const Element lhs = f.add(f.pow(y, q_), y);
    return lhs == f.pow(x, q_ + 1);
  }
  const Element lhs = f.sub(f.pow(y, 8), y);
  const Element rhs = f.sub(f.pow(x, 10), f.pow(x, 3));
  return lhs == rhs;
}

void Curve::enumerate_points() {
  points_.clear();
  for (Element x : field_->elements()) {
    for (Element y : field_->elements()) {
      if (satisfies_equation(x, y)) points_.push_back(RationalPoint::affine(x, y));
    }
  }
  origin_index_ = 0;  // (0,0) sorts first
  points_.push_back(RationalPoint::infinity());
}

int Curve::pole_order(const Monomial& m) const {
  int pole = m.shift * shift_period_;
  for (int g = 0; g < generator_count(); ++g) pole += m.exponents[g] * generator_poles_[g];
  return pole;
}

std::array<Element, 4> Curve::generator_values(const RationalPoint& p) const {
  if (p.at_infinity) throw std::domain_error("generators have a pole at infinity");
  const Field& f = *field_;
  std::array<Element, 4> v{p.x, p.y, f.zero(), f.zero()};
  if (kind_ == CurveKind::kSuzuki) {
    v[2] = f.add(f.pow(p.x, 5), f.pow(p.y, 4));        // z = x^5 + y^4
    v[3] = f.add(f.mul(p.x, f.pow(p.y, 4)), f.pow(v[2], 4));  // w = x y^4 + z^4
  }
  return v;
}

Element Curve::evaluate_shift(const RationalPoint& p) const {
  return generator_values(p)[shift_generator()];
}

Element Curve::evaluate(const Monomial& m, const RationalPoint& p) const {
  const Field& f = *field_;
  if (p.at_infinity) {
    if (pole_order(m) > 0) throw std::domain_error("monomial has a pole at infinity");
    if (m == Monomial{}) return f.one();
    throw std::domain_error("evaluation at infinity only supported for constants");
  }
  const auto v = generator_values(p);
  Element out = f.one();
  for (int g = 0; g < generator_count(); ++g) out = f.mul(out, f.pow(v[g], m.exponents[g]));
  if (m.shift != 0) {
    const Element s = v[shift_generator()];
    if (s == f.zero() && m.shift < 0) throw std::domain_error("monomial has a pole at this point");
    out = f.mul(out, f.pow(s, m.shift));
  }
  return out;
}

LocalExpansion Curve::generator_expansion(int generator, int precision) const {
  const Field& f = *field_;
  const int n = std::max(precision, 1);
  if (generator == 0) return LocalExpansion::monomial(f, 1, n);

  // Solve the curve equation for y as a fixed point; each step multiplies
  // the valuation of the error by q.
  std::vector<Element> y(n, f.zero());
  for (;;) {
    std::vector<Element> next;
    if (kind_ == CurveKind::kHermitian) {
      next = frobenius_series(f, y, q_);
      for (auto& c : next) c = f.neg(c);
      if (q_ + 1 < n) next[q_ + 1] = f.add(next[q_ + 1], f.one());
    } else {
      next = frobenius_series(f, y, 8);
      if (3 < n) next[3] = f.add(next[3], f.one());
      if (10 < n) next[10] = f.sub(next[10], f.one());
    }
    if (next == y) break;
    y = std::move(next);
  }
  const LocalExpansion ys(f, 0, y);
  if (generator == 1) return ys;
  if (kind_ != CurveKind::kSuzuki || generator > 3) throw std::out_of_range("generator index");

  const LocalExpansion xs = LocalExpansion::monomial(f, 1, n);
  const LocalExpansion y4 = ys.pow(4).truncated(n);
  const LocalExpansion zs = (xs.pow(5) + y4).truncated(n);
  if (generator == 2) return zs;
  return (xs * y4 + zs.pow(4)).truncated(n);
}

LocalExpansion Curve::expand_at_origin(const Monomial& m, int precision) const {
  const Field& f = *field_;
  // Negative shift powers lose m_s * |shift| orders of precision on inversion.
  int working = precision + 2 * shift_period_ * std::max(-m.shift, 0) + 1;
  for (int attempt = 0; attempt < 8; ++attempt) {
    LocalExpansion acc = LocalExpansion::constant(f, f.one(), working);
    for (int g = 0; g < generator_count(); ++g) {
      if (m.exponents[g] == 0) continue;
      acc = acc * generator_expansion(g, working).pow(m.exponents[g]);
    }
    if (m.shift != 0) acc = acc * generator_expansion(shift_generator(), working).pow(m.shift);
    if (acc.precision() >= precision) return acc.truncated(precision);
    working *= 2;
  }
  throw std::runtime_error("could not certify expansion precision");
}

}  // namespace agc
