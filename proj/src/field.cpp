#include "agbounds/field.hpp"

#include <stdexcept>

namespace agc {

namespace {

// Polynomials over Z_p, constant term first, trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod_p(int v, int p) {
  v %= p;
  return v < 0 ? v + p : v;
}

int inverse_mod_p(int v, int p) {
  for (int c = 1; c < p; ++c) {
    if ((c * v) % p == 1) return c;
  }
  throw std::domain_error("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inverse_mod_p(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int factor = mod_p(a.back() * lead_inv, p);
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = mod_p(a[shift + i] - factor * m[i], p);
    }
    trim(a);
  }
  return a;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

FieldSpec FieldSpec::gf4() { return {2, 2, {1, 1, 1}}; }
FieldSpec FieldSpec::gf8() { return {2, 3, {1, 1, 0, 1}}; }
FieldSpec FieldSpec::gf9() { return {3, 2, {1, 0, 1}}; }
FieldSpec FieldSpec::gf16() { return {2, 4, {1, 1, 0, 0, 1}}; }

bool is_irreducible(const std::vector<int>& poly, int p) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // Any factorization has a monic factor of degree <= deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    const int count = ipow(p, d);
    for (int code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const int p = spec_.characteristic;
  const int m = spec_.degree;
  if (p != 2 && p != 3) throw std::invalid_argument("characteristic must be 2 or 3");
  if (m < 1 || static_cast<int>(spec_.modulus.size()) != m + 1 || spec_.modulus.back() != 1) {
    throw std::invalid_argument("modulus must be monic of the stated degree");
  }
  for (int c : spec_.modulus) {
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  order_ = ipow(p, m);
  if (order_ > kMaxOrder) throw std::invalid_argument("field order exceeds 16");
  if (!is_irreducible(spec_.modulus, p)) {
    throw std::invalid_argument("reducible modulus");
  }

  auto to_poly = [&](int index) {
    Poly a(m, 0);
    for (int i = 0; i < m; ++i) {
      a[i] = index % p;
      index /= p;
    }
    return a;
  };
  auto to_index = [&](Poly a) {
    a.resize(m, 0);
    int index = 0;
    for (int i = m - 1; i >= 0; --i) index = index * p + a[i];
    return index;
  };

  for (int i = 0; i < order_; ++i) {
    const Poly a = to_poly(i);
    for (int j = 0; j < order_; ++j) {
      const Poly b = to_poly(j);
      Poly sum(m);
      for (int k = 0; k < m; ++k) sum[k] = (a[k] + b[k]) % p;
      add_[i][j] = static_cast<std::uint8_t>(to_index(sum));

      Poly prod(2 * m, 0);
      for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) prod[u + v] = (prod[u + v] + a[u] * b[v]) % p;
      }
      mul_[i][j] = static_cast<std::uint8_t>(to_index(poly_mod(prod, spec_.modulus, p)));
    }
    Poly n(m);
    for (int k = 0; k < m; ++k) n[k] = mod_p(-a[k], p);
    neg_[i] = static_cast<std::uint8_t>(to_index(n));
  }
  for (int i = 1; i < order_; ++i) {
    for (int j = 1; j < order_; ++j) {
      if (mul_[i][j] == 1) inv_[i] = static_cast<std::uint8_t>(j);
    }
  }
  if (p == 2) {
    for (int i = 0; i < order_; ++i) sqrt_[mul_[i][i]] = static_cast<std::uint8_t>(i);
  }
}

Element Field::generator() const {
  return spec_.degree == 1 ? element(1) : element(spec_.characteristic);
}

Element Field::element(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("field element index");
  return Element{static_cast<std::uint8_t>(index)};
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (int i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw std::domain_error("inverse of zero");
  return Element{inv_[a.index]};
}

Element Field::pow(Element a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Element Field::sqrt(Element a) const {
  if (characteristic() != 2) throw std::domain_error("sqrt requires characteristic 2");
  return Element{sqrt_[a.index]};
}

std::vector<int> Field::coefficients(Element a) const {
  std::vector<int> c(spec_.degree);
  int index = a.index;
  for (int i = 0; i < spec_.degree; ++i) {
    c[i] = index % spec_.characteristic;
    index /= spec_.characteristic;
  }
  return c;
}

Element Field::from_coefficients(const std::vector<int>& c) const {
  int index = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    index = index * characteristic() + mod_p(c[i], characteristic());
  }
  return element(index);
}

}  // namespace agc
