#include "agbounds/rrspace.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace agc {

namespace {

int ceil_div(int a, int b) { return a > 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

RiemannRoch::RiemannRoch(Curve curve) : curve_(std::move(curve)) {
  if (curve_.kind() == CurveKind::kHermitian) {
    const int q = curve_.generator_poles()[0];
    for (int j = 0; j < q; ++j) tail_exponents_.push_back({0, j, 0, 0});
  } else {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) tail_exponents_.push_back({0, b, c, d});
      }
    }
  }
}

std::vector<Monomial> RiemannRoch::pole_basis(int n) const {
  std::vector<Monomial> out;
  const int x_pole = curve_.generator_poles()[0];
  for (const auto& tail : tail_exponents_) {
    const int tail_pole = curve_.pole_order(Monomial{tail, 0});
    for (int a = 0; tail_pole + a * x_pole <= n; ++a) {
      Monomial m{tail, 0};
      m.exponents[0] = a;
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& l, const Monomial& r) {
    return curve_.pole_order(l) < curve_.pole_order(r);
  });
  return out;
}

std::shared_ptr<const std::vector<LocalExpansion>> RiemannRoch::tails(int precision) const {
  {
    std::shared_lock lock(tails_mutex_);
    if (tails_ && tails_->front().precision() >= precision) return tails_;
  }
  std::unique_lock lock(tails_mutex_);
  if (tails_ && tails_->front().precision() >= precision) return tails_;
  const int target = std::max({precision, 64, tails_ ? 2 * tails_->front().precision() : 0});
  auto fresh = std::make_shared<std::vector<LocalExpansion>>();
  for (const auto& tail : tail_exponents_) {
    fresh->push_back(curve_.expand_at_origin(Monomial{tail, 0}, target));
  }
  tails_ = fresh;
  return tails_;
}

void RiemannRoch::check_constraints(const Divisor& a) const {
  for (std::size_t i = 0; i < a.constraints.size(); ++i) {
    const std::size_t p = a.constraints[i];
    if (p >= curve_.points().size() || curve_.points()[p].at_infinity) {
      throw std::invalid_argument("constraint point must be affine");
    }
    if (p == curve_.origin_index()) throw std::invalid_argument("constraint point must differ from P_00");
    if (i > 0 && a.constraints[i - 1] >= p) throw std::invalid_argument("constraints must be sorted and distinct");
  }
}

RiemannRoch::System RiemannRoch::build_system(const Divisor& a) const {
  check_constraints(a);
  const Field& f = curve_.field();
  const int m = curve_.shift_period();
  const int k = std::max(0, ceil_div(a.origin, m));
  const int n = a.inf + m * k;

  System sys;
  sys.shift_power = -k;
  sys.monomials = pole_basis(n);
  const std::size_t cols = sys.monomials.size();
  sys.matrix = Matrix(0, cols);
  if (cols == 0) return sys;

  const int order_rows = m * k - a.origin;
  if (order_rows > 0) {
    const auto expansions = tails(order_rows);
    std::vector<std::size_t> tail_of(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      auto tail = sys.monomials[j].exponents;
      tail[0] = 0;
      tail_of[j] = static_cast<std::size_t>(
          std::find(tail_exponents_.begin(), tail_exponents_.end(), tail) - tail_exponents_.begin());
    }
    Vector row(cols);
    for (int e = 0; e < order_rows; ++e) {
      for (std::size_t j = 0; j < cols; ++j) {
        const int x_power = sys.monomials[j].exponents[0];
        row[j] = e < x_power ? f.zero() : (*expansions)[tail_of[j]].coefficient(e - x_power);
      }
      sys.matrix.append_row(row);
    }
  }
  Vector row(cols);
  for (std::size_t p : a.constraints) {
    for (std::size_t j = 0; j < cols; ++j) row[j] = curve_.evaluate(sys.monomials[j], curve_.points()[p]);
    sys.matrix.append_row(row);
  }
  return sys;
}

int RiemannRoch::dim_uncached(const Divisor& a) const {
  if (a.degree() < 0) return 0;
  System sys = build_system(a);
  if (sys.monomials.empty()) return 0;
  const std::size_t rank = sys.matrix.rows() == 0 ? 0 : row_reduce(curve_.field(), sys.matrix).rank;
  return static_cast<int>(sys.monomials.size() - rank);
}

int RiemannRoch::dim(const Divisor& a) const {
  Key key{a.inf, a.origin, a.constraints};
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const int value = dim_uncached(a);
  std::unique_lock lock(cache_mutex_);
  cache_.emplace(std::move(key), value);
  return value;
}

int RiemannRoch::index_of_specialty(const Divisor& a) const {
  return dim(a) - a.degree() - 1 + genus();
}

FunctionBasis RiemannRoch::function_basis(const Divisor& a) const {
  FunctionBasis basis;
  if (a.degree() < 0) return basis;
  System sys = build_system(a);
  basis.shift_power = sys.shift_power;
  basis.monomials = sys.monomials;
  if (sys.monomials.empty()) return basis;
  if (sys.matrix.rows() == 0) {
    for (std::size_t j = 0; j < sys.monomials.size(); ++j) {
      Vector v(sys.monomials.size(), curve_.field().zero());
      v[j] = curve_.field().one();
      basis.members.push_back(std::move(v));
    }
    return basis;
  }
  basis.members = row_reduce(curve_.field(), sys.matrix).nullspace;
  return basis;
}

Element RiemannRoch::evaluate(const FunctionBasis& basis, std::size_t member,
                              const RationalPoint& p) const {
  const Field& f = curve_.field();
  const Vector& c = basis.members.at(member);
  if (p.at_infinity) {
    // With x = t^-q_x (1 + ...) for a suitable local parameter t at P_inf,
    // every generator and hence every monomial has leading coefficient 1.
    // So f = shift^-k * sum c_j M_j takes the value of the coefficient of
    // the monomial with pole order m_s k.
    const int top = -basis.shift_power * curve_.shift_period();
    Element value = f.zero();
    for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
      if (c[j] == f.zero()) continue;
      const int pole = curve_.pole_order(basis.monomials[j]);
      if (pole > top) throw std::domain_error("function has a pole at infinity");
      if (pole == top) value = c[j];
    }
    return value;
  }
  Element acc = f.zero();
  for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
    if (c[j] == f.zero()) continue;
    acc = f.add(acc, f.mul(c[j], curve_.evaluate(basis.monomials[j], p)));
  }
  if (basis.shift_power != 0) {
    Monomial shift{};
    shift.shift = basis.shift_power;
    acc = f.mul(acc, curve_.evaluate(shift, p));
  }
  return acc;
}

Divisor RiemannRoch::floor(const Divisor& a, FloorOrder order) const {
  const int ell = dim(a);
  if (ell == 0) throw std::domain_error("floor undefined: L(A) = 0");
  std::vector<Place> places;
  switch (order) {
    case FloorOrder::kInfinityFirst: places = {Place::kInfinity, Place::kOrigin}; break;
    case FloorOrder::kOriginFirst: places = {Place::kOrigin, Place::kInfinity}; break;
    case FloorOrder::kInfinityOnly: places = {Place::kInfinity}; break;
    case FloorOrder::kOriginOnly: places = {Place::kOrigin}; break;
  }
  Divisor cur = a;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (Place p : places) {
      while (dim(cur.plus(p, -1)) == ell) {
        cur = cur.plus(p, -1);
        progressed = true;
      }
    }
  }
  return cur;
}

bool RiemannRoch::is_gap(const Divisor& a, Place p, int alpha) const {
  return dim(a.plus(p, alpha)) == dim(a.plus(p, alpha - 1));
}

std::vector<int> RiemannRoch::semigroup(int limit) const {
  std::vector<int> out;
  for (int n = 0; n <= limit; ++n) {
    if (!is_gap(Divisor{}, Place::kInfinity, n)) out.push_back(n);
  }
  return out;
}

std::size_t RiemannRoch::load_cache(std::istream& in, bool verify) {
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("curve,", 0) == 0) continue;
    std::istringstream row(line);
    std::string name, a, b, ell;
    if (!std::getline(row, name, ',') || !std::getline(row, a, ',') || !std::getline(row, b, ',') ||
        !std::getline(row, ell)) {
      throw std::runtime_error("malformed cache row: " + line);
    }
    if (name != curve_.name()) continue;
    const Divisor d{std::stoi(a), std::stoi(b), {}};
    const int value = std::stoi(ell);
    if (verify && dim_uncached(d) != value) {
      throw std::runtime_error("cache row disagrees with recomputation: " + line);
    }
    std::unique_lock lock(cache_mutex_);
    cache_[Key{d.inf, d.origin, {}}] = value;
    ++loaded;
  }
  return loaded;
}

void RiemannRoch::save_cache(std::ostream& out) const {
  std::shared_lock lock(cache_mutex_);
  out << "curve,a,b,ell\n";
  for (const auto& [key, value] : cache_) {
    if (!std::get<2>(key).empty()) continue;
    out << curve_.name() << ',' << std::get<0>(key) << ',' << std::get<1>(key) << ',' << value << '\n';
  }
}

std::size_t RiemannRoch::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

}  // namespace agc
