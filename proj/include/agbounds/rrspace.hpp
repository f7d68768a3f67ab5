#ifndef AGBOUNDS_RRSPACE_HPP
#define AGBOUNDS_RRSPACE_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "agbounds/curve.hpp"
#include "agbounds/divisor.hpp"
#include "agbounds/matrix.hpp"

namespace agc {

/// Explicit basis of L(A). Member i is shift^shift_power * sum_j members[i][j] * monomials[j].
struct FunctionBasis {
  int shift_power = 0;
  std::vector<Monomial> monomials;
  std::vector<Vector> members;

  std::size_t size() const { return members.size(); }
};

enum class FloorOrder { kInfinityFirst, kOriginFirst, kInfinityOnly, kOriginOnly };

/// Riemann-Roch spaces L(a P_inf + b P_00 - sum P_i) on a Hermitian or Suzuki curve.
///
/// Every member of L(A) is shift^-k * g with k = max(0, ceil(b / m_s)) and
/// g in L((a + m_s k) P_inf), where g must vanish to order m_s k - b at P_00
/// and at every constraint point. Dimensions come from the rank of that
/// linear system over the canonical monomial basis of L(N P_inf).
///
/// dim() results are memoized; the cache is safe for concurrent use.
class RiemannRoch {
 public:
  explicit RiemannRoch(Curve curve);

  const Curve& curve() const { return curve_; }
  int genus() const { return curve_.genus(); }

  /// Canonical monomials with pole order <= n at P_inf, sorted by pole order.
  std::vector<Monomial> pole_basis(int n) const;

  int dim(const Divisor& a) const;
  int dim_uncached(const Divisor& a) const;
  /// i(A) = l(A) - deg A - 1 + g.
  int index_of_specialty(const Divisor& a) const;

  FunctionBasis function_basis(const Divisor& a) const;
  /// Value of basis member `member` at an affine point off P_00 when shift_power < 0.
  Element evaluate(const FunctionBasis& basis, std::size_t member, const RationalPoint& p) const;

  /// Minimal divisor with the same L-space, reducing only at P_inf and P_00.
  /// Throws std::domain_error when l(A) = 0.
  Divisor floor(const Divisor& a, FloorOrder order = FloorOrder::kInfinityFirst) const;

  /// l(A + alpha P) == l(A + (alpha - 1) P).
  bool is_gap(const Divisor& a, Place p, int alpha) const;

  /// Weierstrass non-gaps at P_inf up to `limit`.
  std::vector<int> semigroup(int limit) const;

  /// Warm-start rows "curve,a,b,ell" for this curve. With `verify`, each row
  /// is recomputed and a mismatch throws std::runtime_error. Returns rows loaded.
  std::size_t load_cache(std::istream& in, bool verify);
  void save_cache(std::ostream& out) const;
  std::size_t cache_size() const;

 private:
  struct System {
    int shift_power = 0;
    std::vector<Monomial> monomials;
    Matrix matrix;
  };

  System build_system(const Divisor& a) const;
  void check_constraints(const Divisor& a) const;
  /// Expansions at P_00 of the x-free basis factors, each known mod x^precision.
  std::shared_ptr<const std::vector<LocalExpansion>> tails(int precision) const;

  Curve curve_;
  std::vector<std::array<int, 4>> tail_exponents_;

  using Key = std::tuple<int, int, std::vector<std::size_t>>;
  mutable std::shared_mutex cache_mutex_;
  mutable std::map<Key, int> cache_;

  mutable std::shared_mutex tails_mutex_;
  mutable std::shared_ptr<const std::vector<LocalExpansion>> tails_;
};

}  // namespace agc

#endif  // AGBOUNDS_RRSPACE_HPP
