#ifndef AGBOUNDS_CODES_HPP
#define AGBOUNDS_CODES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "agbounds/bounds.hpp"
#include "agbounds/matrix.hpp"
#include "agbounds/rrspace.hpp"

namespace agc {

enum class CodeKind { kEvaluation, kResidue };

/// Linear code over the curve's field with generator rows in reduced echelon form.
struct Code {
  CodeKind kind = CodeKind::kEvaluation;
  std::string curve;
  Divisor divisor;
  /// Coordinate order: indices into Curve::points().
  std::vector<std::size_t> points;
  Matrix generator;

  std::size_t length() const { return points.size(); }
  std::size_t dimension() const { return generator.rows(); }
};

/// Every rational point off supp(G), in curve order.
std::vector<std::size_t> evaluation_points(const Curve& curve, const Divisor& g);

/// G - D as a divisor RiemannRoch can handle.
Divisor minus_evaluation_set(const Curve& curve, const Divisor& g);

/// C_L(D, G). Throws std::logic_error if the rank disagrees with l(G) - l(G - D).
Code cl_code(const RiemannRoch& rr, const Divisor& g);

/// C_Omega(D, G) as the dual of C_L(D, G). Throws std::logic_error if the
/// dimension disagrees with i(G - D) - i(G).
Code comega_code(const RiemannRoch& rr, const Divisor& g);

/// Generator of the dual code.
Code dual(const Field& f, const Code& c);

/// Minimum weight of a nonzero codeword by exhaustive enumeration.
/// Throws std::invalid_argument("trivial code") when k = 0 and
/// std::length_error("budget exceeded") when q^k > budget.
int min_distance_exhaustive(const Field& f, const Code& c, std::uint64_t budget, int threads = 1);

/// Number of codewords of each weight 0..n. Same budget rule.
std::vector<std::uint64_t> weight_distribution(const Field& f, const Code& c, std::uint64_t budget);

struct SoundnessCase {
  Divisor g;
  int distance = 0;
  int designed = 0;
  int floor = 0;  // 0 when not applicable
  int kp = 0;     // 0 when not applicable
  int af = 0;
};

struct SoundnessReport {
  std::vector<SoundnessCase> checked;
  int skipped = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// For every two-point G = a P_inf + b P_00 with deg_lo <= deg G <= deg_hi and
/// a, b in [-window, window], checks brute distance >= af >= floor, kp, designed
/// and that every witness re-verifies. Codes beyond the budget or of dimension
/// zero are skipped.
SoundnessReport verify_soundness(const BoundSearch& search, int deg_lo, int deg_hi, int window,
                                 std::uint64_t budget, int threads = 1);

}  // namespace agc

#endif  // AGBOUNDS_CODES_HPP
