#ifndef AGBOUNDS_BOUNDS_HPP
#define AGBOUNDS_BOUNDS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agbounds/divisor.hpp"
#include "agbounds/rrspace.hpp"

namespace agc {

enum class Method { kDesigned, kFloor, kKirfelPellikaan, kAsymmetricFloor };

const char* method_name(Method m);

/// Places a witness may use: the designated places outside the evaluation
/// set D. D is every rational point off supp(G), so G = a P_inf keeps P_00 in
/// D and G = b P_00 keeps P_inf in D. G = 0 is treated as two-point.
enum class Support { kTwoPoint, kInfinityOnly, kOriginOnly };

Support support_for(const Divisor& g);
bool uses_place(Support s, Place p);

/// H with H + floor(H) = G.
struct FloorWitness {
  Divisor h;
  Divisor floor_h;
};

/// alpha..alpha+t are F-gaps at P, beta-t..beta are G'-gaps at P, and
/// G = F + G' + (alpha + beta - 1) P.
struct KpWitness {
  Divisor f;
  Divisor g_prime;
  Place place = Place::kInfinity;
  int alpha = 0;
  int beta = 0;
  int t = 0;
};

/// G = A + B, Z effective, l(A) = l(A - Z), l(B) = l(B + Z).
struct AfWitness {
  Divisor a;
  Divisor b;
  Divisor z;
};

using Witness = std::variant<std::monostate, FloorWitness, KpWitness, AfWitness>;

struct BoundResult {
  Method method = Method::kDesigned;
  int value = 0;
  Divisor g;
  Support support = Support::kTwoPoint;
  /// representative = g + shift * (m_s P_00 - m_s P_inf); the witness refers to it.
  int shift = 0;
  Divisor representative;
  Witness witness;
};

/// Lower bounds on d(C_Omega(D, G)) for two-point G, where D is every other
/// rational point.
///
/// Two-point dimensions only depend on the degree and on the P_00 coefficient
/// modulo m_s, so the searches read a small class table built once from
/// RiemannRoch::dim. verify() re-checks witnesses through RiemannRoch directly.
class BoundSearch {
 public:
  explicit BoundSearch(const RiemannRoch& rr);

  const RiemannRoch& rr() const { return *rr_; }
  int genus() const { return genus_; }

  /// deg G - (2g - 2)
  int designed_distance(const Divisor& g) const;

  BoundResult designed(const Divisor& g) const;
  BoundResult asymmetric_floor(const Divisor& g) const { return asymmetric_floor(g, support_for(g)); }
  BoundResult asymmetric_floor(const Divisor& g, Support s) const;
  std::optional<BoundResult> floor_bound(const Divisor& g) const { return floor_bound(g, support_for(g)); }
  std::optional<BoundResult> floor_bound(const Divisor& g, Support s) const;
  std::optional<BoundResult> kirfel_pellikaan(const Divisor& g, Place p) const {
    return kirfel_pellikaan(g, p, support_for(g));
  }
  std::optional<BoundResult> kirfel_pellikaan(const Divisor& g, Place p, Support s) const;

  /// Linearly equivalent divisors sharing G's evaluation set: m_s of them for
  /// two-point support, G alone for one-point codes. Shift 0 comes first.
  std::vector<std::pair<int, Divisor>> representatives(const Divisor& g) const;

  /// Best value of one method over all representatives (KP over both places).
  /// nullopt when the method applies to no representative.
  std::optional<BoundResult> best(const Divisor& g, Method m) const;
  /// Best over all methods.
  BoundResult best(const Divisor& g) const;

  /// Independent re-check of a result against RiemannRoch::dim; on failure
  /// writes the reason to `why` when given.
  bool verify(const BoundResult& r, std::string* why = nullptr) const;

  /// l(inf P_inf + origin P_00) through the class table.
  int ell(int inf, int origin) const;

 private:
  void floor_excess(int inf, int origin, Support s, int* e_inf, int* e_origin) const;
  BoundResult make_result(Method m, const Divisor& g, Support s, int value) const;
  /// Largest z_origin for each z_inf in [0, cap] with l(X -/+ Z) = l(X), or -1.
  void staircase(int inf, int origin, int sign, Support s, std::vector<int>& out) const;
  void check_input(const Divisor& g, Support s) const;

  const RiemannRoch* rr_;
  int genus_;
  int period_;
  int cap_;                     // per-coefficient bound on Z
  std::vector<int> ell_table_;  // [deg * period + residue] for 0 <= deg <= 2g-2
};

}  // namespace agc

#endif  // AGBOUNDS_BOUNDS_HPP
