#ifndef AGBOUNDS_PROPERTIES_HPP
#define AGBOUNDS_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "agbounds/bounds.hpp"

namespace agc {

struct PropertyReport {
  int checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Random two-point G with coefficients in [-(4g+4), 6g]. For each representative: af >= floor
/// and af >= kp at both places, and every witness re-verifies.
PropertyReport check_dominance(const BoundSearch& search, int samples, std::mt19937_64& rng);

/// Random B, nonzero effective Z with l(B + Z) = l(B), and a set D' of
/// affine points other than P_00; checks l(B + Z - D') = l(B - D').
PropertyReport check_proof_lemma(const BoundSearch& search, int samples, std::mt19937_64& rng);

/// Riemann-Roch exactness, duality against (2g-2) P_inf and shift invariance
/// for every a, b in [lo, hi].
PropertyReport check_riemann_roch(const RiemannRoch& rr, int lo, int hi);

}  // namespace agc

#endif  // AGBOUNDS_PROPERTIES_HPP
