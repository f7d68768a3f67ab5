#include "agbounds/properties.hpp"

#include <algorithm>

namespace agc {

namespace {

Divisor random_window_divisor(int genus, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-(4 * genus + 4), 6 * genus);
  return Divisor{coeff(rng), coeff(rng), {}};
}

std::string describe(const Divisor& g, const std::string& what) { return to_string(g) + ": " + what; }

}  // namespace

PropertyReport check_dominance(const BoundSearch& search, int samples, std::mt19937_64& rng) {
  PropertyReport report;
  auto check = [&](const std::optional<BoundResult>& r, const Divisor& g) {
    if (!r) return;
    std::string why;
    if (!search.verify(*r, &why)) {
      report.violations.push_back(describe(g, std::string(method_name(r->method)) + " witness: " + why));
    }
  };
  for (int i = 0; i < samples; ++i) {
    const Divisor g = random_window_divisor(search.genus(), rng);
    const Support s = support_for(g);
    for (const auto& [k, rep] : search.representatives(g)) {
      auto wrap = [&](std::optional<BoundResult> r) {
        if (r) {
          r->g = g;
          r->shift = k;
          r->support = s;
        }
        return r;
      };
      const auto af = wrap(search.asymmetric_floor(rep, s));
      const auto fl = wrap(search.floor_bound(rep, s));
      check(af, g);
      check(fl, g);
      if (fl && fl->value > af->value) report.violations.push_back(describe(rep, "floor exceeds af"));
      for (Place p : {Place::kInfinity, Place::kOrigin}) {
        const auto kp = wrap(search.kirfel_pellikaan(rep, p, s));
        check(kp, g);
        if (kp && kp->value > af->value) report.violations.push_back(describe(rep, "kp exceeds af"));
      }
      if (af->value < search.designed_distance(rep)) report.violations.push_back(describe(rep, "af below designed"));
    }
    check(search.best(g), g);
    ++report.checked;
  }
  return report;
}

PropertyReport check_proof_lemma(const BoundSearch& search, int samples, std::mt19937_64& rng) {
  const RiemannRoch& rr = search.rr();
  const Curve& curve = rr.curve();
  const int g = search.genus();
  std::vector<std::size_t> affine;
  for (std::size_t i = 0; i < curve.points().size(); ++i) {
    if (i != curve.origin_index() && i != curve.infinity_index()) affine.push_back(i);
  }
  std::uniform_int_distribution<int> coeff(-(4 * g + 4), 6 * g);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(affine.size(), 2 * g + 4));

  PropertyReport report;
  while (report.checked < samples) {
    const int a = coeff(rng);
    std::uniform_int_distribution<int> shift(-(g + 4), 2 * g - 2);
    const Divisor b{a, shift(rng) - a, {}};
    // Nonzero effective Z with l(B + Z) = l(B), found by scanning a small box.
    std::vector<Divisor> zs;
    const int base = search.ell(b.inf, b.origin);
    for (int z1 = 0; z1 <= 2 * g + 2; ++z1) {
      for (int z2 = 0; z1 + z2 <= 2 * g; ++z2) {
        if (z1 + z2 > 0 && search.ell(b.inf + z1, b.origin + z2) == base) zs.push_back(Divisor{z1, z2, {}});
      }
    }
    if (zs.empty()) continue;
    const Divisor z = zs[std::uniform_int_distribution<std::size_t>(0, zs.size() - 1)(rng)];

    std::vector<std::size_t> pool = affine;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count(rng));
    std::sort(pool.begin(), pool.end());

    const int lhs = rr.dim((b + z).minus_points(pool));
    const int rhs = rr.dim(b.minus_points(pool));
    if (lhs != rhs) {
      report.violations.push_back(describe(b, "Z = " + to_string(z) + ", |D'| = " + std::to_string(pool.size()) +
                                                  ": " + std::to_string(lhs) + " != " + std::to_string(rhs)));
    }
    ++report.checked;
  }
  return report;
}

PropertyReport check_riemann_roch(const RiemannRoch& rr, int lo, int hi) {
  PropertyReport report;
  const int g = rr.genus();
  const int m = rr.curve().shift_period();
  for (int a = lo; a <= hi; ++a) {
    for (int b = lo; b <= hi; ++b) {
      const Divisor d{a, b, {}};
      const int ell = rr.dim(d);
      const int deg = a + b;
      if (deg >= 2 * g - 1 && ell != deg + 1 - g) report.violations.push_back(describe(d, "not deg + 1 - g"));
      if (ell - rr.dim(Divisor{2 * g - 2 - a, -b, {}}) != deg + 1 - g) {
        report.violations.push_back(describe(d, "duality fails"));
      }
      if (ell != rr.dim(Divisor{a + m, b - m, {}})) report.violations.push_back(describe(d, "shift changes l"));
      ++report.checked;
    }
  }
  return report;
}

}  // namespace agc
