#include "agbounds/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace agc {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_half(int a) { return -floor_div(-a, 2); }
int mod(int a, int m) { return ((a % m) + m) % m; }

struct Window {
  int inf_lo, inf_hi, origin_lo, origin_hi;
};

// Coefficient ranges for A in the AF and KP searches.
Window witness_window(const Divisor& g, Support s, int margin) {
  Window w{-margin, g.inf + margin, -margin, g.origin + margin};
  if (!uses_place(s, Place::kInfinity)) w.inf_lo = w.inf_hi = 0;
  if (!uses_place(s, Place::kOrigin)) w.origin_lo = w.origin_hi = 0;
  return w;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kDesigned: return "designed";
    case Method::kFloor: return "floor";
    case Method::kKirfelPellikaan: return "kp";
    case Method::kAsymmetricFloor: return "af";
  }
  return "?";
}

Support support_for(const Divisor& g) {
  if (g.inf != 0 && g.origin == 0) return Support::kInfinityOnly;
  if (g.inf == 0 && g.origin != 0) return Support::kOriginOnly;
  return Support::kTwoPoint;
}

bool uses_place(Support s, Place p) {
  switch (s) {
    case Support::kTwoPoint: return true;
    case Support::kInfinityOnly: return p == Place::kInfinity;
    case Support::kOriginOnly: return p == Place::kOrigin;
  }
  return false;
}

BoundSearch::BoundSearch(const RiemannRoch& rr)
    : rr_(&rr),
      genus_(rr.genus()),
      period_(rr.curve().shift_period()),
      cap_(2 * rr.genus() + 2) {
  const int special_top = 2 * genus_ - 2;
  ell_table_.assign(static_cast<std::size_t>(std::max(special_top + 1, 0) * period_), 0);
  for (int d = 0; d <= special_top; ++d) {
    for (int r = 0; r < period_; ++r) ell_table_[d * period_ + r] = rr.dim(Divisor{d - r, r, {}});
  }
}

int BoundSearch::ell(int inf, int origin) const {
  const int d = inf + origin;
  if (d < 0) return 0;
  if (d >= 2 * genus_ - 1) return d + 1 - genus_;
  return ell_table_[d * period_ + mod(origin, period_)];
}

int BoundSearch::designed_distance(const Divisor& g) const { return g.degree() - (2 * genus_ - 2); }

void BoundSearch::check_input(const Divisor& g, Support s) const {
  if (!g.is_two_point()) throw std::invalid_argument("bounds need a two-point divisor");
  if ((!uses_place(s, Place::kInfinity) && g.inf != 0) || (!uses_place(s, Place::kOrigin) && g.origin != 0)) {
    throw std::invalid_argument("G is supported outside the allowed places");
  }
}

BoundResult BoundSearch::make_result(Method m, const Divisor& g, Support s, int value) const {
  BoundResult r;
  r.method = m;
  r.value = value;
  r.g = g;
  r.support = s;
  r.representative = g;
  return r;
}

BoundResult BoundSearch::designed(const Divisor& g) const {
  return make_result(Method::kDesigned, g, support_for(g), designed_distance(g));
}

void BoundSearch::staircase(int inf, int origin, int sign, Support s, std::vector<int>& out) const {
  out.assign(cap_ + 1, -1);
  const int base = ell(inf, origin);
  const int max_deg = 2 * genus_;
  const int z1_hi = uses_place(s, Place::kInfinity) ? std::min(cap_, max_deg) : 0;
  int z2 = uses_place(s, Place::kOrigin) ? std::min(cap_, max_deg) : 0;
  // The admissible Z form a down-set, so the z2 bound only shrinks as z1 grows.
  for (int z1 = 0; z1 <= z1_hi; ++z1) {
    z2 = std::min(z2, max_deg - z1);
    while (z2 >= 0 && ell(inf + sign * z1, origin + sign * z2) != base) --z2;
    if (z2 < 0) break;
    out[z1] = z2;
  }
}

BoundResult BoundSearch::asymmetric_floor(const Divisor& g, Support s) const {
  check_input(g, s);
  const Window w = witness_window(g, s, 2 * genus_ + 2);

  int best_deg = 0;
  Divisor best_a{w.inf_lo, w.origin_lo, {}};
  Divisor best_z{};

  // A in the same class as an earlier A yields the same Z profile, so only
  // the lexicographically first member of each class is searched.
  const int deg_lo = w.inf_lo + w.origin_lo;
  std::vector<char> seen(static_cast<std::size_t>((w.inf_hi + w.origin_hi - deg_lo + 1) * period_), 0);

  std::vector<int> down, up;
  for (int a1 = w.inf_lo; a1 <= w.inf_hi; ++a1) {
    for (int a2 = w.origin_lo; a2 <= w.origin_hi; ++a2) {
      const int b1 = g.inf - a1;
      const int b2 = g.origin - a2;
      // l(B) = l(B + Z) with Z != 0 needs B special.
      if (b1 + b2 > 2 * genus_ - 2) continue;
      char& mark = seen[(a1 + a2 - deg_lo) * period_ + mod(a2, period_)];
      if (mark) continue;
      mark = 1;
      staircase(a1, a2, -1, s, down);
      if (down[0] < 1 && down[1] < 0) continue;
      staircase(b1, b2, +1, s, up);
      for (int z1 = 0; z1 <= cap_; ++z1) {
        if (down[z1] < 0 || up[z1] < 0) break;
        const int z2 = std::min(down[z1], up[z1]);
        if (z1 + z2 > best_deg) {
          best_deg = z1 + z2;
          best_a = Divisor{a1, a2, {}};
          best_z = Divisor{z1, z2, {}};
        }
      }
    }
  }
  BoundResult r = make_result(Method::kAsymmetricFloor, g, s, designed_distance(g) + best_deg);
  r.witness = AfWitness{best_a, g - best_a, best_z};
  return r;
}

void BoundSearch::floor_excess(int inf, int origin, Support s, int* e_inf, int* e_origin) const {
  const int base = ell(inf, origin);
  const bool at_inf = uses_place(s, Place::kInfinity);
  const bool at_origin = uses_place(s, Place::kOrigin);
  int c1 = inf;
  int c2 = origin;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    while (at_inf && ell(c1 - 1, c2) == base) {
      --c1;
      progressed = true;
    }
    while (at_origin && ell(c1, c2 - 1) == base) {
      --c2;
      progressed = true;
    }
  }
  *e_inf = inf - c1;
  *e_origin = origin - c2;
}

std::optional<BoundResult> BoundSearch::floor_bound(const Divisor& g, Support s) const {
  check_input(g, s);
  const int span = 2 * genus_;
  Window w{ceil_half(g.inf) - span, g.inf + span, ceil_half(g.origin) - span, g.origin + span};
  if (!uses_place(s, Place::kInfinity)) w.inf_lo = w.inf_hi = 0;
  if (!uses_place(s, Place::kOrigin)) w.origin_lo = w.origin_hi = 0;

  std::optional<BoundResult> best;
  int best_excess = -1;
  for (int h1 = w.inf_lo; h1 <= w.inf_hi; ++h1) {
    // floor(H) <= H, so 2H >= G pointwise.
    if (2 * h1 < g.inf) continue;
    for (int h2 = w.origin_lo; h2 <= w.origin_hi; ++h2) {
      if (2 * h2 < g.origin) continue;
      if (ell(h1, h2) == 0) continue;
      int e1 = 0;
      int e2 = 0;
      floor_excess(h1, h2, s, &e1, &e2);
      if (2 * h1 - e1 != g.inf || 2 * h2 - e2 != g.origin) continue;
      if (e1 + e2 > best_excess) {
        best_excess = e1 + e2;
        best = make_result(Method::kFloor, g, s, designed_distance(g) + best_excess);
        best->witness = FloorWitness{Divisor{h1, h2, {}}, Divisor{h1 - e1, h2 - e2, {}}};
      }
    }
  }
  return best;
}

std::optional<BoundResult> BoundSearch::kirfel_pellikaan(const Divisor& g, Place p, Support s) const {
  check_input(g, s);
  // P must lie outside the evaluation set.
  if (!uses_place(s, p)) return std::nullopt;
  const Window w = witness_window(g, s, 2 * genus_ + 2);
  const int deg_lo = w.inf_lo + w.origin_lo;
  std::vector<char> seen(static_cast<std::size_t>((w.inf_hi + w.origin_hi - deg_lo + 1) * period_), 0);
  const int z_max = std::min(cap_, 2 * genus_);
  const int d1 = p == Place::kInfinity ? 1 : 0;
  const int d2 = 1 - d1;

  int best_z = 0;
  Divisor best_a;
  for (int a1 = w.inf_lo; a1 <= w.inf_hi; ++a1) {
    for (int a2 = w.origin_lo; a2 <= w.origin_hi; ++a2) {
      const int b1 = g.inf - a1;
      const int b2 = g.origin - a2;
      if (b1 + b2 > 2 * genus_ - 2) continue;
      char& mark = seen[(a1 + a2 - deg_lo) * period_ + mod(a2, period_)];
      if (mark) continue;
      mark = 1;
      const int ell_a = ell(a1, a2);
      const int ell_b = ell(b1, b2);
      int z = 0;
      while (z < z_max) {
        const int n = z + 1;
        if (ell(a1 - n * d1, a2 - n * d2) != ell_a || ell(b1 + n * d1, b2 + n * d2) != ell_b) break;
        z = n;
      }
      if (z > best_z) {
        best_z = z;
        best_a = Divisor{a1, a2, {}};
      }
    }
  }
  if (best_z == 0) return std::nullopt;

  // A = F + (alpha + t) P and B = G' + (beta - t - 1) P, with F and G'
  // carrying no P component.
  const int t = best_z - 1;
  const Divisor b = g - best_a;
  KpWitness kp;
  kp.place = p;
  kp.t = t;
  kp.alpha = best_a.coefficient(p) - t;
  kp.beta = b.coefficient(p) + t + 1;
  kp.f = best_a.plus(p, -best_a.coefficient(p));
  kp.g_prime = b.plus(p, -b.coefficient(p));
  BoundResult r = make_result(Method::kKirfelPellikaan, g, s, designed_distance(g) + t + 1);
  r.witness = kp;
  return r;
}

std::vector<std::pair<int, Divisor>> BoundSearch::representatives(const Divisor& g) const {
  std::vector<std::pair<int, Divisor>> out{{0, g}};
  // Shifting a one-point G would put support on a point of D.
  if (support_for(g) != Support::kTwoPoint) return out;
  for (int k = -(period_ / 2); k <= (period_ - 1) / 2; ++k) {
    if (k == 0) continue;
    out.emplace_back(k, Divisor{g.inf - k * period_, g.origin + k * period_, g.constraints});
  }
  return out;
}

std::optional<BoundResult> BoundSearch::best(const Divisor& g, Method m) const {
  const Support s = support_for(g);
  std::optional<BoundResult> best;
  for (const auto& [k, rep] : representatives(g)) {
    std::optional<BoundResult> r;
    switch (m) {
      case Method::kDesigned: r = designed(rep); break;
      case Method::kAsymmetricFloor: r = asymmetric_floor(rep, s); break;
      case Method::kFloor: r = floor_bound(rep, s); break;
      case Method::kKirfelPellikaan: {
        r = kirfel_pellikaan(rep, Place::kInfinity, s);
        auto other = kirfel_pellikaan(rep, Place::kOrigin, s);
        if (other && (!r || other->value > r->value)) r = other;
        break;
      }
    }
    if (!r) continue;
    if (!best || r->value > best->value) {
      r->g = g;
      r->shift = k;
      r->representative = rep;
      r->support = s;
      best = std::move(r);
    }
  }
  return best;
}

BoundResult BoundSearch::best(const Divisor& g) const {
  BoundResult result = designed(g);
  for (Method m : {Method::kFloor, Method::kKirfelPellikaan, Method::kAsymmetricFloor}) {
    auto r = best(g, m);
    if (r && r->value > result.value) result = *r;
  }
  return result;
}

bool BoundSearch::verify(const BoundResult& r, std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const RiemannRoch& rr = *rr_;
  const Divisor& rep = r.representative;
  const Support s = r.support;
  if (s != support_for(r.g)) return fail("support does not match G");
  if (rep.inf != r.g.inf - r.shift * period_ || rep.origin != r.g.origin + r.shift * period_) {
    return fail("representative is not G shifted by the stated multiple");
  }
  if (s != Support::kTwoPoint && r.shift != 0) return fail("one-point code shifted onto D");
  auto allowed = [&](const Divisor& d) {
    return d.is_two_point() && (uses_place(s, Place::kInfinity) || d.inf == 0) &&
           (uses_place(s, Place::kOrigin) || d.origin == 0);
  };
  if (!allowed(rep)) return fail("representative meets D");
  const int designed = designed_distance(rep);

  return std::visit(
      [&](const auto& w) -> bool {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          if (r.value != designed) return fail("designed value mismatch");
          return true;
        } else if constexpr (std::is_same_v<W, FloorWitness>) {
          if (!allowed(w.h)) return fail("H meets D");
          const FloorOrder order = s == Support::kTwoPoint     ? FloorOrder::kInfinityFirst
                                   : s == Support::kInfinityOnly ? FloorOrder::kInfinityOnly
                                                                 : FloorOrder::kOriginOnly;
          if (rr.floor(w.h, order) != w.floor_h) return fail("floor(H) mismatch");
          if (w.h + w.floor_h != rep) return fail("H + floor(H) != G");
          if (r.value != designed + (w.h - w.floor_h).degree()) return fail("floor value mismatch");
          return true;
        } else if constexpr (std::is_same_v<W, KpWitness>) {
          if (!uses_place(s, w.place)) return fail("P lies in D");
          if (!allowed(w.f) || !allowed(w.g_prime)) return fail("F or G' meets D");
          if (w.t < 0) return fail("negative t");
          for (int i = 0; i <= w.t; ++i) {
            if (!rr.is_gap(w.f, w.place, w.alpha + i)) return fail("alpha run is not F-gaps");
            if (!rr.is_gap(w.g_prime, w.place, w.beta - i)) return fail("beta run is not G'-gaps");
          }
          if (w.f + w.g_prime + Divisor{}.plus(w.place, w.alpha + w.beta - 1) != rep) {
            return fail("F + G' + (alpha+beta-1)P != G");
          }
          if (r.value != designed + w.t + 1) return fail("KP value mismatch");
          return true;
        } else {
          if (!allowed(w.a) || !allowed(w.b) || !allowed(w.z)) return fail("A, B or Z meets D");
          if (w.a + w.b != rep) return fail("A + B != G");
          if (!w.z.is_effective()) return fail("Z not effective");
          if (rr.dim(w.a) != rr.dim(w.a - w.z)) return fail("l(A) != l(A - Z)");
          if (rr.dim(w.b) != rr.dim(w.b + w.z)) return fail("l(B) != l(B + Z)");
          if (r.value != designed + w.z.degree()) return fail("AF value mismatch");
          return true;
        }
      },
      r.witness);
}

}  // namespace agc
