#include "agbounds/rrspace.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "agbounds/bounds.hpp"
#include "agbounds/properties.hpp"

namespace agc {
namespace {

// Numerical semigroup generated by `gens`, up to `limit`.
std::vector<int> brute_semigroup(const std::vector<int>& gens, int limit) {
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (int n = 1; n <= limit; ++n) {
    for (int g : gens) {
      if (n >= g && in[n - g]) in[n] = 1;
    }
  }
  std::vector<int> out;
  for (int n = 0; n <= limit; ++n) {
    if (in[n]) out.push_back(n);
  }
  return out;
}

// l(a P_inf + b P_00) on y^q + y = x^(q+1): x^i y^j with 0 <= i <= q and
// j in Z has pole order qi + (q+1)j at P_inf and order i + (q+1)j at P_00.
int hermitian_ell(int q, int a, int b) {
  int count = 0;
  for (int i = 0; i <= q; ++i) {
    for (int j = -200; j <= 200; ++j) {
      if (q * i + (q + 1) * j <= a && -i - (q + 1) * j <= b) ++count;
    }
  }
  return count;
}

TEST(RiemannRoch, SemigroupsMatchGenerators) {
  const std::pair<const char*, std::vector<int>> cases[] = {
      {"hermitian4", {2, 3}}, {"hermitian9", {3, 4}}, {"hermitian16", {4, 5}}, {"suzuki8", {8, 10, 12, 13}}};
  for (const auto& [name, gens] : cases) {
    const RiemannRoch rr(Curve::from_name(name));
    const auto sg = rr.semigroup(80);
    EXPECT_EQ(sg, brute_semigroup(gens, 80)) << name;
    int gaps = 0;
    for (int n = 0; n < 2 * rr.genus(); ++n) gaps += !std::binary_search(sg.begin(), sg.end(), n);
    EXPECT_EQ(gaps, rr.genus()) << name;
  }
}

TEST(RiemannRoch, PoleBasisCountsNongaps) {
  for (const char* name : {"hermitian16", "suzuki8"}) {
    const RiemannRoch rr(Curve::from_name(name));
    const auto sg = rr.semigroup(70);
    for (int n = 0; n <= 70; ++n) {
      const auto basis = rr.pole_basis(n);
      const auto count = std::upper_bound(sg.begin(), sg.end(), n) - sg.begin();
      EXPECT_EQ(static_cast<long>(basis.size()), count) << name << " N=" << n;
      std::set<int> poles;
      for (const auto& m : basis) poles.insert(rr.curve().pole_order(m));
      EXPECT_EQ(poles.size(), basis.size());
    }
  }
}

TEST(RiemannRoch, PoleBasisExamples) {
  const RiemannRoch s(Curve::suzuki());
  EXPECT_EQ(s.pole_basis(13).size(), 5u);
  EXPECT_EQ(s.pole_basis(7).size(), 1u);
  const RiemannRoch h(Curve::hermitian(4));
  std::vector<int> poles;
  for (const auto& m : h.pole_basis(11)) poles.push_back(h.curve().pole_order(m));
  EXPECT_EQ(poles, (std::vector<int>{0, 4, 5, 8, 9, 10}));
}

TEST(RiemannRoch, DimensionExamples) {
  const RiemannRoch s(Curve::suzuki());
  EXPECT_EQ(s.dim(Divisor{}), 1);
  EXPECT_EQ(s.dim(Divisor{27, 0, {}}), 14);
  EXPECT_EQ(s.dim(Divisor{13, 0, {}}), 5);
  EXPECT_EQ(s.index_of_specialty(Divisor{}), 14);
  EXPECT_EQ(s.index_of_specialty(Divisor{26, 0, {}}), 1);
  EXPECT_EQ(s.index_of_specialty(Divisor{20, 7, {}}), 0);
  const RiemannRoch h(Curve::hermitian(4));
  EXPECT_EQ(h.dim(Divisor{-1, 0, {}}), 0);
}

TEST(RiemannRoch, HermitianDimensionsMatchMonomialCount) {
  for (int q : {2, 3, 4}) {
    const RiemannRoch rr(Curve::hermitian(q));
    for (int a = -25; a <= 40; ++a) {
      for (int b = -25; b <= 40; ++b) {
        ASSERT_EQ(rr.dim(Divisor{a, b, {}}), hermitian_ell(q, a, b)) << "q=" << q << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(RiemannRoch, RiemannRochDualityAndShiftOnWindow) {
  for (const char* name : {"hermitian4", "hermitian16", "suzuki8"}) {
    const RiemannRoch rr(Curve::from_name(name));
    const auto report = check_riemann_roch(rr, -20, 50);
    EXPECT_TRUE(report.ok()) << name << ": " << report.violations.front();
  }
}

TEST(RiemannRoch, Monotonicity) {
  const RiemannRoch rr(Curve::suzuki());
  for (int a = -20; a <= 50; a += 3) {
    for (int b = -20; b <= 50; ++b) {
      const Divisor d{a, b, {}};
      const int l = rr.dim(d);
      for (Place p : {Place::kInfinity, Place::kOrigin}) {
        const int up = rr.dim(d.plus(p, 1));
        EXPECT_LE(l, up);
        EXPECT_LE(up, l + 1);
      }
    }
  }
}

TEST(RiemannRoch, ConstraintsDropDimensionByAtMostOne) {
  const RiemannRoch rr(Curve::hermitian(4));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-10, 30);
  std::uniform_int_distribution<std::size_t> point(1, 63);
  for (int trial = 0; trial < 200; ++trial) {
    const Divisor d{coeff(rng), coeff(rng), {}};
    const Divisor e = d.minus_points({point(rng)});
    const int l = rr.dim(d);
    EXPECT_GE(rr.dim(e), l - 1);
    EXPECT_LE(rr.dim(e), l);
  }
  // Every function in L(4 P_inf) vanishing at all 63 other points is zero.
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= 63; ++i) all.push_back(i);
  EXPECT_EQ(rr.dim(Divisor{4, 0, all}), 0);
}

TEST(RiemannRoch, FunctionBasisMembersLieInTheSpace) {
  const RiemannRoch rr(Curve::suzuki());
  const Curve& c = rr.curve();
  const Field& f = c.field();
  const std::vector<Divisor> cases{{30, 5, {}}, {3, 20, {}}, {-5, 40, {}}, {40, -12, {3, 9, 17}}, {20, 14, {1, 2}}};
  for (const Divisor& d : cases) {
    const FunctionBasis basis = rr.function_basis(d);
    ASSERT_EQ(static_cast<int>(basis.size()), rr.dim(d)) << to_string(d);
    const int prec = 80;
    const auto shift = c.expand_at_origin(Monomial{{}, 1}, prec).pow(basis.shift_power);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      int top = -1000;
      auto series = LocalExpansion::zero(f, prec);
      for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
        if (basis.members[i][j] == f.zero()) continue;
        top = std::max(top, c.pole_order(basis.monomials[j]));
        series = series + c.expand_at_origin(basis.monomials[j], prec).scaled(basis.members[i][j]);
      }
      EXPECT_LE(top + basis.shift_power * c.shift_period(), d.inf);
      const auto v = (series * shift).valuation();
      ASSERT_TRUE(v.has_value());
      EXPECT_GE(*v, -d.origin);
      for (std::size_t p : d.constraints) EXPECT_EQ(rr.evaluate(basis, i, c.points()[p]), f.zero());
    }
  }
}

TEST(RiemannRoch, FloorExamples) {
  const RiemannRoch s(Curve::suzuki());
  EXPECT_EQ(s.floor(Divisor{1, 16, {}}), (Divisor{0, 16, {}}));
  EXPECT_EQ(s.floor(Divisor{}), Divisor{});
  EXPECT_THROW(s.floor(Divisor{-1, 0, {}}), std::domain_error);
  const RiemannRoch h(Curve::hermitian(4));
  EXPECT_EQ(h.floor(Divisor{5, 0, {}}), (Divisor{5, 0, {}}));
  EXPECT_EQ(h.floor(Divisor{7, 0, {}}), (Divisor{5, 0, {}}));
}

TEST(RiemannRoch, FloorIsIdempotentMinimalAndOrderFree) {
  const RiemannRoch rr(Curve::suzuki());
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-20, 45);
  int tested = 0;
  while (tested < 300) {
    const Divisor d{coeff(rng), coeff(rng), {}};
    if (rr.dim(d) == 0) continue;
    ++tested;
    const Divisor fl = rr.floor(d, FloorOrder::kInfinityFirst);
    EXPECT_EQ(fl, rr.floor(d, FloorOrder::kOriginFirst)) << to_string(d);
    EXPECT_EQ(rr.floor(fl), fl);
    EXPECT_EQ(rr.dim(fl), rr.dim(d));
    EXPECT_LE(fl, d);
    EXPECT_LT(rr.dim(fl.plus(Place::kInfinity, -1)), rr.dim(fl));
    EXPECT_LT(rr.dim(fl.plus(Place::kOrigin, -1)), rr.dim(fl));
  }
}

TEST(RiemannRoch, GapExamples) {
  const RiemannRoch s(Curve::suzuki());
  EXPECT_TRUE(s.is_gap(Divisor{}, Place::kInfinity, 27));
  EXPECT_FALSE(s.is_gap(Divisor{}, Place::kInfinity, 13));
  EXPECT_FALSE(s.is_gap(Divisor{}, Place::kInfinity, 0));
  EXPECT_FALSE(s.is_gap(Divisor{}, Place::kOrigin, 0));
}

TEST(Divisor, GcdIsPointwiseMinimum) {
  const Divisor a{3, 2, {}};
  const Divisor b{1, 5, {}};
  EXPECT_EQ(divisor_gcd(a, b), (Divisor{1, 2, {}}));
  EXPECT_EQ(divisor_gcd(a, a), a);
  const Divisor c = a.minus_points({4});
  EXPECT_EQ(divisor_gcd(a, c), c);
  EXPECT_THROW(c.minus_points({4}), std::invalid_argument);
}

TEST(RiemannRoch, CacheRoundTripAndVerification) {
  const RiemannRoch rr(Curve::hermitian(4));
  for (int a = 0; a < 10; ++a) rr.dim(Divisor{a, 3 - a, {}});
  std::stringstream buffer;
  rr.save_cache(buffer);

  RiemannRoch fresh(Curve::hermitian(4));
  EXPECT_EQ(fresh.load_cache(buffer, true), rr.cache_size());

  std::stringstream wrong("curve,a,b,ell\nhermitian16,5,0,7\n");
  RiemannRoch other(Curve::hermitian(4));
  EXPECT_THROW(other.load_cache(wrong, true), std::runtime_error);
  std::stringstream foreign("suzuki8,5,0,7\n");
  EXPECT_EQ(other.load_cache(foreign, true), 0u);
}

TEST(RiemannRoch, ConcurrentQueriesMatchUncached) {
  const RiemannRoch rr(Curve::suzuki());
  std::vector<int> got(4 * 60);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (int i = 0; i < 60; ++i) got[t * 60 + i] = rr.dim(Divisor{i - 10, 25 - i, {}});
      });
    }
  }
  for (int t = 0; t < 4; ++t) {
    for (int i = 0; i < 60; ++i) EXPECT_EQ(got[t * 60 + i], rr.dim_uncached(Divisor{i - 10, 25 - i, {}}));
  }
}

TEST(RiemannRoch, ProofLemmaOnRandomTriples) {
  for (const char* name : {"hermitian4", "hermitian16", "suzuki8"}) {
    const RiemannRoch rr(Curve::from_name(name));
    const BoundSearch search(rr);
    std::mt19937_64 rng(99);
    const auto report = check_proof_lemma(search, 60, rng);
    EXPECT_EQ(report.checked, 60);
    EXPECT_TRUE(report.ok()) << report.violations.front();
  }
}

}  // namespace
}  // namespace agc
