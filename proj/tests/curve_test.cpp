#include "agbounds/curve.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <utility>

namespace agc {
namespace {

// Affine solutions found by scanning every pair in F x F.
std::vector<std::pair<int, int>> scan_points(const Curve& c) {
  const Field& f = c.field();
  std::vector<std::pair<int, int>> out;
  for (Element x : f.elements()) {
    for (Element y : f.elements()) {
      Element lhs;
      Element rhs;
      if (c.kind() == CurveKind::kHermitian) {
        const int q = c.generator_poles()[0];
        lhs = f.add(f.pow(y, q), y);
        rhs = f.pow(x, q + 1);
      } else {
        lhs = f.sub(f.pow(y, 8), y);
        rhs = f.sub(f.pow(x, 10), f.pow(x, 3));
      }
      if (lhs == rhs) out.emplace_back(x.index, y.index);
    }
  }
  return out;
}

struct CurveFacts {
  std::string name;
  std::size_t points;
  int genus;
  int shift_period;
};

class Curves : public ::testing::TestWithParam<CurveFacts> {};

TEST_P(Curves, PointsMatchExhaustiveScan) {
  const auto& facts = GetParam();
  const Curve c = Curve::from_name(facts.name);
  EXPECT_EQ(c.points().size(), facts.points);
  EXPECT_EQ(c.genus(), facts.genus);
  EXPECT_EQ(c.shift_period(), facts.shift_period);

  const auto scanned = scan_points(c);
  ASSERT_EQ(scanned.size() + 1, c.points().size());
  for (std::size_t i = 0; i < scanned.size(); ++i) {
    EXPECT_FALSE(c.points()[i].at_infinity);
    EXPECT_EQ(c.points()[i].x.index, scanned[i].first);
    EXPECT_EQ(c.points()[i].y.index, scanned[i].second);
  }
  EXPECT_TRUE(c.points().back().at_infinity);
  EXPECT_EQ(c.origin_index(), 0u);
  EXPECT_EQ(c.points()[0], RationalPoint::affine(Element{0}, Element{0}));
}

TEST_P(Curves, ShiftFunctionVanishesOnlyAtOrigin) {
  const Curve c = Curve::from_name(GetParam().name);
  for (std::size_t i = 0; i + 1 < c.points().size(); ++i) {
    EXPECT_EQ(c.evaluate_shift(c.points()[i]) == c.field().zero(), i == c.origin_index()) << i;
  }
}

TEST_P(Curves, ShiftGeneratorHasValuationPeriodAtOrigin) {
  const Curve c = Curve::from_name(GetParam().name);
  const auto s = c.generator_expansion(c.shift_generator(), 40);
  EXPECT_EQ(s.valuation(), c.shift_period());
  EXPECT_EQ(c.generator_expansion(0, 10).valuation(), 1);
}

INSTANTIATE_TEST_SUITE_P(All, Curves,
                         ::testing::Values(CurveFacts{"hermitian4", 9, 1, 3}, CurveFacts{"hermitian9", 28, 3, 4},
                                           CurveFacts{"hermitian16", 65, 6, 5}, CurveFacts{"suzuki8", 65, 14, 13}),
                         [](const auto& info) { return info.param.name; });

TEST(Curve, SuzukiGeneratorValuations) {
  const Curve c = Curve::suzuki();
  const int expected[] = {1, 3, 5, 13};
  for (int g = 0; g < 4; ++g) EXPECT_EQ(c.generator_expansion(g, 60).valuation(), expected[g]) << g;
}

TEST(Curve, SuzukiSeriesSatisfyDefiningRelations) {
  const Curve c = Curve::suzuki();
  const int prec = 120;
  const auto x = c.generator_expansion(0, prec);
  const auto y = c.generator_expansion(1, prec);
  const auto z = c.generator_expansion(2, prec);
  const auto w = c.generator_expansion(3, prec);
  EXPECT_TRUE((y.pow(8) - y).agrees_with(x.pow(10) - x.pow(3)));
  EXPECT_TRUE(z.agrees_with(x.pow(5) + y.pow(4)));
  EXPECT_TRUE(w.agrees_with(x * y.pow(4) + z.pow(4)));
  // z^2 = x^10 + y^8 = y + x^3 on the curve.
  EXPECT_TRUE(z.pow(2).agrees_with(y + x.pow(3)));
}

TEST(Curve, SuzukiGeneratorValuesAtPoints) {
  const Curve c = Curve::suzuki();
  const Field& f = c.field();
  for (std::size_t i = 0; i + 1 < c.points().size(); ++i) {
    const auto v = c.generator_values(c.points()[i]);
    EXPECT_EQ(v[2], f.add(f.pow(v[0], 5), f.pow(v[1], 4)));
    EXPECT_EQ(v[3], f.add(f.mul(v[0], f.pow(v[1], 4)), f.pow(v[2], 4)));
  }
}

TEST(Curve, HermitianSeriesSatisfyEquation) {
  for (int q : {2, 3, 4}) {
    const Curve c = Curve::hermitian(q);
    const auto x = c.generator_expansion(0, 80);
    const auto y = c.generator_expansion(1, 80);
    EXPECT_TRUE((y.pow(q) + y).agrees_with(x.pow(q + 1))) << q;
  }
}

TEST(Curve, PoleOrdersOfGenerators) {
  const Curve s = Curve::suzuki();
  EXPECT_EQ(std::vector<int>(s.generator_poles().begin(), s.generator_poles().end()), (std::vector<int>{8, 10, 12, 13}));
  const Curve h = Curve::hermitian(4);
  EXPECT_EQ(h.pole_order(Monomial{{2, 1, 0, 0}, 0}), 13);
  EXPECT_EQ(h.pole_order(Monomial{{0, 0, 0, 0}, -1}), -5);
}

TEST(Curve, EvaluationRejectsPoles) {
  const Curve c = Curve::hermitian(4);
  EXPECT_THROW(c.evaluate(Monomial{{1, 0, 0, 0}, 0}, RationalPoint::infinity()), std::domain_error);
  EXPECT_THROW(c.evaluate(Monomial{{}, -1}, c.points()[c.origin_index()]), std::domain_error);
  EXPECT_EQ(c.evaluate(Monomial{}, RationalPoint::infinity()), c.field().one());
}

TEST(Curve, UnknownNameThrows) { EXPECT_THROW(Curve::from_name("klein7"), std::invalid_argument); }

}  // namespace
}  // namespace agc
