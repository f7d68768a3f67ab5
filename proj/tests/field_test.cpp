#include "agbounds/field.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace agc {
namespace {

class FieldAxioms : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(FieldAxioms, HoldByEnumeration) {
  const Field f(GetParam());
  const auto all = f.elements();
  ASSERT_EQ(static_cast<int>(all.size()), f.order());
  for (Element a : all) {
    EXPECT_EQ(f.add(a, f.zero()), a);
    EXPECT_EQ(f.mul(a, f.one()), a);
    EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
    if (a != f.zero()) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    for (Element b : all) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      if (a != f.zero() && b != f.zero()) EXPECT_NE(f.mul(a, b), f.zero());
      for (Element c : all) {
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_P(FieldAxioms, FrobeniusIsAnAutomorphism) {
  const Field f(GetParam());
  for (Element a : f.elements()) {
    EXPECT_EQ(f.pow(a, f.order()), a);
    for (Element b : f.elements()) {
      EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST_P(FieldAxioms, GeneratorIsARootOfTheModulus) {
  const Field f(GetParam());
  Element acc = f.zero();
  Element power = f.one();
  for (int c : GetParam().modulus) {
    acc = f.add(acc, f.mul(f.element(c), power));
    power = f.mul(power, f.generator());
  }
  EXPECT_EQ(acc, f.zero());
}

TEST_P(FieldAxioms, MultiplicativeGroupIsCyclic) {
  const Field f(GetParam());
  bool found = false;
  for (Element a : f.elements()) {
    if (a == f.zero()) continue;
    int order = 1;
    for (Element x = a; x != f.one(); x = f.mul(x, a)) ++order;
    found |= order == f.order() - 1;
  }
  EXPECT_TRUE(found);
}

TEST_P(FieldAxioms, CoefficientRoundTrip) {
  const Field f(GetParam());
  for (Element a : f.elements()) EXPECT_EQ(f.from_coefficients(f.coefficients(a)), a);
}

INSTANTIATE_TEST_SUITE_P(All, FieldAxioms,
                         ::testing::Values(FieldSpec::gf4(), FieldSpec::gf8(), FieldSpec::gf9(), FieldSpec::gf16()),
                         [](const auto& info) {
                           const Field f(info.param);
                           return "GF" + std::to_string(f.order());
                         });

TEST(Field, Gf8GeneratorSatisfiesModulus) {
  const Field f(FieldSpec::gf8());
  const Element t = f.generator();
  EXPECT_EQ(f.pow(t, 3), f.add(t, f.one()));
}

TEST(Field, Gf9GeneratorSquaresToMinusOne) {
  const Field f(FieldSpec::gf9());
  EXPECT_EQ(f.mul(f.generator(), f.generator()), f.neg(f.one()));
}

TEST(Field, SqrtInvertsSquaringInCharacteristicTwo) {
  for (const auto& spec : {FieldSpec::gf4(), FieldSpec::gf8(), FieldSpec::gf16()}) {
    const Field f(spec);
    for (Element a : f.elements()) EXPECT_EQ(f.mul(f.sqrt(a), f.sqrt(a)), a);
  }
  EXPECT_THROW(Field(FieldSpec::gf9()).sqrt(Element{1}), std::domain_error);
}

TEST(Field, RejectsReducibleModulus) {
  EXPECT_THROW(Field(FieldSpec{2, 2, {1, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Field(FieldSpec{3, 2, {2, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Field(FieldSpec{2, 4, {1, 0, 1, 0, 1}}), std::invalid_argument);
}

TEST(Field, InverseOfZeroThrows) {
  const Field f(FieldSpec::gf16());
  EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(Field, IrreducibilityAgreesWithRootSearchForCubics) {
  // A cubic is irreducible exactly when it has no root.
  for (int c0 = 0; c0 < 2; ++c0) {
    for (int c1 = 0; c1 < 2; ++c1) {
      for (int c2 = 0; c2 < 2; ++c2) {
        const std::vector<int> poly{c0, c1, c2, 1};
        bool has_root = false;
        for (int x = 0; x < 2; ++x) has_root |= (c0 + c1 * x + c2 * x * x + x * x * x) % 2 == 0;
        EXPECT_EQ(is_irreducible(poly, 2), !has_root);
      }
    }
  }
}

}  // namespace
}  // namespace agc
