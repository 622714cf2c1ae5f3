#include <gtest/gtest.h>

#include <random>

#include "enriques18/cyclotomic.hpp"
#include "enriques18/errors.hpp"

using namespace enriques18;

namespace {

constexpr int kOrders[] = {1, 2, 3, 4, 6, 12};

CycloNum random_number(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> coefficients;
  for (int i = 0; i < euler_phi(order); ++i) coefficients.emplace_back(num(rng), den(rng));
  return CycloNum(order, coefficients);
}

}  // namespace

TEST(Cyclotomic, Phi) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(2), 1);
  EXPECT_EQ(euler_phi(3), 2);
  EXPECT_EQ(euler_phi(4), 2);
  EXPECT_EQ(euler_phi(6), 2);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<int>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<int>{1, -1, 1}));
}

TEST(Cyclotomic, ZetaIsRootOfPhi) {
  for (int n : kOrders) {
    const auto poly = cyclotomic_polynomial(n);
    CycloNum value;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      value += CycloNum::rational(poly[k]) * CycloNum::zeta(n).pow(static_cast<int>(k));
    }
    EXPECT_TRUE(value.is_zero()) << n;
    EXPECT_EQ(CycloNum::zeta(n).pow(n), CycloNum::rational(1)) << n;
    if (n > 1) {
      EXPECT_NE(CycloNum::zeta(n), CycloNum::rational(1)) << n;
    }
  }
}

TEST(Cyclotomic, RandomInverses) {
  std::mt19937 rng(20261018);
  int checked = 0;
  while (checked < 1000) {
    const int order = kOrders[checked % 6];
    const CycloNum x = random_number(rng, order);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), CycloNum::rational(1)) << x.to_string();
    ++checked;
  }
}

TEST(Cyclotomic, FieldAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int order = kOrders[trial % 6];
    const int other = kOrders[(trial / 6) % 6];
    const CycloNum a = random_number(rng, order);
    const CycloNum b = random_number(rng, other);
    const CycloNum c = random_number(rng, 12);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, CycloNum());
    EXPECT_EQ(add(a, b), a + b);
    EXPECT_EQ(sub(a, b), a - b);
    EXPECT_EQ(mul(a, b), a * b);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_TRUE(eq(inv(b), b.inverse()));
    }
  }
}

TEST(Cyclotomic, Promotion) {
  EXPECT_EQ(CycloNum::zeta(3).promoted(6), CycloNum::zeta(6).pow(2));
  EXPECT_EQ(CycloNum::zeta(4).promoted(12), CycloNum::zeta(12).pow(3));
  EXPECT_EQ(CycloNum::zeta(2).promoted(12), CycloNum::rational(-1));
  EXPECT_EQ(CycloNum::zeta(3) + CycloNum::zeta(4), CycloNum::zeta(12).pow(4) + CycloNum::zeta(12).pow(3));
  EXPECT_THROW(CycloNum::zeta(4).promoted(6), IncompatibleOrders);
  EXPECT_THROW(CycloNum::zeta(5), IncompatibleOrders);
}

TEST(Cyclotomic, NamedElements) {
  EXPECT_EQ(imaginary_unit() * imaginary_unit(), CycloNum::rational(-1));
  EXPECT_EQ(i_sqrt3() * i_sqrt3(), CycloNum::rational(-3));
  EXPECT_EQ(CycloNum::zeta_power(6, -1), CycloNum::zeta(6).pow(5));
  EXPECT_EQ(CycloNum::zeta(6) + CycloNum::zeta_power(6, -1), CycloNum::rational(1));
}

TEST(Cyclotomic, DivisionByZero) {
  EXPECT_THROW(CycloNum().inverse(), DivisionByZero);
  EXPECT_THROW(CycloNum::zeta(3) / CycloNum(), DivisionByZero);
  EXPECT_THROW(solve_linear({{1, 2}, {2, 4}}, {{1}, {2}}), DivisionByZero);
}

TEST(Cyclotomic, LinearSolve) {
  const RationalMatrix x = solve_linear({{2, 1}, {1, 3}}, {{3}, {5}});
  EXPECT_EQ(x[0][0], Rational(4, 5));
  EXPECT_EQ(x[1][0], Rational(7, 5));
  const RationalMatrix r = row_reduce({{1, 2, 3}, {2, 4, 6}});
  EXPECT_EQ(r.size(), 1u);
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(CycloNum::rational(Rational(1, 4)).to_string(), "1/4");
  EXPECT_EQ(CycloNum().to_string(), "0");
}
