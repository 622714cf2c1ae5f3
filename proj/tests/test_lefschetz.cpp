#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "enriques18/errors.hpp"
#include "enriques18/lefschetz.hpp"

using namespace enriques18;
using Complex = std::complex<double>;

namespace {

Complex root(int n, int k) { return std::polar(1.0, 2 * std::numbers::pi * k / n); }

Complex numeric(const CycloNum& x) {
  Complex sum = 0;
  for (std::size_t k = 0; k < x.coefficients().size(); ++k) {
    sum += x.coefficients()[k].convert_to<double>() * root(x.order(), static_cast<int>(k));
  }
  return sum;
}

// Local contributions evaluated in floating point.
Complex point_value(int n, int a, int b) { return 1.0 / ((1.0 - root(n, a)) * (1.0 - root(n, b))); }
Complex rational_curve_value(int n) {
  const Complex z = root(n, 1);
  return 1.0 / (1.0 - z) + 2.0 * z / ((1.0 - z) * (1.0 - z));
}

CycloNum q(long long num, long long den = 1) { return CycloNum::rational(Rational(num, den)); }

}  // namespace

TEST(Lefschetz, ExactLocalTerms) {
  const CycloNum i = imaginary_unit();
  const CycloNum r3 = i_sqrt3();
  EXPECT_EQ(point_term({4, 2, 3}), (q(1) - i) * q(1, 4));
  EXPECT_EQ(curve_term(4, 0, -2), -(q(1) - i) * q(1, 2));
  EXPECT_EQ(point_term({6, 2, 5}), (q(3) - r3) * q(1, 6));
  EXPECT_EQ(point_term({6, 3, 4}), (q(3) - r3) * q(1, 12));
  EXPECT_EQ(curve_term(6, 0, -2), -(q(3) - r3) * q(1, 2));
}

TEST(Lefschetz, LocalTermsMatchFloatingPoint) {
  for (int n : {3, 4, 6}) {
    for (int a = 1; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        if ((a + b) % n != 1) continue;
        EXPECT_LT(std::abs(numeric(point_term({n, a, b})) - point_value(n, a, b)), 1e-12)
            << n << " " << a << " " << b;
      }
    }
    EXPECT_LT(std::abs(numeric(curve_term(n, 0, -2)) - rational_curve_value(n)), 1e-12) << n;
    EXPECT_LT(std::abs(numeric(holomorphic_lhs(n)) - (1.0 + root(n, -1))), 1e-12) << n;
  }
}

TEST(Lefschetz, DegenerateLocalType) {
  EXPECT_THROW(point_term({4, 0, 1}), DegenerateLocalType);
  EXPECT_THROW(point_term({4, 1, 4}), DegenerateLocalType);
  EXPECT_THROW(point_term({6, 6, 1}), DegenerateLocalType);
  EXPECT_NO_THROW(point_term({4, 2, 2}));
  EXPECT_FALSE((LocalFixedPointType{3, 1, 1}).is_normalized());
  EXPECT_TRUE((LocalFixedPointType{3, 2, 2}).is_normalized());
}

TEST(Lefschetz, CountIdentities) {
  const CountIdentity i3 = solve_count_identity(3);
  EXPECT_EQ(i3.unknowns, (std::vector<std::string>{"M", "N"}));
  EXPECT_EQ(i3.coefficients, (std::vector<long long>{1, -1}));
  EXPECT_EQ(i3.constant, 3);
  EXPECT_EQ(i3.to_string(), "M - N = 3");
  const CountIdentity i4 = solve_count_identity(4);
  EXPECT_EQ(i4.coefficients, (std::vector<long long>{1, -2}));
  EXPECT_EQ(i4.constant, 4);
  EXPECT_EQ(i4.to_string(), "M - 2N = 4");
  const CountIdentity i6 = solve_count_identity(6);
  EXPECT_EQ(i6.unknowns, (std::vector<std::string>{"l", "c"}));
  EXPECT_EQ(i6.coefficients, (std::vector<long long>{1, -1}));
  EXPECT_EQ(i6.constant, 1);
  EXPECT_EQ(i6.solved_form(), "l = c + 1");
  EXPECT_THROW(solve_count_identity(5), UnsupportedIndex);
}

TEST(Lefschetz, IdentitiesHoldExactlyAndNumerically) {
  for (long long other = 0; other <= 20; ++other) {
    const CountIdentity i3 = solve_count_identity(3);
    EXPECT_EQ(i3.solve_first({other}), Rational(other + 3));
    EXPECT_EQ(i3.fixed_locus_sum({other + 3, other}), holomorphic_lhs(3));
    const Complex lhs3 = 1.0 + root(3, -1);
    EXPECT_LT(std::abs(double(other + 3) * point_value(3, 2, 2) +
                       double(other) * rational_curve_value(3) - lhs3),
              1e-9);

    const CountIdentity i4 = solve_count_identity(4);
    EXPECT_EQ(i4.solve_first({other}), Rational(2 * other + 4));
    EXPECT_EQ(i4.fixed_locus_sum({2 * other + 4, other}), holomorphic_lhs(4));
    // Off the relation the identity fails.
    EXPECT_NE(i4.fixed_locus_sum({2 * other + 5, other}), holomorphic_lhs(4));

    const CountIdentity i6 = solve_count_identity(6);
    EXPECT_EQ(i6.fixed_locus_sum({other + 1, other}), holomorphic_lhs(6));
    const Complex lhs6 = 1.0 + root(6, -1);
    EXPECT_LT(std::abs(2.0 * double(other + 1) * (point_value(6, 2, 5) + point_value(6, 3, 4)) +
                       double(other) * rational_curve_value(6) - lhs6),
              1e-9);
  }
}

TEST(Lefschetz, RenderedIdentityShowsBothSides) {
  const std::string text = render_identity(solve_count_identity(4));
  EXPECT_NE(text.find("M - 2N = 4"), std::string::npos);
  EXPECT_NE(text.find("1 - z4"), std::string::npos);
}

TEST(Lefschetz, PicardBudgetIndex4) {
  for (int n = 0; n <= 4; ++n) {
    const PicardBudget b = picard_budget_index4(n);
    EXPECT_EQ(b.invariant, 11 + 2 * n);
    EXPECT_EQ(b.anti_invariant, 9 - 2 * n);
    EXPECT_EQ(b.profile.total(), 22);
    EXPECT_EQ(b.profile.picard_rank(), 20);
  }
  EXPECT_THROW(picard_budget_index4(5), BudgetViolation);
}

TEST(Lefschetz, Profiles) {
  EXPECT_THROW(make_profile(4, {1, 0, 0}, {0, 1, 0}), BudgetViolation);
  const EigenvalueProfile p = make_profile(3, {20, 0}, {0, 1});
  EXPECT_EQ(p.transcendental_rank(), 2);
}

TEST(Lefschetz, Order6SystemSatisfiesTraceEquations) {
  const Order6System s = solve_order6_system();
  EXPECT_EQ(s.delta.to_string(), "-c - p - q + 2");
  for (int c = 0; c <= 5; ++c) {
    for (int p = 0; p <= 5; ++p) {
      for (int qq = 0; qq <= 5; ++qq) {
        const Rational a = s.alpha.at(c, p, qq);
        const Rational b = s.beta.at(c, p, qq);
        const Rational g = s.gamma.at(c, p, qq);
        const Rational d = s.delta.at(c, p, qq) + 1;
        // Traces of g, g^2, g^3 on H^2 with eigenvalue sums 1, -1, -1, 1 etc.
        EXPECT_EQ(2 + a - b - g + d, 6 * c + 4);
        EXPECT_EQ(2 + a + b - g - d, 6 * c + 6 * p + 6);
        EXPECT_EQ(2 + a - b + 2 * g - 2 * d, 6 * c + 6 * qq + 4);
        EXPECT_EQ(a + b + 2 * g + 2 * d, 22);
      }
    }
  }
}

TEST(Lefschetz, Order6Budget) {
  EXPECT_EQ(solve_order6_budget(3, 0, 0, 1, 0).outcome, Order6Outcome::kBudgetViolated);
  EXPECT_EQ(solve_order6_budget(0, 2, 0, 1, 4).outcome, Order6Outcome::kParityContradiction);
  EXPECT_EQ(solve_order6_budget(0, 2, 0, 2, 4).outcome, Order6Outcome::kFixedCurveContradiction);
  EXPECT_EQ(solve_order6_budget(0, 1, 0, 1, 0).outcome, Order6Outcome::kRankShortfall);
  EXPECT_EQ(solve_order6_budget(0, 1, 0, 1, 3).outcome, Order6Outcome::kInconsistentComponents);
}

TEST(Lefschetz, Order6Trace) {
  const Order6Trace t = order6_impossibility_trace();
  EXPECT_TRUE(t.impossible);
  EXPECT_EQ(t.forced_p, std::vector<int>{2});
  EXPECT_EQ(t.forced_c, std::vector<int>{0});
  EXPECT_EQ(t.forced_q, std::vector<int>{0});
  EXPECT_EQ(t.forced_n, std::vector<int>{4});
  EXPECT_EQ(t.forced_m, (std::vector<int>{1, 2}));
  ASSERT_EQ(t.survivors.size(), 2u);
  for (const auto& v : t.survivors) EXPECT_TRUE(v.contradiction());
  bool has_delta = false;
  for (const auto& line : t.lines) has_delta |= line.find("delta = -c - p - q + 2") != std::string::npos;
  EXPECT_TRUE(has_delta);
}
