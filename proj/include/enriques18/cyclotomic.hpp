#pragma once

// Exact arithmetic in Q(zeta_n) for n in {1, 2, 3, 4, 6, 12}.
//
// An element is stored in the power basis 1, z, ..., z^(phi(n)-1) of
// Q[z]/Phi_n(z). Every order on the menu divides 12, so two numbers of
// different orders are compared or combined in Q(zeta_lcm).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace enriques18 {

using Rational = boost::multiprecision::cpp_rational;

bool is_supported_order(int n);
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<int> cyclotomic_polynomial(int n);

class CycloNum {
 public:
  /// Zero of Q.
  CycloNum();
  CycloNum(int order, std::vector<Rational> coefficients);

  static CycloNum rational(const Rational& value, int order = 1);
  /// The primitive root exp(2 pi i / n).
  static CycloNum zeta(int n);
  /// zeta(n)^k, any integer k.
  static CycloNum zeta_power(int n, int k);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const;
  /// Re-expresses the number in Q(zeta_n); n must be a multiple of order().
  CycloNum promoted(int n) const;

  CycloNum inverse() const;
  CycloNum pow(int exponent) const;

  /// "a + b*z4 + c*z4^2 ..."; zero terms are dropped.
  std::string to_string() const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend CycloNum operator-(const CycloNum& a) { return CycloNum() - a; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  int order_;
  std::vector<Rational> coefficients_;
};

CycloNum add(const CycloNum& a, const CycloNum& b);
CycloNum sub(const CycloNum& a, const CycloNum& b);
CycloNum mul(const CycloNum& a, const CycloNum& b);
CycloNum inv(const CycloNum& a);
bool eq(const CycloNum& a, const CycloNum& b);

/// i*sqrt(3) = 2*zeta_3 + 1, as an element of Q(zeta_3).
CycloNum i_sqrt3();
/// The imaginary unit zeta_4.
CycloNum imaginary_unit();

// Dense exact linear algebra used by inverse() and by the Lefschetz solvers.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A X = B by Gauss-Jordan elimination; A square and invertible.
/// Throws DivisionByZero when A is singular.
RationalMatrix solve_linear(RationalMatrix a, RationalMatrix b);

/// Row-reduced echelon form of a copy of the matrix; trailing zero rows are dropped.
RationalMatrix row_reduce(RationalMatrix m);

}  // namespace enriques18
