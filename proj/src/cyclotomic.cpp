#include "enriques18/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

void require_order(int n) {
  if (!is_supported_order(n)) {
    throw IncompatibleOrders("order " + std::to_string(n) + " does not embed in Q(zeta_12)");
  }
}

// Reduces a polynomial (constant term first) modulo the monic Phi_n.
std::vector<Rational> reduce(std::vector<Rational> poly, int n) {
  const auto phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t d = poly.size(); d-- > deg;) {
    const Rational lead = poly[d];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[d - deg + j] -= lead * phi[j];
  }
  poly.resize(deg, Rational(0));
  return poly;
}

int common_order(int a, int b) {
  const int n = std::lcm(a, b);
  require_order(n);
  return n;
}

}  // namespace

bool is_supported_order(int n) {
  return n == 1 || n == 2 || n == 3 || n == 4 || n == 6 || n == 12;
}

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

std::vector<int> cyclotomic_polynomial(int n) {
  switch (n) {
    case 1: return {-1, 1};
    case 2: return {1, 1};
    case 3: return {1, 1, 1};
    case 4: return {1, 0, 1};
    case 6: return {1, -1, 1};
    case 12: return {1, 0, -1, 0, 1};
    default: require_order(n);
  }
  return {};
}

CycloNum::CycloNum() : order_(1), coefficients_{Rational(0)} {}

CycloNum::CycloNum(int order, std::vector<Rational> coefficients) : order_(order) {
  require_order(order);
  coefficients_ = reduce(std::move(coefficients), order);
}

CycloNum CycloNum::rational(const Rational& value, int order) {
  return CycloNum(order, {value});
}

CycloNum CycloNum::zeta(int n) { return zeta_power(n, 1); }

CycloNum CycloNum::zeta_power(int n, int k) {
  require_order(n);
  const int e = ((k % n) + n) % n;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return CycloNum(n, std::move(poly));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

CycloNum CycloNum::promoted(int n) const {
  require_order(n);
  if (n % order_ != 0) {
    throw IncompatibleOrders("Q(zeta_" + std::to_string(order_) + ") is not a subfield of Q(zeta_" +
                             std::to_string(n) + ")");
  }
  if (n == order_) return *this;
  const std::size_t step = static_cast<std::size_t>(n / order_);
  std::vector<Rational> poly(step * coefficients_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) poly[k * step] = coefficients_[k];
  return CycloNum(n, std::move(poly));
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  const int n = common_order(order_, rhs.order_);
  CycloNum a = promoted(n);
  const CycloNum b = rhs.promoted(n);
  for (std::size_t k = 0; k < a.coefficients_.size(); ++k) a.coefficients_[k] += b.coefficients_[k];
  return *this = std::move(a);
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  const int n = common_order(order_, rhs.order_);
  CycloNum a = promoted(n);
  const CycloNum b = rhs.promoted(n);
  for (std::size_t k = 0; k < a.coefficients_.size(); ++k) a.coefficients_[k] -= b.coefficients_[k];
  return *this = std::move(a);
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  const int n = common_order(order_, rhs.order_);
  const CycloNum a = promoted(n);
  const CycloNum b = rhs.promoted(n);
  std::vector<Rational> poly(a.coefficients_.size() + b.coefficients_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      poly[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return *this = CycloNum(n, std::move(poly));
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) { return *this *= rhs.inverse(); }

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
  // Column j of the multiplication matrix is this * z^j.
  const std::size_t d = coefficients_.size();
  RationalMatrix m(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    const CycloNum column = *this * zeta_power(order_, static_cast<int>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = column.coefficients_[i];
  }
  RationalMatrix unit(d, std::vector<Rational>(1, Rational(0)));
  unit[0][0] = 1;
  const RationalMatrix x = solve_linear(std::move(m), std::move(unit));
  std::vector<Rational> coeffs(d);
  for (std::size_t i = 0; i < d; ++i) coeffs[i] = x[i][0];
  return CycloNum(order_, std::move(coeffs));
}

CycloNum CycloNum::pow(int exponent) const {
  CycloNum base = exponent < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  CycloNum result = rational(1, order_);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  const int n = common_order(a.order_, b.order_);
  return a.promoted(n).coefficients_ == b.promoted(n).coefficients_;
}

std::string CycloNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    Rational c = coefficients_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    const std::string power = k == 0 ? "" : "z" + std::to_string(order_) +
                                                (k == 1 ? "" : "^" + std::to_string(k));
    if (k == 0) {
      out << c.str();
    } else if (c == 1) {
      out << power;
    } else {
      out << c.str() << "*" << power;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

CycloNum add(const CycloNum& a, const CycloNum& b) { return a + b; }
CycloNum sub(const CycloNum& a, const CycloNum& b) { return a - b; }
CycloNum mul(const CycloNum& a, const CycloNum& b) { return a * b; }
CycloNum inv(const CycloNum& a) { return a.inverse(); }
bool eq(const CycloNum& a, const CycloNum& b) { return a == b; }

CycloNum i_sqrt3() { return CycloNum::rational(2, 3) * CycloNum::zeta(3) + CycloNum::rational(1); }

CycloNum imaginary_unit() { return CycloNum::zeta(4); }

RationalMatrix solve_linear(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DivisionByZero("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational scale = a[col][col];
    for (auto& x : a[col]) x /= scale;
    for (auto& x : b[col]) x /= scale;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) a[row][j] -= factor * a[col][j];
      for (std::size_t j = 0; j < b[row].size(); ++j) b[row][j] -= factor * b[col][j];
    }
  }
  return b;
}

RationalMatrix row_reduce(RationalMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const Rational scale = m[rank][col];
    for (auto& x : m[rank]) x /= scale;
    for (std::size_t row = 0; row < m.size(); ++row) {
      if (row == rank || m[row][col] == 0) continue;
      const Rational factor = m[row][col];
      for (std::size_t j = 0; j < cols; ++j) m[row][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

}  // namespace enriques18
