#include "enriques18/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

void require_lefschetz_index(int index) {
  if (index != 2 && index != 3 && index != 4 && index != 6) {
    throw UnsupportedIndex("no Lefschetz data for index " + std::to_string(index));
  }
}

long long to_integer(const Rational& r) {
  return static_cast<long long>(boost::multiprecision::numerator(r));
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ", ";
    out += std::to_string(v);
  }
  return out;
}

std::string coefficient_term(long long coefficient, const std::string& unknown, bool first) {
  std::string out;
  if (first) {
    if (coefficient < 0) out += "-";
  } else {
    out += coefficient < 0 ? " - " : " + ";
  }
  const long long magnitude = coefficient < 0 ? -coefficient : coefficient;
  if (magnitude != 1) out += std::to_string(magnitude);
  return out + unknown;
}

// Sum of zeta_6^(j e) over one eigenvalue class; always rational.
Rational class_trace(int j, std::initializer_list<int> exponents) {
  CycloNum sum;
  for (int e : exponents) sum += CycloNum::zeta_power(6, j * e);
  const CycloNum value = sum.promoted(6);
  const auto& coeffs = value.coefficients();
  if (coeffs[1] != 0) throw Error("eigenvalue class trace is not rational");
  return coeffs[0];
}

// Partitions of total into exactly parts positive summands, non-increasing.
void partitions(int total, int parts, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int k = std::min(total, max_part); k >= 1; --k) {
    if (total - k < parts - 1) continue;
    current.push_back(k);
    partitions(total - k, parts - 1, k, current, out);
    current.pop_back();
  }
}

}  // namespace

bool LocalFixedPointType::is_normalized() const {
  return order > 0 && (((a + b - 1) % order) + order) % order == 0;
}

CycloNum holomorphic_lhs(int index) {
  require_lefschetz_index(index);
  return CycloNum::rational(1) + CycloNum::zeta_power(index, -1);
}

CycloNum point_term(const LocalFixedPointType& type) {
  const int n = type.order;
  if (!is_supported_order(n)) throw IncompatibleOrders("order " + std::to_string(n));
  if (type.a % n == 0 || type.b % n == 0) {
    throw DegenerateLocalType("local action diag(z^" + std::to_string(type.a) + ", z^" +
                              std::to_string(type.b) + ") has a trivial eigenvalue");
  }
  const CycloNum one = CycloNum::rational(1);
  return ((one - CycloNum::zeta_power(n, type.a)) * (one - CycloNum::zeta_power(n, type.b)))
      .inverse();
}

CycloNum curve_term(int order, int genus, int self_intersection) {
  // lambda = zeta^{-1}, so lambda^{-1} = zeta.
  const CycloNum one = CycloNum::rational(1);
  const CycloNum lambda_inv = CycloNum::zeta(order);
  const CycloNum denom = one - lambda_inv;
  return CycloNum::rational(1 - genus) / denom -
         lambda_inv * CycloNum::rational(self_intersection) / (denom * denom);
}

std::vector<FixedLocusContribution> fixed_locus_model(int index) {
  switch (index) {
    case 3:
      return {{"M", 1, point_term({3, 2, 2}), "isolated point, diag(z3^2, z3^2)"},
              {"N", 1, curve_term(3, 0, -2), "fixed rational curve"}};
    case 4:
      return {{"M", 1, point_term({4, 2, 3}), "isolated point, diag(-1, -i)"},
              {"N", 1, curve_term(4, 0, -2), "fixed rational curve"}};
    case 6:
      return {{"l", 2, point_term({6, 2, 5}), "isolated point, diag(z6^2, z6^5)"},
              {"l", 2, point_term({6, 3, 4}), "isolated point, diag(z6^3, z6^4)"},
              {"c", 1, curve_term(6, 0, -2), "fixed rational curve"}};
    default:
      throw UnsupportedIndex("count identities are derived for index 3, 4 and 6, got " +
                             std::to_string(index));
  }
}

std::string CountIdentity::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (coefficients[i] == 0) continue;
    out += coefficient_term(coefficients[i], unknowns[i], out.empty());
  }
  return out + " = " + std::to_string(constant);
}

std::string CountIdentity::solved_form() const {
  // coefficients[0] * x0 = constant - sum_{i>0} coefficients[i] * xi
  const long long lead = coefficients.front();
  std::string rhs;
  for (std::size_t i = 1; i < unknowns.size(); ++i) {
    const long long c = -coefficients[i];
    if (c == 0) continue;
    rhs += coefficient_term(c, unknowns[i], rhs.empty());
  }
  if (constant != 0 || rhs.empty()) {
    if (rhs.empty()) {
      rhs = std::to_string(constant);
    } else {
      rhs += constant < 0 ? " - " : " + ";
      rhs += std::to_string(constant < 0 ? -constant : constant);
    }
  }
  const std::string lhs = (lead == 1 ? "" : std::to_string(lead)) + unknowns.front();
  return lhs + " = " + rhs;
}

Rational CountIdentity::solve_first(const std::vector<long long>& others) const {
  Rational rest = constant;
  for (std::size_t i = 1; i < unknowns.size(); ++i) rest -= Rational(coefficients[i] * others.at(i - 1));
  return rest / Rational(coefficients.front());
}

CycloNum CountIdentity::fixed_locus_sum(const std::vector<long long>& values) const {
  CycloNum sum;
  for (const auto& term : contributions) {
    const auto it = std::find(unknowns.begin(), unknowns.end(), term.unknown);
    const auto slot = static_cast<std::size_t>(it - unknowns.begin());
    sum += CycloNum::rational(Rational(values.at(slot) * term.multiplicity)) * term.term;
  }
  return sum;
}

CountIdentity solve_count_identity(int index) {
  CountIdentity identity;
  identity.index = index;
  identity.contributions = fixed_locus_model(index);
  for (const auto& term : identity.contributions) {
    if (std::find(identity.unknowns.begin(), identity.unknowns.end(), term.unknown) ==
        identity.unknowns.end()) {
      identity.unknowns.push_back(term.unknown);
    }
  }
  const std::size_t u = identity.unknowns.size();
  const CycloNum lhs = holomorphic_lhs(index).promoted(index);
  const std::size_t dim = lhs.coefficients().size();

  // Row k: coordinate k of sum_u x_u * (sum of its terms) = coordinate k of lhs.
  RationalMatrix system(dim, std::vector<Rational>(u + 1, Rational(0)));
  for (const auto& term : identity.contributions) {
    const auto slot = static_cast<std::size_t>(
        std::find(identity.unknowns.begin(), identity.unknowns.end(), term.unknown) -
        identity.unknowns.begin());
    const CycloNum value = (CycloNum::rational(term.multiplicity) * term.term).promoted(index);
    for (std::size_t k = 0; k < dim; ++k) system[k][slot] += value.coefficients()[k];
  }
  for (std::size_t k = 0; k < dim; ++k) system[k][u] = lhs.coefficients()[k];

  const RationalMatrix reduced = row_reduce(system);
  if (reduced.size() != 1) {
    throw Error("index " + std::to_string(index) + " yields " + std::to_string(reduced.size()) +
                " independent relations, expected exactly one");
  }
  // Clear denominators, then divide out the content.
  const auto& row = reduced.front();
  boost::multiprecision::cpp_int scale = 1;
  for (const auto& x : row) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
  std::vector<boost::multiprecision::cpp_int> ints;
  for (const auto& x : row) ints.push_back(boost::multiprecision::numerator(x * Rational(scale)));
  boost::multiprecision::cpp_int content = 0;
  for (const auto& x : ints) content = boost::multiprecision::gcd(content, x);
  for (std::size_t i = 0; i < u; ++i) {
    identity.coefficients.push_back(static_cast<long long>(ints[i] / content));
  }
  identity.constant = static_cast<long long>(ints[u] / content);
  if (identity.coefficients.front() < 0) {
    for (auto& c : identity.coefficients) c = -c;
    identity.constant = -identity.constant;
  }
  return identity;
}

std::string render_identity(const CountIdentity& identity) {
  std::ostringstream out;
  out << "index " << identity.index << ": " << identity.to_string() << "  (" << identity.solved_form()
      << ")\n";
  out << "  L(g) = 1 + z" << identity.index << "^-1 = " << holomorphic_lhs(identity.index).to_string()
      << "\n";
  for (const auto& term : identity.contributions) {
    out << "  " << (term.multiplicity == 1 ? "" : std::to_string(term.multiplicity)) << term.unknown
        << " x [" << term.description << "] " << term.term.to_string() << "\n";
  }
  return out.str();
}

int EigenvalueProfile::weight(std::size_t k) const {
  return (k == 0 || 2 * static_cast<int>(k) == order) ? 1 : 2;
}

int EigenvalueProfile::picard_rank() const {
  int total = 0;
  for (std::size_t k = 0; k < picard.size(); ++k) total += weight(k) * picard[k];
  return total;
}

int EigenvalueProfile::transcendental_rank() const {
  int total = 0;
  for (std::size_t k = 0; k < transcendental.size(); ++k) total += weight(k) * transcendental[k];
  return total;
}

int EigenvalueProfile::total() const { return picard_rank() + transcendental_rank(); }

EigenvalueProfile make_profile(int order, std::vector<int> picard,
                               std::vector<int> transcendental) {
  const std::size_t classes = static_cast<std::size_t>(order / 2 + 1);
  if (order < 1 || picard.size() != classes || transcendental.size() != classes) {
    throw BudgetViolation("eigenvalue profile of order " + std::to_string(order) + " needs " +
                          std::to_string(classes) + " classes per part");
  }
  for (int v : picard) {
    if (v < 0) throw BudgetViolation("negative Picard multiplicity");
  }
  for (int v : transcendental) {
    if (v < 0) throw BudgetViolation("negative transcendental multiplicity");
  }
  EigenvalueProfile profile{order, std::move(picard), std::move(transcendental)};
  if (profile.total() != 22) {
    throw BudgetViolation("eigenvalue multiplicities sum to " + std::to_string(profile.total()) +
                          ", not 22");
  }
  return profile;
}

PicardBudget picard_budget_index4(int fixed_curves) {
  if (fixed_curves < 0) throw BudgetViolation("negative number of fixed curves");
  const CountIdentity identity = solve_count_identity(4);
  const Rational points = identity.solve_first({fixed_curves});
  // Isolated points have Euler number 1, rational curves 2.
  const long long euler = to_integer(points) + 2LL * fixed_curves;
  const long long s_minus_t = euler - 2;
  const long long s = (s_minus_t + 20) / 2;
  const long long t = 20 - s;
  if (t < 0) {
    throw BudgetViolation("N = " + std::to_string(fixed_curves) + " gives t = " +
                          std::to_string(t) + " < 0; at most 4 fixed curves");
  }
  // g^* on T_S is diag(i, -i).
  PicardBudget budget;
  budget.invariant = static_cast<int>(s);
  budget.anti_invariant = static_cast<int>(t);
  budget.profile = make_profile(4, {static_cast<int>(s), 0, static_cast<int>(t)}, {0, 1, 0});
  return budget;
}

Rational AffineForm::at(int c_value, int p_value, int q_value) const {
  return constant + c * c_value + p * p_value + q * q_value;
}

std::string AffineForm::to_string() const {
  std::string out;
  auto term = [&](const Rational& coefficient, const std::string& name) {
    if (coefficient == 0) return;
    if (out.empty()) {
      if (coefficient < 0) out += "-";
    } else {
      out += coefficient < 0 ? " - " : " + ";
    }
    const Rational magnitude = coefficient < 0 ? Rational(-coefficient) : coefficient;
    if (magnitude != 1 || name.empty()) out += magnitude.str();
    out += name;
  };
  term(c, "c");
  term(p, "p");
  term(q, "q");
  term(constant, "");
  return out.empty() ? "0" : out;
}

Order6System solve_order6_system() {
  // Unknowns alpha, beta, gamma, delta; right-hand sides are affine in (c, p, q)
  // and stored as columns [constant, c, p, q].
  RationalMatrix a(4, std::vector<Rational>(4, Rational(0)));
  RationalMatrix b(4, std::vector<Rational>(4, Rational(0)));

  // chi_top(S^{g^j}) for j = 1, 2, 3 as affine forms in (c, p, q):
  //   j=1: 4(c+1) points, c curves
  //   j=2: (2c+2) + (2p+2) points, c + (c+1) + 2p curves
  //   j=3: no points, c + (2c+2) + 3q curves
  const std::vector<std::vector<int>> euler = {{4, 6, 0, 0}, {6, 6, 6, 0}, {4, 6, 0, 6}};
  for (int j = 1; j <= 3; ++j) {
    auto& row = a[static_cast<std::size_t>(j - 1)];
    row[0] = class_trace(j, {0});
    row[1] = class_trace(j, {3});
    row[2] = class_trace(j, {2, -2});
    row[3] = class_trace(j, {1, -1});
    // 2 + trace(H^2) = chi_top; the "1" in (1 + delta) moves to the right.
    auto& rhs = b[static_cast<std::size_t>(j - 1)];
    for (std::size_t k = 0; k < 4; ++k) rhs[k] = euler[static_cast<std::size_t>(j - 1)][k];
    rhs[0] -= 2 + class_trace(j, {1, -1});
  }
  a[3] = {1, 1, 2, 2};
  b[3] = {20, 0, 0, 0};

  const RationalMatrix x = solve_linear(a, b);
  auto form = [&](std::size_t i) { return AffineForm{x[i][0], x[i][1], x[i][2], x[i][3]}; };
  return {form(0), form(1), form(2), form(3)};
}

std::string to_string(Order6Outcome outcome) {
  switch (outcome) {
    case Order6Outcome::kBudgetViolated: return "budget-violated";
    case Order6Outcome::kInconsistentComponents: return "inconsistent-components";
    case Order6Outcome::kRankShortfall: return "rank-shortfall";
    case Order6Outcome::kParityContradiction: return "parity-contradiction";
    case Order6Outcome::kFixedCurveContradiction: return "fixed-curve-contradiction";
    case Order6Outcome::kUnresolved: return "unresolved";
  }
  return "unknown";
}

Order6Verdict solve_order6_budget(int c, int p, int q, int m, int n) {
  const Order6System system = solve_order6_system();
  Order6Verdict v;
  v.c = c;
  v.p = p;
  v.q = q;
  v.m = m;
  v.n = n;
  v.alpha = system.alpha.at(c, p, q);
  v.beta = system.beta.at(c, p, q);
  v.gamma = system.gamma.at(c, p, q);
  v.delta = system.delta.at(c, p, q);
  v.rank_bound = 6 * (c + p + q) + 4 - m + n;

  if (v.delta < 0) {
    v.outcome = Order6Outcome::kBudgetViolated;
    v.explanation = "delta = " + v.delta.str() + " < 0, so c + p + q <= 2 fails";
    return v;
  }
  if (m < 1 || n < 0 || n % 2 != 0 || n > 2 * p) {
    v.outcome = Order6Outcome::kInconsistentComponents;
    v.explanation = "need m >= 1 (S^g is nonempty), n even and n <= 2p";
    return v;
  }
  if (v.rank_bound < 18) {
    v.outcome = Order6Outcome::kRankShortfall;
    v.explanation = "rank of Delta is at most " + std::to_string(v.rank_bound) + " < 18";
    return v;
  }

  // The g^3-stable components are A_{2m_i - 1} holding m_i g^3-fixed curves each,
  // and together they hold all 3(c+q)+2 of them.
  const int g3_fixed = 3 * (c + q) + 2;
  std::vector<std::vector<int>> splits;
  std::vector<int> current;
  partitions(g3_fixed, m, g3_fixed, current, splits);
  if (splits.empty()) {
    v.outcome = Order6Outcome::kInconsistentComponents;
    v.explanation = "cannot spread " + std::to_string(g3_fixed) + " g^3-fixed curves over " +
                    std::to_string(m) + " components";
    return v;
  }
  const int g3_rank = 2 * g3_fixed - m;
  const int remaining = 18 - g3_rank;
  if (remaining % 2 != 0) {
    // The other components come in pairs D', g^3(D').
    v.outcome = Order6Outcome::kParityContradiction;
    v.explanation = "g^3-stable part has rank " + std::to_string(g3_rank) +
                    ", leaving rank " + std::to_string(remaining) +
                    " for the paired components, which must be even";
    return v;
  }
  bool all_fixed_curve = true;
  for (const auto& split : splits) {
    const auto singles = std::count(split.begin(), split.end(), 1);
    if (singles <= c) all_fixed_curve = false;
  }
  if (all_fixed_curve) {
    v.outcome = Order6Outcome::kFixedCurveContradiction;
    v.explanation = "every split of the g^3-fixed curves has more A1 components than the " +
                    std::to_string(c) + " g-fixed curves; an A1 stable under g^3 and g^2 is g-fixed";
    return v;
  }
  v.outcome = Order6Outcome::kUnresolved;
  v.explanation = "no contradiction found";
  return v;
}

Order6Trace order6_impossibility_trace() {
  Order6Trace trace;
  trace.system = solve_order6_system();
  trace.lines.push_back("alpha = " + trace.system.alpha.to_string() + ", beta = " +
                        trace.system.beta.to_string() + ", gamma = " +
                        trace.system.gamma.to_string() + ", delta = " +
                        trace.system.delta.to_string());
  trace.lines.push_back("delta >= 0 forces c + p + q <= 2");

  bool all_contradict = true;
  std::set<int> ps, cs, qs, ns, ms;
  for (int c = 0; c <= 2; ++c) {
    for (int p = 0; p + c <= 2; ++p) {
      for (int q = 0; q + p + c <= 2; ++q) {
        for (int n = 0; n <= 2 * p; n += 2) {
          for (int m = 1; m <= 18; ++m) {
            const Order6Verdict v = solve_order6_budget(c, p, q, m, n);
            if (!v.contradiction()) all_contradict = false;
            if (v.outcome == Order6Outcome::kBudgetViolated ||
                v.outcome == Order6Outcome::kInconsistentComponents ||
                v.outcome == Order6Outcome::kRankShortfall) {
              continue;
            }
            trace.survivors.push_back(v);
            ps.insert(p);
            cs.insert(c);
            qs.insert(q);
            ns.insert(n);
            ms.insert(m);
          }
        }
      }
    }
  }
  trace.forced_p.assign(ps.begin(), ps.end());
  trace.forced_c.assign(cs.begin(), cs.end());
  trace.forced_q.assign(qs.begin(), qs.end());
  trace.forced_n.assign(ns.begin(), ns.end());
  trace.forced_m.assign(ms.begin(), ms.end());

  trace.lines.push_back("18 <= 6(c+p+q) + 4 - m + n <= 15 + 2p leaves " +
                        std::to_string(trace.survivors.size()) + " case(s)");
  trace.lines.push_back("forced: p = " + join_ints(trace.forced_p) + ", c = " +
                        join_ints(trace.forced_c) + ", q = " + join_ints(trace.forced_q) +
                        ", n = " + join_ints(trace.forced_n) + ", m in {" +
                        join_ints(trace.forced_m) + "}");
  for (const auto& v : trace.survivors) {
    trace.lines.push_back("m = " + std::to_string(v.m) + ": " + to_string(v.outcome) + " (" +
                          v.explanation + ")");
  }
  trace.impossible = all_contradict;
  trace.lines.push_back(all_contradict ? "canonical index 6 is impossible"
                                       : "canonical index 6 NOT excluded");
  return trace;
}

}  // namespace enriques18
