#pragma once

// Fixed-point bookkeeping for a non-symplectic automorphism g of order n on a
// K3 surface with g^* omega = zeta_n omega.
//
// Holomorphic side: 1 + zeta_n^{-1} (H^0 contributes 1, H^2(O) the conjugate).
// Fixed-locus side: isolated points with local action diag(z^a, z^b),
// a + b = 1 mod n, contribute 1/((1 - z^a)(1 - z^b)); a fixed curve of genus
// g and self-intersection C^2 whose normal eigenvalue is lambda = z^{-1}
// contributes (1 - g)/(1 - z) - z C^2 / (1 - z)^2.

#include <string>
#include <vector>

#include "enriques18/cyclotomic.hpp"

namespace enriques18 {

struct LocalFixedPointType {
  int order = 3;
  int a = 2;
  int b = 2;

  /// a + b must be 1 mod order (the determinant is the omega eigenvalue).
  bool is_normalized() const;
};

CycloNum holomorphic_lhs(int index);
CycloNum point_term(const LocalFixedPointType& type);
CycloNum curve_term(int order, int genus, int self_intersection);

/// One symbolic count in the fixed-locus sum: `unknown` copies of
/// `multiplicity` * `term`.
struct FixedLocusContribution {
  std::string unknown;
  int multiplicity = 1;
  CycloNum term;
  std::string description;
};

/// The fixed-locus model the count identities are read off from:
///   index 3: M points of type (2,2), N rational (-2)-curves;
///   index 4: M points of type (2,3), N rational (-2)-curves;
///   index 6: 2l points of type (2,5), 2l of type (3,4), c rational (-2)-curves.
std::vector<FixedLocusContribution> fixed_locus_model(int index);

/// An integer affine relation sum coefficients[i] * unknowns[i] = constant.
struct CountIdentity {
  int index = 0;
  std::vector<std::string> unknowns;
  std::vector<long long> coefficients;
  long long constant = 0;
  std::vector<FixedLocusContribution> contributions;

  /// "M - 2N = 4".
  std::string to_string() const;
  /// Solved for the first unknown: "M = 2N + 4".
  std::string solved_form() const;
  /// Value of the first unknown given the others.
  Rational solve_first(const std::vector<long long>& others) const;
  /// Fixed-locus sum at the given counts (one per unknown).
  CycloNum fixed_locus_sum(const std::vector<long long>& values) const;
};

/// Equates the two sides coefficient-wise in the power basis and reduces the
/// resulting rational system to its single integer relation.
CountIdentity solve_count_identity(int index);

/// Multi-line rendering with both sides printed exactly.
std::string render_identity(const CountIdentity& identity);

/// Multiplicities of the eigenvalues of g^* on H^2, split into the Picard
/// part (t) and the transcendental part (r). Entry k stands for the
/// conjugate pair zeta^k, zeta^{-k}; k = 0 and k = n/2 are single eigenvalues.
struct EigenvalueProfile {
  int order = 1;
  std::vector<int> picard;
  std::vector<int> transcendental;

  int weight(std::size_t k) const;
  int total() const;
  int picard_rank() const;
  int transcendental_rank() const;
};

/// Checks shapes and that the total is 22; throws BudgetViolation otherwise.
EigenvalueProfile make_profile(int order, std::vector<int> picard, std::vector<int> transcendental);

struct PicardBudget {
  int invariant = 0;      // s: eigenvalue +1 on Pic
  int anti_invariant = 0; // t: eigenvalue -1 on Pic
  EigenvalueProfile profile;
};

/// Index 4: topological Lefschetz gives 2 + s - t = M + 2N with M = 2N + 4
/// and s + t = 20. Throws BudgetViolation once t < 0, i.e. N > 4.
PicardBudget picard_budget_index4(int fixed_curves);

// ---------------------------------------------------------------------------
// Index 6.

/// x0 + xc*c + xp*p + xq*q.
struct AffineForm {
  Rational constant;
  Rational c;
  Rational p;
  Rational q;

  Rational at(int c_value, int p_value, int q_value) const;
  /// "-c - p - q + 2".
  std::string to_string() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Multiplicities of 1, -1, zeta_6^{+-2}, zeta_6^{+-1} on H^2 are
/// alpha, beta, gamma, 1 + delta.
struct Order6System {
  AffineForm alpha;
  AffineForm beta;
  AffineForm gamma;
  AffineForm delta;

  friend bool operator==(const Order6System&, const Order6System&) = default;
};

/// Solves the topological Lefschetz identities for g, g^2, g^3 together with
/// alpha + beta + 2 gamma + 2 (1 + delta) = 22.
Order6System solve_order6_system();

enum class Order6Outcome {
  kBudgetViolated,          // delta < 0
  kInconsistentComponents,  // m < 1, n odd or n > 2p
  kRankShortfall,           // 6(c+p+q) + 4 - m + n < 18
  kParityContradiction,     // the g^2-only components would have odd total rank
  kFixedCurveContradiction, // A_1 components forced g-fixed beyond the c fixed curves
  kUnresolved,
};

std::string to_string(Order6Outcome outcome);

struct Order6Verdict {
  int c = 0;
  int p = 0;
  int q = 0;
  int m = 0;
  int n = 0;
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  int rank_bound = 0;
  Order6Outcome outcome = Order6Outcome::kUnresolved;
  std::string explanation;

  bool contradiction() const { return outcome != Order6Outcome::kUnresolved; }
  friend bool operator==(const Order6Verdict&, const Order6Verdict&) = default;
};

/// c fixed curves, 2p g^2-fixed curves missing S^g, 3q g^3-fixed curves
/// missing S^g, m g^3-stable and n g^2-only-stable components of Delta.
Order6Verdict solve_order6_budget(int c, int p, int q, int m, int n);

struct Order6Trace {
  Order6System system;
  /// Inputs that pass the budget and the rank chain.
  std::vector<Order6Verdict> survivors;
  std::vector<int> forced_p;
  std::vector<int> forced_c;
  std::vector<int> forced_q;
  std::vector<int> forced_n;
  std::vector<int> forced_m;
  bool impossible = false;
  std::vector<std::string> lines;

  friend bool operator==(const Order6Trace&, const Order6Trace&) = default;
};

/// Runs solve_order6_budget over every admissible input (the budget bounds
/// c + p + q <= 2, hence n <= 2p <= 4) and records why each one fails.
Order6Trace order6_impossibility_trace();

}  // namespace enriques18
