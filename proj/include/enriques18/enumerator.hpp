#pragma once

// Candidate exceptional configurations per canonical index.

#include <optional>
#include <string>
#include <vector>

#include "enriques18/dynkin.hpp"
#include "enriques18/labeling.hpp"
#include "enriques18/lefschetz.hpp"

namespace enriques18 {

/// Indices I >= 2 with phi(I) <= 3, the largest transcendental rank.
std::vector<int> index_candidates();

/// Index-3 block counts: a copies of D_{3l+1}, b of D_{3m}, c of A_{3p},
/// d of A_{3q-1}, e of A_{3r-2}.
struct FamilySolution {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;
  std::string family;  // "I" .. "XIII"

  int blocks() const { return a + b + c + d + e; }
  friend bool operator==(const FamilySolution&, const FamilySolution&) = default;
};

/// Nonzero solutions of d + 2e = a, 2a + b + c - e <= 3, in family order.
std::vector<FamilySolution> enumerate_family_solutions();

/// Family numeral to its position 1..13; 0 for anything else.
int family_number(const std::string& family);

struct Candidate {
  Configuration configuration;
  std::optional<std::string> family;
  std::vector<Labeling> labelings;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct CandidateList {
  int index = 0;
  std::vector<Candidate> types;
  /// Index 6 only.
  std::optional<Order6Trace> trace;

  std::vector<std::string> names() const;
  const Candidate* find(const std::string& name) const;
  friend bool operator==(const CandidateList&, const CandidateList&) = default;
};

/// Throws UnsupportedIndex unless index is 2, 3, 4 or 6.
CandidateList enumerate_types(int index);

struct ExclusionReason {
  std::string rule;     // machine tag, e.g. "fixed-curve-budget"
  std::string message;  // e.g. "f-count minimum 5 exceeds N=4"
};

/// Why a configuration is not a candidate for the index; nullopt if it is.
std::optional<ExclusionReason> exclusion_reason(const Configuration& configuration, int index);

}  // namespace enriques18
