#include "enriques18/enumerator.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>

#include "enriques18/cyclotomic.hpp"
#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

constexpr int kTargetRank = 18;

// Family numerals keyed by (a, b, c, d, e).
struct FamilyTag {
  std::array<int, 5> counts;
  const char* numeral;
};

constexpr std::array<FamilyTag, 13> kFamilies = {{
    {{0, 0, 1, 0, 0}, "I"},    {{0, 1, 0, 0, 0}, "II"},   {{0, 0, 2, 0, 0}, "III"},
    {{0, 1, 1, 0, 0}, "IV"},   {{0, 2, 0, 0, 0}, "V"},    {{1, 0, 0, 1, 0}, "VI"},
    {{0, 0, 3, 0, 0}, "VII"},  {{0, 3, 0, 0, 0}, "VIII"}, {{0, 2, 1, 0, 0}, "IX"},
    {{0, 1, 2, 0, 0}, "X"},    {{1, 0, 1, 1, 0}, "XI"},   {{2, 0, 0, 0, 1}, "XII"},
    {{1, 1, 0, 1, 0}, "XIII"},
}};

// One index-3 block shape: kind, rank as a function of its size parameter, and
// the least admissible parameter.
struct BlockShape {
  Kind kind;
  int multiplier;
  int offset;
  int min_parameter;

  int rank(int parameter) const { return multiplier * parameter + offset; }
};

// D_{3l+1}, D_{3m}, A_{3p}, A_{3q-1}, A_{3r-2}. D needs rank >= 4.
constexpr std::array<BlockShape, 5> kBlocks = {{
    {Kind::D, 3, 1, 1},
    {Kind::D, 3, 0, 2},
    {Kind::A, 3, 0, 1},
    {Kind::A, 3, -1, 1},
    {Kind::A, 3, -2, 1},
}};

std::vector<Configuration> expand_family(const FamilySolution& solution) {
  const std::array<int, 5> counts = {solution.a, solution.b, solution.c, solution.d, solution.e};
  std::vector<std::size_t> slots;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    for (int i = 0; i < counts[k]; ++i) slots.push_back(k);
  }
  std::vector<Configuration> out;
  std::vector<DynkinComponent> parts;
  std::vector<int> params;
  std::function<void(std::size_t, int)> place = [&](std::size_t i, int rank_left) {
    if (i == slots.size()) {
      if (rank_left == 0) out.emplace_back(parts);
      return;
    }
    const BlockShape& shape = kBlocks[slots[i]];
    // Same block shape twice in a row: non-decreasing parameters.
    const int from = (i > 0 && slots[i - 1] == slots[i]) ? params.back() : shape.min_parameter;
    for (int p = from; shape.rank(p) <= rank_left; ++p) {
      parts.push_back(make_component(shape.kind, shape.rank(p)));
      params.push_back(p);
      place(i + 1, rank_left - shape.rank(p));
      parts.pop_back();
      params.pop_back();
    }
  };
  place(0, kTargetRank);
  return out;
}

std::vector<Candidate> index3_types() {
  std::vector<Candidate> out;
  for (const auto& solution : enumerate_family_solutions()) {
    std::vector<Candidate> family;
    for (auto& configuration : expand_family(solution)) {
      Candidate candidate{std::move(configuration), solution.family, {}};
      candidate.labelings = enumerate_labelings(candidate.configuration, 3);
      family.push_back(std::move(candidate));
    }
    std::sort(family.begin(), family.end(), [](const Candidate& x, const Candidate& y) {
      return x.configuration.name() < y.configuration.name();
    });
    family.erase(std::unique(family.begin(), family.end(),
                             [](const Candidate& x, const Candidate& y) {
                               return x.configuration == y.configuration;
                             }),
                 family.end());
    out.insert(out.end(), family.begin(), family.end());
  }
  return out;
}

// Every f curve on an A_{2k-1} sits at an odd position, k of them, so N fixed
// curves spread over components with sum(2k_i - 1) = 18 force 2N - 18 components.
std::vector<Candidate> index2_types() {
  const int n_fixed = global_rule(2).fixed_curves;
  const int pieces = 2 * n_fixed - kTargetRank;
  std::vector<Candidate> out;
  std::vector<int> ks;
  std::function<void(int, int)> split = [&](int left, int min_k) {
    if (static_cast<int>(ks.size()) == pieces) {
      if (left != 0) return;
      std::vector<DynkinComponent> parts;
      for (int k : ks) parts.push_back(make_component(Kind::A, 2 * k - 1));
      Candidate candidate{Configuration(std::move(parts)), std::nullopt, {}};
      candidate.labelings = enumerate_labelings(candidate.configuration, 2);
      if (!candidate.labelings.empty()) out.push_back(std::move(candidate));
      return;
    }
    for (int k = min_k; k <= left; ++k) {
      ks.push_back(k);
      split(left - k, k);
      ks.pop_back();
    }
  };
  if (pieces > 0) split(n_fixed, 1);
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    return x.configuration.name() < y.configuration.name();
  });
  return out;
}

// g^2 is an index-2 action, so every index-4 type is an index-2 type.
std::vector<Candidate> index4_types() {
  const GlobalCountRule rule = global_rule(4);
  picard_budget_index4(rule.fixed_curves);
  std::vector<Candidate> out;
  for (const auto& base : index2_types()) {
    Candidate candidate{base.configuration, std::nullopt,
                        enumerate_labelings(base.configuration, 4)};
    if (!candidate.labelings.empty()) out.push_back(std::move(candidate));
  }
  return out;
}

std::string join_counts(const std::vector<int>& counts) {
  std::string out;
  for (int c : counts) {
    if (!out.empty()) out += "+";
    out += std::to_string(c);
  }
  return out;
}

}  // namespace

std::vector<int> index_candidates() {
  // rank T_S = 22 - rho(S) with rho(S) in {19, 20}, and phi(I) divides into it.
  constexpr int kMaxTranscendentalRank = 3;
  std::vector<int> out;
  // phi(I) >= sqrt(I / 2), so I <= 2 * 3^2 bounds the search.
  for (int i = 2; i <= 2 * kMaxTranscendentalRank * kMaxTranscendentalRank; ++i) {
    if (euler_phi(i) <= kMaxTranscendentalRank) out.push_back(i);
  }
  return out;
}

std::vector<FamilySolution> enumerate_family_solutions() {
  std::vector<FamilySolution> out;
  // 2a - e <= 3 with e <= a/2 gives a <= 2; then b + c <= 3.
  for (int a = 0; a <= 3; ++a) {
    for (int e = 0; 2 * e <= a; ++e) {
      const int d = a - 2 * e;
      for (int b = 0; b <= 3; ++b) {
        for (int c = 0; c <= 3; ++c) {
          if (a + b + c + d + e == 0) continue;
          if (2 * a + b + c - e > 3) continue;
          FamilySolution s{a, b, c, d, e, ""};
          for (const auto& tag : kFamilies) {
            if (tag.counts == std::array<int, 5>{a, b, c, d, e}) s.family = tag.numeral;
          }
          if (s.family.empty()) throw Error("family solution without a numeral");
          out.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FamilySolution& x, const FamilySolution& y) {
    return family_number(x.family) < family_number(y.family);
  });
  return out;
}

int family_number(const std::string& family) {
  for (std::size_t i = 0; i < kFamilies.size(); ++i) {
    if (family == kFamilies[i].numeral) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::vector<std::string> CandidateList::names() const {
  std::vector<std::string> out;
  for (const auto& t : types) out.push_back(t.configuration.name());
  return out;
}

const Candidate* CandidateList::find(const std::string& name) const {
  for (const auto& t : types) {
    if (t.configuration.name() == name) return &t;
  }
  return nullptr;
}

CandidateList enumerate_types(int index) {
  CandidateList list;
  list.index = index;
  switch (index) {
    case 2:
      list.types = index2_types();
      break;
    case 3:
      list.types = index3_types();
      break;
    case 4:
      list.types = index4_types();
      break;
    case 6:
      list.trace = order6_impossibility_trace();
      break;
    default:
      throw UnsupportedIndex("canonical index must be one of 2, 3, 4, 6; got " +
                             std::to_string(index));
  }
  return list;
}

std::optional<ExclusionReason> exclusion_reason(const Configuration& configuration, int index) {
  const auto menu = index_candidates();
  if (std::find(menu.begin(), menu.end(), index) == menu.end()) {
    return ExclusionReason{"index", "canonical index " + std::to_string(index) +
                                        " is not in {2, 3, 4, 6}"};
  }
  if (configuration.total_rank() != kTargetRank) {
    return ExclusionReason{"rank", "total rank " + std::to_string(configuration.total_rank()) +
                                       " is not 18"};
  }
  if (index == 6) {
    return ExclusionReason{"index-6", "canonical index 6 is impossible"};
  }
  if (!enumerate_labelings(configuration, index).empty()) {
    // Index 4 also needs the Picard budget; it holds for N = 4.
    return std::nullopt;
  }

  const GlobalCountRule rule = global_rule(index);
  std::vector<int> min_f;
  std::vector<int> max_f;
  std::vector<int> min_h;
  std::vector<int> max_h;
  int min_points = 0;
  for (const auto& component : configuration.components()) {
    const auto patterns = label_component(component, index);
    if (patterns.empty()) {
      if (index == 2 && component.kind == Kind::A && component.rank % 2 == 0) {
        return ExclusionReason{"odd-rank", "even rank: " + component.name() +
                                               " has no index-2 labeling"};
      }
      if (index == 3 && component.kind == Kind::D && component.rank % 3 == 2) {
        return ExclusionReason{"d-rank-mod-3", component.name() +
                                                   ": D_n with n = 2 mod 3 has no index-3 labeling"};
      }
      if (index == 3 && component.kind == Kind::E) {
        return ExclusionReason{"e-type", component.name() + " carries no index-3 labeling"};
      }
      return ExclusionReason{"component", component.name() + " has no index-" +
                                              std::to_string(index) + " labeling"};
    }
    int lo_f = std::numeric_limits<int>::max();
    int hi_f = 0;
    int lo_h = std::numeric_limits<int>::max();
    int hi_h = 0;
    int lo_points = std::numeric_limits<int>::max();
    for (const auto& p : patterns) {
      const FixedPointCount count = count_component(component, p);
      lo_f = std::min(lo_f, count.fixed_curves);
      hi_f = std::max(hi_f, count.fixed_curves);
      lo_h = std::min(lo_h, count.square_fixed_curves);
      hi_h = std::max(hi_h, count.square_fixed_curves);
      lo_points = std::min(lo_points, count.isolated_points);
    }
    min_f.push_back(lo_f);
    max_f.push_back(hi_f);
    min_h.push_back(lo_h);
    max_h.push_back(hi_h);
    min_points += lo_points;
  }
  const int n = rule.fixed_curves;
  const auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  if (sum(min_f) > n) {
    return ExclusionReason{"fixed-curve-budget", "f-count minimum " + std::to_string(sum(min_f)) +
                                                     " exceeds N=" + std::to_string(n) + " (" +
                                                     join_counts(min_f) + ")"};
  }
  if (sum(max_f) < n) {
    return ExclusionReason{"fixed-curve-budget", "f-count maximum " + std::to_string(sum(max_f)) +
                                                     " falls short of N=" + std::to_string(n) +
                                                     " (" + join_counts(max_f) + ")"};
  }
  if (rule.square_fixed_curves) {
    const int h = *rule.square_fixed_curves;
    if (sum(min_h) > h || sum(max_h) < h) {
      return ExclusionReason{"square-fixed-budget", "h-count range " + std::to_string(sum(min_h)) +
                                                        ".." + std::to_string(sum(max_h)) +
                                                        " misses H=" + std::to_string(h)};
    }
  }
  if (min_points > rule.max_isolated_points) {
    return ExclusionReason{"isolated-points", "isolated-point minimum " +
                                                  std::to_string(min_points) + " exceeds " +
                                                  std::to_string(rule.max_isolated_points)};
  }
  return ExclusionReason{"global-counts",
                         "no combination of component labelings meets the global counts"};
}

}  // namespace enriques18
