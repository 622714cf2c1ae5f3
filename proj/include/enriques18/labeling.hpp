#pragma once

// Per-vertex automorphism labelings of configurations.
//
// A vertex is marked
//   f  the curve is fixed pointwise by g,
//   h  (index 4 only) fixed pointwise by g^2 but not by g,
//   s  g-stable but not fixed.
//
// Local rules, by canonical index:
//   2  every s has exactly two f neighbours, f neighbours only s, no s-s edge;
//   3  every s has exactly one f neighbour, no f-f edge;
//   4  every s has exactly one f and exactly one h neighbour, f and h
//      neighbour only s, no s-s edge.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enriques18/dynkin.hpp"

namespace enriques18 {

enum class Mark : char { kFixed = 'f', kSquareFixed = 'h', kStable = 's' };

char mark_char(Mark mark);
Mark parse_mark(char c);

using MarkPattern = std::vector<Mark>;

/// Picks out the f/h/s letters of a printed pattern ("s s > f-s-s-f").
MarkPattern parse_pattern(std::string_view text);

/// "s-f-s" for chains, "s s > f-s-s-f" for D_n, "s > f-s-s / s-s" for E_n.
std::string render_pattern(const DynkinComponent& component, const MarkPattern& pattern);

struct Labeling {
  int index = 3;
  /// One pattern per component, aligned with Configuration::components().
  std::vector<MarkPattern> marks;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Counts attached to a labeling: isolated fixed points on Delta (M), f
/// curves (N) and h curves (H).
struct FixedPointCount {
  int isolated_points = 0;
  int fixed_curves = 0;
  int square_fixed_curves = 0;

  FixedPointCount& operator+=(const FixedPointCount& other);
  friend bool operator==(const FixedPointCount&, const FixedPointCount&) = default;
};

/// Global fixed-locus data a rank-18 labeling has to match for an index.
struct GlobalCountRule {
  int fixed_curves = 0;
  std::optional<int> square_fixed_curves;
  int max_isolated_points = 0;
};

bool is_labeling_index(int index);
GlobalCountRule global_rule(int index);

bool satisfies_local_rules(const DynkinComponent& component, const MarkPattern& pattern,
                           int index);

/// Every marking of the component obeying the local rules for the index; the
/// raw list, not reduced by diagram automorphisms.
std::vector<MarkPattern> label_component(const DynkinComponent& component, int index);

/// Lexicographically least image of the pattern under diagram automorphisms.
MarkPattern canonical_pattern(const DynkinComponent& component, const MarkPattern& pattern);

/// Labelings of the configuration meeting the global count rule, one per
/// class modulo diagram automorphisms and swaps of identical components.
std::vector<Labeling> enumerate_labelings(const Configuration& configuration, int index);

FixedPointCount count_component(const DynkinComponent& component, const MarkPattern& pattern);

/// Throws LabelingMismatch if the labeling does not fit the configuration.
FixedPointCount count_fixed_points(const Configuration& configuration, const Labeling& labeling);

}  // namespace enriques18
