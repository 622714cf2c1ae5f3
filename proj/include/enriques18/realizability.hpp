#pragma once

// Labeled embeddings of configurations into the host curve graphs.

#include <optional>
#include <string>
#include <vector>

#include "enriques18/dynkin.hpp"
#include "enriques18/enumerator.hpp"
#include "enriques18/labeling.hpp"
#include "enriques18/shioda_inose.hpp"

namespace enriques18 {

/// images[k][v] is the host curve id of vertex v of component k.
struct Embedding {
  std::vector<std::vector<int>> images;

  std::vector<std::vector<std::string>> curve_names(const CurveGraph& host) const;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Host used for each canonical index: 2 -> (S2, 2), 3 -> (S3, 3), 4 -> (S2, 4).
const CurveGraph& host_for_index(int index);

/// Exhaustive backtracking. Components are placed largest first, each grown
/// from its first f vertex along the diagram; candidates are tried in curve
/// id order, so the first hit is the least embedding in that order.
std::optional<Embedding> find_embedding(const Configuration& configuration,
                                        const Labeling& labeling, const CurveGraph& host);

/// Independent check of the four embedding conditions (induced, labels,
/// coverage of f and h curves, no swapped curves). Empty on success.
std::vector<std::string> validate_embedding(const Configuration& configuration,
                                            const Labeling& labeling, const CurveGraph& host,
                                            const Embedding& embedding);

enum class Verdict { kRealized, kIndeterminate, kExcluded };

std::string to_string(Verdict verdict);
/// Throws MalformedGolden for unknown text.
Verdict parse_verdict(const std::string& text);

struct TypeResult {
  std::string name;
  std::optional<std::string> family;
  std::optional<Labeling> labeling;
  Verdict verdict = Verdict::kIndeterminate;
  std::optional<Embedding> witness;
  /// Witness as curve names, one list per component; empty without a witness.
  std::vector<std::vector<std::string>> witness_curves;
  /// For kExcluded.
  std::string reason;

  friend bool operator==(const TypeResult&, const TypeResult&) = default;
};

struct ClassificationReport {
  int index = 0;
  std::string host;  // "S2", "S3" or "" for index 6
  std::vector<TypeResult> types;
  std::optional<Order6Trace> trace;

  std::vector<std::string> names_with(Verdict verdict) const;
  std::size_t count(Verdict verdict) const;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Runs the whole pipeline for one index; candidates are searched concurrently
/// and reported in enumeration order.
ClassificationReport classify(int index);

/// Single type: excluded (with reason), realized (with witness) or indeterminate.
TypeResult realize(const Configuration& configuration, int index);

}  // namespace enriques18
