#pragma once

// Reference tables: the index-3 witnesses (realized and indeterminate) and the
// index-2/4 witnesses. Shipped inside the library; a directory holding
// table1.json and table2.json can replace them at runtime.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriques18/dynkin.hpp"
#include "enriques18/realizability.hpp"

namespace enriques18 {

struct GoldenComponent {
  DynkinComponent shape;
  /// Witness curves in dynkin vertex order; empty for indeterminate rows.
  std::vector<std::string> curves;
  /// Printed mark text per index.
  std::map<int, std::string> marks;
  /// Set only where the printed row had to be repaired.
  std::optional<std::vector<std::string>> printed_curves;
  std::optional<std::map<int, std::string>> printed_marks;

  bool corrected() const { return printed_curves.has_value() || printed_marks.has_value(); }
};

struct GoldenEntry {
  std::string table;   // "table1" or "table2"
  std::string family;  // "I".."XIII" for table1
  std::optional<int> case_number;
  std::string printed_name;
  Configuration configuration;
  std::vector<int> indices;
  Verdict verdict = Verdict::kRealized;
  std::vector<GoldenComponent> components;
  std::optional<std::string> corrected;

  /// "VI(5) D16+A2" or "table2 (3) A5+A13".
  std::string label() const;
};

struct GoldenTables {
  std::vector<GoldenEntry> entries;
  std::string source;  // "embedded" or the directory

  std::vector<const GoldenEntry*> for_index(int index) const;
  std::vector<std::string> names(int index, Verdict verdict) const;
};

/// Throws GoldenFileMissing when a file is absent and MalformedGolden when it
/// does not parse.
GoldenTables load_golden(const std::optional<std::filesystem::path>& directory = std::nullopt);
GoldenTables parse_golden(std::string_view table1_json, std::string_view table2_json,
                          std::string source);

/// Set-level comparison of a report with the tables.
struct GoldenDiff {
  int index = 0;
  std::vector<std::string> missing_realized;
  std::vector<std::string> unexpected_realized;
  std::vector<std::string> missing_indeterminate;
  std::vector<std::string> unexpected_indeterminate;

  bool empty() const;
  std::size_t size() const;
  std::vector<std::string> lines() const;
  friend bool operator==(const GoldenDiff&, const GoldenDiff&) = default;
};

GoldenDiff verify_golden(const ClassificationReport& report, const GoldenTables& tables);

/// Outcome of validating one printed witness component.
struct ChainCheck {
  std::string entry;
  int index = 0;
  std::size_t component = 0;
  bool corrected = false;
  bool printed_valid = false;
  bool corrected_valid = false;
  std::string detail;

  /// Printed rows must validate; repaired rows must fail as printed and
  /// validate after repair.
  bool ok() const { return corrected ? (!printed_valid && corrected_valid) : printed_valid; }
};

std::vector<ChainCheck> check_witness_chains(const GoldenTables& tables);

/// Every realized row, taken as a whole, is a valid embedding (no edges
/// between its components, all f/h curves covered). Returns problems.
std::vector<std::string> check_witness_embeddings(const GoldenTables& tables);

/// The repaired marks of every row agree with the engine's unique labeling.
std::vector<std::string> check_golden_labelings(const GoldenTables& tables);

}  // namespace enriques18
