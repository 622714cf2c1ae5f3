#include "enriques18/golden.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "enriques18/errors.hpp"
#include "json.hpp"

namespace enriques18 {

namespace embedded {
std::string_view table1_json();
std::string_view table2_json();
}  // namespace embedded

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

std::map<int, std::string> marks_by_index(const json& j, int default_index) {
  std::map<int, std::string> out;
  if (j.is_string()) {
    out[default_index] = j.get<std::string>();
    return out;
  }
  for (const auto& [key, value] : j.items()) out[std::stoi(key)] = value.get<std::string>();
  return out;
}

GoldenComponent parse_component_row(const json& j, int default_index) {
  GoldenComponent c;
  c.shape = parse_component(j.at("shape").get<std::string>());
  if (j.contains("curves")) c.curves = string_list(j.at("curves"));
  c.marks = marks_by_index(j.at("marks"), default_index);
  if (j.contains("printed_curves")) c.printed_curves = string_list(j.at("printed_curves"));
  if (j.contains("printed_marks")) c.printed_marks = marks_by_index(j.at("printed_marks"), default_index);
  return c;
}

GoldenEntry parse_entry(const json& j, const std::string& table, Verdict verdict,
                        std::vector<int> indices) {
  GoldenEntry e;
  e.table = table;
  e.family = j.value("family", "");
  if (j.contains("case") && !j.at("case").is_null()) e.case_number = j.at("case").get<int>();
  e.printed_name = j.at("name").get<std::string>();
  e.configuration = parse_configuration(e.printed_name);
  e.indices = j.contains("indices") ? j.at("indices").get<std::vector<int>>() : std::move(indices);
  e.verdict = verdict;
  for (const auto& c : j.at("components")) {
    e.components.push_back(parse_component_row(c, e.indices.front()));
  }
  if (j.contains("corrected")) e.corrected = j.at("corrected").get<std::string>();
  std::vector<DynkinComponent> shapes;
  for (const auto& c : e.components) shapes.push_back(c.shape);
  if (Configuration(shapes) != e.configuration) {
    throw MalformedGolden(e.label() + ": component shapes do not match the name");
  }
  return e;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GoldenFileMissing("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Golden components re-ordered to line up with configuration.components().
std::vector<const GoldenComponent*> aligned(const GoldenEntry& entry) {
  std::vector<const GoldenComponent*> out;
  std::vector<bool> taken(entry.components.size(), false);
  for (const auto& shape : entry.configuration.components()) {
    for (std::size_t i = 0; i < entry.components.size(); ++i) {
      if (!taken[i] && entry.components[i].shape == shape) {
        taken[i] = true;
        out.push_back(&entry.components[i]);
        break;
      }
    }
  }
  return out;
}

void append_sorted_difference(const std::vector<std::string>& a, const std::vector<std::string>& b,
                              std::vector<std::string>& out) {
  std::set<std::string> sb(b.begin(), b.end());
  for (const auto& x : a) {
    if (!sb.count(x)) out.push_back(x);
  }
}

}  // namespace

std::string GoldenEntry::label() const {
  std::string out = table == "table1" ? family : table;
  if (case_number) out += (table == "table1" ? "(" : " (") + std::to_string(*case_number) + ")";
  return out + " " + configuration.name();
}

std::vector<const GoldenEntry*> GoldenTables::for_index(int index) const {
  std::vector<const GoldenEntry*> out;
  for (const auto& e : entries) {
    if (std::find(e.indices.begin(), e.indices.end(), index) != e.indices.end()) out.push_back(&e);
  }
  return out;
}

std::vector<std::string> GoldenTables::names(int index, Verdict verdict) const {
  std::vector<std::string> out;
  for (const auto* e : for_index(index)) {
    if (e->verdict == verdict) out.push_back(e->configuration.name());
  }
  std::sort(out.begin(), out.end());
  return out;
}

GoldenTables parse_golden(std::string_view table1_json, std::string_view table2_json,
                          std::string source) {
  GoldenTables tables;
  tables.source = std::move(source);
  try {
    const json t1 = json::parse(table1_json);
    const int index = t1.at("index").get<int>();
    for (const auto& row : t1.at("realized")) {
      tables.entries.push_back(parse_entry(row, "table1", Verdict::kRealized, {index}));
    }
    for (const auto& row : t1.at("indeterminate")) {
      tables.entries.push_back(parse_entry(row, "table1", Verdict::kIndeterminate, {index}));
    }
    const json t2 = json::parse(table2_json);
    for (const auto& row : t2.at("entries")) {
      tables.entries.push_back(parse_entry(row, "table2", Verdict::kRealized, {}));
    }
  } catch (const json::exception& ex) {
    throw MalformedGolden(std::string("golden tables: ") + ex.what());
  } catch (const InvalidRank& ex) {
    throw MalformedGolden(std::string("golden tables: ") + ex.what());
  } catch (const InvalidConfiguration& ex) {
    throw MalformedGolden(std::string("golden tables: ") + ex.what());
  }
  return tables;
}

GoldenTables load_golden(const std::optional<std::filesystem::path>& directory) {
  if (!directory) {
    return parse_golden(embedded::table1_json(), embedded::table2_json(), "embedded");
  }
  for (const char* file : {"table1.json", "table2.json"}) {
    if (!std::filesystem::exists(*directory / file)) {
      throw GoldenFileMissing((*directory / file).string() + " not found");
    }
  }
  return parse_golden(read_file(*directory / "table1.json"), read_file(*directory / "table2.json"),
                      directory->string());
}

bool GoldenDiff::empty() const { return size() == 0; }

std::size_t GoldenDiff::size() const {
  return missing_realized.size() + unexpected_realized.size() + missing_indeterminate.size() +
         unexpected_indeterminate.size();
}

std::vector<std::string> GoldenDiff::lines() const {
  std::vector<std::string> out;
  const std::string tag = "index " + std::to_string(index) + ": ";
  for (const auto& n : missing_realized) out.push_back(tag + "golden realized, engine did not: " + n);
  for (const auto& n : unexpected_realized) out.push_back(tag + "engine realized, not in golden: " + n);
  for (const auto& n : missing_indeterminate) {
    out.push_back(tag + "golden indeterminate, engine disagrees: " + n);
  }
  for (const auto& n : unexpected_indeterminate) {
    out.push_back(tag + "engine indeterminate, not in golden: " + n);
  }
  return out;
}

GoldenDiff verify_golden(const ClassificationReport& report, const GoldenTables& tables) {
  GoldenDiff diff;
  diff.index = report.index;
  auto engine_realized = report.names_with(Verdict::kRealized);
  auto engine_open = report.names_with(Verdict::kIndeterminate);
  const auto golden_realized = tables.names(report.index, Verdict::kRealized);
  const auto golden_open = tables.names(report.index, Verdict::kIndeterminate);
  append_sorted_difference(golden_realized, engine_realized, diff.missing_realized);
  append_sorted_difference(engine_realized, golden_realized, diff.unexpected_realized);
  append_sorted_difference(golden_open, engine_open, diff.missing_indeterminate);
  append_sorted_difference(engine_open, golden_open, diff.unexpected_indeterminate);
  return diff;
}

std::vector<ChainCheck> check_witness_chains(const GoldenTables& tables) {
  std::vector<ChainCheck> out;
  auto attempt = [](const CurveGraph& host, const DynkinComponent& shape,
                    const std::vector<std::string>& curves, const std::string& marks,
                    std::string& detail) {
    try {
      return validate_chain(host, shape, curves, parse_pattern(marks));
    } catch (const UnknownCurveName& ex) {
      detail = ex.what();
      return false;
    }
  };
  for (const auto& entry : tables.entries) {
    if (entry.verdict != Verdict::kRealized) continue;
    for (int index : entry.indices) {
      const CurveGraph& host = host_for_index(index);
      for (std::size_t k = 0; k < entry.components.size(); ++k) {
        const GoldenComponent& c = entry.components[k];
        ChainCheck check;
        check.entry = entry.label();
        check.index = index;
        check.component = k;
        check.corrected = c.corrected();
        const std::string& marks = c.marks.at(index);
        check.corrected_valid = attempt(host, c.shape, c.curves, marks, check.detail);
        std::string printed_marks = marks;
        if (c.printed_marks && c.printed_marks->count(index)) printed_marks = c.printed_marks->at(index);
        const auto& printed_curves = c.printed_curves ? *c.printed_curves : c.curves;
        check.printed_valid = attempt(host, c.shape, printed_curves, printed_marks, check.detail);
        out.push_back(std::move(check));
      }
    }
  }
  return out;
}

std::vector<std::string> check_witness_embeddings(const GoldenTables& tables) {
  std::vector<std::string> problems;
  for (const auto& entry : tables.entries) {
    if (entry.verdict != Verdict::kRealized) continue;
    const auto rows = aligned(entry);
    for (int index : entry.indices) {
      const CurveGraph& host = host_for_index(index);
      Labeling labeling{index, {}};
      Embedding embedding;
      try {
        for (const auto* row : rows) {
          labeling.marks.push_back(parse_pattern(row->marks.at(index)));
          std::vector<int> ids;
          for (const auto& n : row->curves) ids.push_back(host.id(n));
          embedding.images.push_back(std::move(ids));
        }
      } catch (const UnknownCurveName& ex) {
        problems.push_back(entry.label() + ": " + ex.what());
        continue;
      }
      for (const auto& p : validate_embedding(entry.configuration, labeling, host, embedding)) {
        problems.push_back(entry.label() + " index " + std::to_string(index) + ": " + p);
      }
    }
  }
  return problems;
}

std::vector<std::string> check_golden_labelings(const GoldenTables& tables) {
  std::vector<std::string> problems;
  for (const auto& entry : tables.entries) {
    const auto rows = aligned(entry);
    for (int index : entry.indices) {
      const auto engine = enumerate_labelings(entry.configuration, index);
      if (engine.size() != 1) {
        problems.push_back(entry.label() + ": engine has " + std::to_string(engine.size()) +
                           " labelings at index " + std::to_string(index));
        continue;
      }
      std::vector<std::pair<std::string, MarkPattern>> expected;
      std::vector<std::pair<std::string, MarkPattern>> actual;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& shape = entry.configuration[k];
        const MarkPattern golden = parse_pattern(rows[k]->marks.at(index));
        if (golden.size() != static_cast<std::size_t>(shape.rank)) {
          problems.push_back(entry.label() + ": marks of " + shape.name() + " have length " +
                             std::to_string(golden.size()));
          continue;
        }
        expected.emplace_back(shape.name(), canonical_pattern(shape, golden));
        actual.emplace_back(shape.name(), engine.front().marks[k]);
      }
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      if (expected != actual) {
        problems.push_back(entry.label() + ": marks differ from the engine labeling at index " +
                           std::to_string(index));
      }
    }
  }
  return problems;
}

}  // namespace enriques18
