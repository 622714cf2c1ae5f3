#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "enriques18/errors.hpp"
#include "enriques18/report_json.hpp"

namespace enriques18::cli {

namespace {

struct CliConfig {
  std::optional<int> index;
  std::string type;
  std::string format = "text";
  std::optional<std::string> golden_dir;
  std::vector<std::string> only;

  bool json() const { return format == "json"; }
};

int require_index(const CliConfig& config) {
  if (!config.index) throw CLI::RequiredError("--index");
  return *config.index;
}

const std::string& require_type(const CliConfig& config) {
  if (config.type.empty()) throw CLI::RequiredError("--type");
  return config.type;
}

std::optional<std::filesystem::path> golden_dir(const CliConfig& config) {
  if (config.golden_dir) return std::filesystem::path(*config.golden_dir);
  if (const char* env = std::getenv(kGoldenDirEnv); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

/// Curve names laid out like render_pattern: "a b > c-d-e".
std::string render_curves(const DynkinComponent& shape, const std::vector<std::string>& curves) {
  auto chain = [&](std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
      if (i > from) s += '-';
      s += curves[i];
    }
    return s;
  };
  switch (shape.kind) {
    case Kind::A:
      return chain(0, curves.size());
    case Kind::D:
      return curves[0] + " " + curves[1] + " > " + chain(2, curves.size());
    case Kind::E:
      return curves[0] + " > " + chain(1, 4) + " / " + chain(4, curves.size());
  }
  return {};
}

std::string render_labeling(const Configuration& configuration, const Labeling& labeling) {
  std::string s;
  for (std::size_t k = 0; k < configuration.size(); ++k) {
    if (k > 0) s += " | ";
    s += render_pattern(configuration[k], labeling.marks[k]);
  }
  return s;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const CliConfig& config, std::ostream& out) {
  const CandidateList list = enumerate_types(require_index(config));
  if (config.json()) {
    out << Json(list).dump(2) << '\n';
    return kOk;
  }
  out << "index " << list.index << ": " << list.types.size() << " candidate type(s)\n";
  for (const auto& t : list.types) {
    out << std::left << std::setw(6) << t.family.value_or("-") << std::setw(14)
        << t.configuration.name();
    for (const auto& l : t.labelings) out << "  " << render_labeling(t.configuration, l);
    out << '\n';
  }
  if (list.trace) {
    for (const auto& line : list.trace->lines) out << "  " << line << '\n';
  }
  return kOk;
}

int cmd_label(const CliConfig& config, std::ostream& out) {
  const int index = require_index(config);
  if (!is_labeling_index(index)) {
    throw UnsupportedIndex("labelings exist for indices 2, 3 and 4, not " + std::to_string(index));
  }
  const Configuration configuration = parse_configuration(require_type(config));
  const auto labelings = enumerate_labelings(configuration, index);
  if (config.json()) {
    out << Json{{"type", configuration}, {"index", index}, {"labelings", labelings}}.dump(2)
        << '\n';
    return kOk;
  }
  out << configuration.name() << " index " << index << ": " << labelings.size()
      << " labeling(s)\n";
  for (const auto& l : labelings) {
    for (std::size_t k = 0; k < configuration.size(); ++k) {
      out << "  " << std::left << std::setw(5) << configuration[k].name()
          << render_pattern(configuration[k], l.marks[k]) << '\n';
    }
    const FixedPointCount count = count_fixed_points(configuration, l);
    out << "  M=" << count.isolated_points << " N=" << count.fixed_curves;
    if (index == 4) out << " H=" << count.square_fixed_curves;
    out << '\n';
  }
  if (labelings.empty()) {
    if (const auto reason = exclusion_reason(configuration, index)) {
      out << "  excluded: " << reason->message << '\n';
    }
  }
  return kOk;
}

void print_type_result(const TypeResult& r, int index, std::ostream& out) {
  out << r.name << " index " << index << ": " << to_string(r.verdict);
  if (r.verdict == Verdict::kExcluded) out << ": " << r.reason;
  out << '\n';
  if (!r.labeling) return;
  const Configuration configuration = parse_configuration(r.name);
  for (std::size_t k = 0; k < configuration.size(); ++k) {
    out << "  " << std::left << std::setw(5) << configuration[k].name()
        << render_pattern(configuration[k], r.labeling->marks[k]);
    if (r.witness) out << "  :  " << render_curves(configuration[k], r.witness_curves[k]);
    out << '\n';
  }
}

int cmd_realize(const CliConfig& config, std::ostream& out) {
  const int index = require_index(config);
  if (index != 2 && index != 3 && index != 4 && index != 6) {
    throw UnsupportedIndex("canonical index " + std::to_string(index) + " is not in {2, 3, 4, 6}");
  }
  const Configuration configuration = parse_configuration(require_type(config));
  const TypeResult r = realize(configuration, index);
  if (config.json()) {
    ClassificationReport single;
    single.index = index;
    single.host = index == 6 ? "" : surface_name(host_for_index(index).surface());
    single.types.push_back(r);
    out << Json(single).dump(2) << '\n';
    return kOk;
  }
  print_type_result(r, index, out);
  return kOk;
}

int cmd_lefschetz(const CliConfig& config, std::ostream& out) {
  std::vector<int> indices{3, 4, 6};
  if (config.index) {
    if (*config.index != 3 && *config.index != 4 && *config.index != 6) {
      throw UnsupportedIndex("count identities exist for indices 3, 4 and 6, not " +
                             std::to_string(*config.index));
    }
    indices = {*config.index};
  }
  Json all = Json::array();
  for (int index : indices) {
    const CountIdentity identity = solve_count_identity(index);
    if (config.json()) {
      all.push_back(count_identity_json(identity));
    } else {
      out << render_identity(identity) << '\n';
    }
  }
  if (config.json()) out << all.dump(2) << '\n';
  return kOk;
}

int cmd_host_graph(const CliConfig& config, std::ostream& out) {
  const int index = require_index(config);
  if (index != 2 && index != 3 && index != 4) {
    throw UnsupportedIndex("host graphs exist for indices 2, 3 and 4, not " + std::to_string(index));
  }
  const CurveGraph& g = host_for_index(index);
  if (config.json()) {
    out << host_graph_json(g).dump(2) << '\n';
    return kOk;
  }
  out << surface_name(g.surface()) << " index " << index << ": " << g.size() << " curves, "
      << g.edges().size() << " edges\n";
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    const auto mark = g.label(v);
    out << "  " << std::left << std::setw(6) << g.name(v) << (mark ? mark_char(*mark) : '-')
        << "  deg " << g.degree(v) << "  :";
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
      if (g.adjacent(v, w)) out << ' ' << g.name(w);
    }
    out << '\n';
  }
  for (const auto& [a, b] : g.swapped_pairs()) out << "  swapped " << a << " <-> " << b << '\n';
  for (const auto& p : g.isolated_points()) {
    out << "  point " << p.name;
    if (p.on_curves) out << " on " << p.on_curves->first << ", " << p.on_curves->second;
    out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct Section {
  std::string name;
  std::string summary;  // fragment of the one-line summary
  bool ok = true;
  std::vector<std::string> lines;
  std::optional<GoldenDiff> diff;
};

Section verify_index(int index, const GoldenTables& tables) {
  Section s;
  s.name = "index" + std::to_string(index);
  const ClassificationReport report = classify(index);
  const std::size_t total = report.types.size();
  const std::size_t realized = report.count(Verdict::kRealized);
  const std::size_t open = report.count(Verdict::kIndeterminate);
  if (index == 3) {
    s.summary = std::to_string(total) + "(" + std::to_string(realized) + "+" +
                std::to_string(open) + ")";
  } else {
    s.summary = std::to_string(realized) + "/" + std::to_string(total);
  }
  const GoldenDiff diff = verify_golden(report, tables);
  s.ok = diff.empty();
  s.lines = diff.lines();
  s.diff = diff;
  return s;
}

Section verify_index6() {
  Section s;
  s.name = "index6";
  const CandidateList list = enumerate_types(6);
  s.ok = list.types.empty() && list.trace && list.trace->impossible;
  s.summary = s.ok ? "I6 impossible" : "I6 NOT excluded";
  if (!s.ok && list.trace) s.lines = list.trace->lines;
  return s;
}

Section verify_lefschetz() {
  Section s;
  s.name = "lefschetz";
  auto fail = [&](const std::string& line) {
    s.ok = false;
    s.lines.push_back(line);
  };
  for (int index : {3, 4, 6}) {
    const CountIdentity identity = solve_count_identity(index);
    for (long long other = 0; other <= 20; ++other) {
      const Rational first = identity.solve_first({other});
      if (denominator(first) != 1 || first < 0) continue;
      std::vector<long long> values{static_cast<long long>(numerator(first)), other};
      if (identity.fixed_locus_sum(values) != holomorphic_lhs(index)) {
        fail("index " + std::to_string(index) + ": " + identity.to_string() + " fails at " +
             identity.unknowns[1] + " = " + std::to_string(other));
      }
    }
  }
  for (int n = 0; n <= 4; ++n) {
    const PicardBudget b = picard_budget_index4(n);
    if (b.invariant != 11 + 2 * n || b.anti_invariant != 9 - 2 * n) {
      fail("index 4 Picard budget wrong at N = " + std::to_string(n));
    }
  }
  try {
    picard_budget_index4(5);
    fail("index 4 Picard budget accepts N = 5");
  } catch (const BudgetViolation&) {
  }
  const CurveGraph& s3 = host_graph(Surface::S3, 3);
  const long long m = static_cast<long long>(s3.isolated_points().size());
  const long long n = static_cast<long long>(s3.curves_with(Mark::kFixed).size());
  if (solve_count_identity(3).solve_first({n}) != m) fail("S3 census breaks the index-3 identity");
  s.summary = s.ok ? "all identities exact" : "identity failures";
  return s;
}

Section verify_witnesses(const GoldenTables& tables) {
  Section s;
  s.name = "golden";
  std::size_t corrected = 0;
  const auto checks = check_witness_chains(tables);
  for (const auto& c : checks) {
    if (c.corrected) ++corrected;
    if (!c.ok()) {
      s.ok = false;
      s.lines.push_back(c.entry + " component " + std::to_string(c.component) + " index " +
                        std::to_string(c.index) + ": chain check failed " + c.detail);
    }
  }
  for (const auto& p : check_witness_embeddings(tables)) {
    s.ok = false;
    s.lines.push_back(p);
  }
  for (const auto& p : check_golden_labelings(tables)) {
    s.ok = false;
    s.lines.push_back(p);
  }
  s.summary = std::to_string(checks.size()) + " witness chains, " + std::to_string(corrected) +
              " corrected";
  return s;
}

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names{"index2", "index3", "index4", "index6",
                                              "lefschetz", "golden"};
  return names;
}

std::string normalize_section(const std::string& raw) {
  if (raw == "2" || raw == "3" || raw == "4" || raw == "6") return "index" + raw;
  for (const auto& n : section_names()) {
    if (raw == n) return n;
  }
  throw CLI::ValidationError("--only", "unknown section '" + raw + "'");
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  std::vector<std::string> selected;
  for (const auto& raw : config.only) selected.push_back(normalize_section(raw));
  if (selected.empty()) selected = section_names();
  auto wanted = [&](const std::string& n) {
    return std::find(selected.begin(), selected.end(), n) != selected.end();
  };

  std::optional<GoldenTables> tables;
  if (wanted("index2") || wanted("index3") || wanted("index4") || wanted("golden")) {
    tables = load_golden(golden_dir(config));
  }

  std::vector<std::future<Section>> jobs;
  for (const auto& name : section_names()) {
    if (!wanted(name)) continue;
    std::function<Section()> job;
    if (name == "index6") {
      job = verify_index6;
    } else if (name == "lefschetz") {
      job = verify_lefschetz;
    } else if (name == "golden") {
      job = [&tables] { return verify_witnesses(*tables); };
    } else {
      const int index = name.back() - '0';
      job = [&tables, index] { return verify_index(index, *tables); };
    }
    jobs.push_back(std::async(std::launch::async, job));
  }
  std::vector<Section> sections;
  for (auto& j : jobs) sections.push_back(j.get());

  bool ok = true;
  std::string counts;
  std::string identities;
  for (const auto& s : sections) {
    ok = ok && s.ok;
    if (s.name == "lefschetz") {
      identities = s.summary;
    } else if (s.name != "golden") {
      counts += (counts.empty() ? "" : ", ") + s.summary;
    }
  }
  std::string summary = counts;
  if (!identities.empty()) summary += (summary.empty() ? "" : "; ") + identities;

  if (config.json()) {
    Json js = Json::array();
    for (const auto& s : sections) {
      Json row = {{"name", s.name}, {"ok", s.ok}, {"summary", s.summary}, {"lines", s.lines}};
      if (s.diff) row["diff"] = *s.diff;
      js.push_back(std::move(row));
    }
    out << Json{{"ok", ok},
                {"summary", summary},
                {"golden_source", tables ? Json(tables->source) : Json(nullptr)},
                {"sections", js}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& s : sections) {
      out << (s.ok ? "ok    " : "FAIL  ") << s.name << ": " << s.summary << '\n';
      for (const auto& line : s.lines) out << "      " << line << '\n';
    }
    out << summary << '\n';
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Exceptional-curve configurations of rank-18 log Enriques surfaces"};
  app.name("enriques18");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--golden-dir", config.golden_dir,
                 std::string("Directory with table1.json and table2.json (overrides ") +
                     kGoldenDirEnv + ")");

  auto add_index = [&](CLI::App* sub) { sub->add_option("--index", config.index, "Canonical index"); };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", config.type, "Configuration name, e.g. A9+A9");
  };
  CLI::App* enumerate = app.add_subcommand("enumerate", "Candidate types for an index");
  add_index(enumerate);
  CLI::App* label = app.add_subcommand("label", "Labelings of a configuration");
  add_index(label);
  add_type(label);
  CLI::App* realize_cmd = app.add_subcommand("realize", "Witness embedding or verdict for a type");
  add_index(realize_cmd);
  add_type(realize_cmd);
  CLI::App* verify = app.add_subcommand("verify", "Regression run against the golden tables");
  verify->add_option("--only", config.only, "Sections: 2, 3, 4, 6, lefschetz, golden");
  CLI::App* lefschetz = app.add_subcommand("lefschetz", "Count identities");
  add_index(lefschetz);
  CLI::App* host = app.add_subcommand("host-graph", "Host curve graph for an index");
  add_index(host);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(config, out);
    if (label->parsed()) return cmd_label(config, out);
    if (realize_cmd->parsed()) return cmd_realize(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (lefschetz->parsed()) return cmd_lefschetz(config, out);
    if (host->parsed()) return cmd_host_graph(config, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedIndex& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidRank& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidConfiguration& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GoldenFileMissing& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedGolden& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace enriques18::cli
