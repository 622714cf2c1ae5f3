#include "enriques18/report_json.hpp"

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return Rational(j.get<std::string>());
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

std::optional<std::string> optional_string_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

}  // namespace

void to_json(Json& j, const Configuration& c) {
  Json components = Json::array();
  for (const auto& part : c.components()) {
    components.push_back({{"kind", std::string(1, kind_letter(part.kind))}, {"rank", part.rank}});
  }
  j = {{"name", c.name()}, {"components", components}};
}

void from_json(const Json& j, Configuration& c) {
  std::vector<DynkinComponent> parts;
  for (const auto& part : j.at("components")) {
    parts.push_back(parse_component(part.at("kind").get<std::string>() +
                                    std::to_string(part.at("rank").get<int>())));
  }
  c = Configuration(std::move(parts));
  if (j.contains("name") && j.at("name").get<std::string>() != c.name()) {
    throw InvalidConfiguration("name " + j.at("name").get<std::string>() +
                               " does not match components " + c.name());
  }
}

void to_json(Json& j, const Labeling& l) {
  Json marks = Json::array();
  for (const auto& pattern : l.marks) {
    Json row = Json::array();
    for (Mark m : pattern) row.push_back(std::string(1, mark_char(m)));
    marks.push_back(row);
  }
  j = {{"index", l.index}, {"marks", marks}};
}

void from_json(const Json& j, Labeling& l) {
  l.index = j.at("index").get<int>();
  l.marks.clear();
  for (const auto& row : j.at("marks")) {
    MarkPattern pattern;
    for (const auto& m : row) pattern.push_back(parse_mark(m.get<std::string>().at(0)));
    l.marks.push_back(std::move(pattern));
  }
}

void to_json(Json& j, const AffineForm& f) {
  j = {{"text", f.to_string()},
       {"constant", rational_json(f.constant)},
       {"c", rational_json(f.c)},
       {"p", rational_json(f.p)},
       {"q", rational_json(f.q)}};
}

void from_json(const Json& j, AffineForm& f) {
  f.constant = rational_from(j.at("constant"));
  f.c = rational_from(j.at("c"));
  f.p = rational_from(j.at("p"));
  f.q = rational_from(j.at("q"));
}

Order6Outcome parse_order6_outcome(const std::string& text) {
  for (auto o : {Order6Outcome::kBudgetViolated, Order6Outcome::kInconsistentComponents,
                 Order6Outcome::kRankShortfall, Order6Outcome::kParityContradiction,
                 Order6Outcome::kFixedCurveContradiction, Order6Outcome::kUnresolved}) {
    if (to_string(o) == text) return o;
  }
  throw Error("unknown order-6 outcome '" + text + "'");
}

void to_json(Json& j, const Order6Verdict& v) {
  j = {{"c", v.c},
       {"p", v.p},
       {"q", v.q},
       {"m", v.m},
       {"n", v.n},
       {"alpha", rational_json(v.alpha)},
       {"beta", rational_json(v.beta)},
       {"gamma", rational_json(v.gamma)},
       {"delta", rational_json(v.delta)},
       {"rank_bound", v.rank_bound},
       {"outcome", to_string(v.outcome)},
       {"explanation", v.explanation}};
}

void from_json(const Json& j, Order6Verdict& v) {
  v.c = j.at("c").get<int>();
  v.p = j.at("p").get<int>();
  v.q = j.at("q").get<int>();
  v.m = j.at("m").get<int>();
  v.n = j.at("n").get<int>();
  v.alpha = rational_from(j.at("alpha"));
  v.beta = rational_from(j.at("beta"));
  v.gamma = rational_from(j.at("gamma"));
  v.delta = rational_from(j.at("delta"));
  v.rank_bound = j.at("rank_bound").get<int>();
  v.outcome = parse_order6_outcome(j.at("outcome").get<std::string>());
  v.explanation = j.at("explanation").get<std::string>();
}

void to_json(Json& j, const Order6Trace& t) {
  j = {{"system",
        {{"alpha", t.system.alpha},
         {"beta", t.system.beta},
         {"gamma", t.system.gamma},
         {"delta", t.system.delta}}},
       {"survivors", t.survivors},
       {"forced",
        {{"p", t.forced_p}, {"c", t.forced_c}, {"q", t.forced_q}, {"n", t.forced_n}, {"m", t.forced_m}}},
       {"impossible", t.impossible},
       {"lines", t.lines}};
}

void from_json(const Json& j, Order6Trace& t) {
  const Json& s = j.at("system");
  t.system = {s.at("alpha").get<AffineForm>(), s.at("beta").get<AffineForm>(),
              s.at("gamma").get<AffineForm>(), s.at("delta").get<AffineForm>()};
  t.survivors = j.at("survivors").get<std::vector<Order6Verdict>>();
  const Json& forced = j.at("forced");
  t.forced_p = forced.at("p").get<std::vector<int>>();
  t.forced_c = forced.at("c").get<std::vector<int>>();
  t.forced_q = forced.at("q").get<std::vector<int>>();
  t.forced_n = forced.at("n").get<std::vector<int>>();
  t.forced_m = forced.at("m").get<std::vector<int>>();
  t.impossible = j.at("impossible").get<bool>();
  t.lines = j.at("lines").get<std::vector<std::string>>();
}

void to_json(Json& j, const CandidateList& list) {
  Json types = Json::array();
  for (const auto& t : list.types) {
    types.push_back({{"name", t.configuration.name()},
                     {"family", optional_string(t.family)},
                     {"labelings", t.labelings}});
  }
  j = {{"index", list.index}, {"types", types}, {"trace", nullptr}};
  if (list.trace) j["trace"] = *list.trace;
}

void from_json(const Json& j, CandidateList& list) {
  list.index = j.at("index").get<int>();
  list.types.clear();
  for (const auto& t : j.at("types")) {
    list.types.push_back({parse_configuration(t.at("name").get<std::string>()),
                          optional_string_from(t.at("family")),
                          t.at("labelings").get<std::vector<Labeling>>()});
  }
  list.trace.reset();
  if (!j.at("trace").is_null()) list.trace = j.at("trace").get<Order6Trace>();
}

void to_json(Json& j, const ClassificationReport& report) {
  Json types = Json::array();
  for (const auto& t : report.types) {
    Json row = {{"name", t.name},
                {"family", optional_string(t.family)},
                {"verdict", to_string(t.verdict)},
                {"labeling", nullptr},
                {"witness", nullptr},
                {"reason", t.reason}};
    if (t.labeling) row["labeling"] = *t.labeling;
    if (t.witness) row["witness"] = t.witness_curves;
    types.push_back(std::move(row));
  }
  j = {{"index", report.index}, {"host", report.host}, {"types", types}, {"trace", nullptr}};
  if (report.trace) j["trace"] = *report.trace;
}

void from_json(const Json& j, ClassificationReport& report) {
  report.index = j.at("index").get<int>();
  report.host = j.at("host").get<std::string>();
  report.types.clear();
  for (const auto& row : j.at("types")) {
    TypeResult t;
    t.name = row.at("name").get<std::string>();
    t.family = optional_string_from(row.at("family"));
    t.verdict = parse_verdict(row.at("verdict").get<std::string>());
    if (!row.at("labeling").is_null()) t.labeling = row.at("labeling").get<Labeling>();
    if (!row.at("witness").is_null()) {
      t.witness_curves = row.at("witness").get<std::vector<std::vector<std::string>>>();
      const CurveGraph& host = host_for_index(report.index);
      Embedding e;
      for (const auto& component : t.witness_curves) {
        std::vector<int> ids;
        for (const auto& name : component) ids.push_back(host.id(name));
        e.images.push_back(std::move(ids));
      }
      t.witness = std::move(e);
    }
    t.reason = row.at("reason").get<std::string>();
    report.types.push_back(std::move(t));
  }
  report.trace.reset();
  if (!j.at("trace").is_null()) report.trace = j.at("trace").get<Order6Trace>();
}

void to_json(Json& j, const GoldenDiff& diff) {
  j = {{"index", diff.index},
       {"missing_realized", diff.missing_realized},
       {"unexpected_realized", diff.unexpected_realized},
       {"missing_indeterminate", diff.missing_indeterminate},
       {"unexpected_indeterminate", diff.unexpected_indeterminate}};
}

void from_json(const Json& j, GoldenDiff& diff) {
  diff.index = j.at("index").get<int>();
  diff.missing_realized = j.at("missing_realized").get<std::vector<std::string>>();
  diff.unexpected_realized = j.at("unexpected_realized").get<std::vector<std::string>>();
  diff.missing_indeterminate = j.at("missing_indeterminate").get<std::vector<std::string>>();
  diff.unexpected_indeterminate = j.at("unexpected_indeterminate").get<std::vector<std::string>>();
}

Json host_graph_json(const CurveGraph& graph) {
  Json labels = Json::object();
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const auto mark = graph.label(static_cast<int>(v));
    labels[graph.name(static_cast<int>(v))] = mark ? Json(std::string(1, mark_char(*mark))) : Json(nullptr);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : graph.edges()) edges.push_back({graph.name(a), graph.name(b)});
  Json swapped = Json::array();
  for (const auto& [a, b] : graph.swapped_pairs()) swapped.push_back({a, b});
  Json points = Json::array();
  for (const auto& p : graph.isolated_points()) {
    Json on = nullptr;
    if (p.on_curves) on = {p.on_curves->first, p.on_curves->second};
    points.push_back({{"name", p.name}, {"on", on}});
  }
  return {{"surface", surface_name(graph.surface())},
          {"index", graph.index()},
          {"vertices", graph.curves()},
          {"edges", edges},
          {"labels", labels},
          {"swapped_pairs", swapped},
          {"isolated_points", points}};
}

Json count_identity_json(const CountIdentity& identity) {
  Json terms = Json::array();
  for (const auto& t : identity.contributions) {
    terms.push_back({{"unknown", t.unknown},
                     {"multiplicity", t.multiplicity},
                     {"term", t.term.to_string()},
                     {"description", t.description}});
  }
  return {{"index", identity.index},
          {"relation", identity.to_string()},
          {"solved", identity.solved_form()},
          {"unknowns", identity.unknowns},
          {"coefficients", identity.coefficients},
          {"constant", identity.constant},
          {"holomorphic_side", holomorphic_lhs(identity.index).to_string()},
          {"fixed_locus_terms", terms}};
}

}  // namespace enriques18
