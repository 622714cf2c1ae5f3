#pragma once

// JSON forms of the engine's values. Every to_json here has a matching
// from_json, and parse(render(x)) == x.

#include "json.hpp"

#include "enriques18/dynkin.hpp"
#include "enriques18/enumerator.hpp"
#include "enriques18/golden.hpp"
#include "enriques18/labeling.hpp"
#include "enriques18/lefschetz.hpp"
#include "enriques18/realizability.hpp"
#include "enriques18/shioda_inose.hpp"

namespace enriques18 {

using Json = nlohmann::json;

void to_json(Json& j, const Configuration& c);
void from_json(const Json& j, Configuration& c);

void to_json(Json& j, const Labeling& l);
void from_json(const Json& j, Labeling& l);

void to_json(Json& j, const AffineForm& f);
void from_json(const Json& j, AffineForm& f);

void to_json(Json& j, const Order6Verdict& v);
void from_json(const Json& j, Order6Verdict& v);

void to_json(Json& j, const Order6Trace& t);
void from_json(const Json& j, Order6Trace& t);

void to_json(Json& j, const CandidateList& list);
void from_json(const Json& j, CandidateList& list);

void to_json(Json& j, const ClassificationReport& report);
void from_json(const Json& j, ClassificationReport& report);

void to_json(Json& j, const GoldenDiff& diff);
void from_json(const Json& j, GoldenDiff& diff);

/// Export only: vertices, edges, labels, swapped pairs, isolated points.
Json host_graph_json(const CurveGraph& graph);

/// Export only: both sides of a count identity as exact strings.
Json count_identity_json(const CountIdentity& identity);

Order6Outcome parse_order6_outcome(const std::string& text);

}  // namespace enriques18
