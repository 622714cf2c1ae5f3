#include "enriques18/realizability.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <future>
#include <numeric>
#include <set>

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

using Mask = CurveGraph::Mask;

struct Slot {
  std::size_t component = 0;
  int vertex = 0;
  Mark mark = Mark::kStable;
  int parent = -1;                    // earlier slot adjacent in the diagram, -1 for an anchor
  std::vector<int> earlier_neighbors; // all earlier slots adjacent in the diagram
  int must_exceed = -1;               // anchor slot of the previous identical component
};

std::vector<Slot> placement_order(const Configuration& configuration, const Labeling& labeling) {
  std::vector<std::size_t> order(configuration.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return configuration[a].rank > configuration[b].rank;
  });

  std::vector<Slot> slots;
  std::vector<int> slot_of;  // vertex -> slot for the component being laid out
  int previous_anchor = -1;
  std::size_t previous_component = configuration.size();
  for (std::size_t k : order) {
    const DynkinComponent& component = configuration[k];
    const MarkPattern& marks = labeling.marks[k];
    const auto first_fixed = std::find(marks.begin(), marks.end(), Mark::kFixed);
    const int root = first_fixed == marks.end() ? 0 : static_cast<int>(first_fixed - marks.begin());

    const bool identical = previous_component < configuration.size() &&
                           component.same_shape(configuration[previous_component]) &&
                           marks == labeling.marks[previous_component];
    slot_of.assign(static_cast<std::size_t>(component.rank), -1);
    std::vector<int> queue = {root};
    std::vector<int> parent_vertex(static_cast<std::size_t>(component.rank), -1);
    std::vector<bool> seen(static_cast<std::size_t>(component.rank), false);
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      Slot slot;
      slot.component = k;
      slot.vertex = v;
      slot.mark = marks[static_cast<std::size_t>(v)];
      const int pv = parent_vertex[static_cast<std::size_t>(v)];
      slot.parent = pv < 0 ? -1 : slot_of[static_cast<std::size_t>(pv)];
      for (int u : component.neighbors(v)) {
        if (slot_of[static_cast<std::size_t>(u)] >= 0) {
          slot.earlier_neighbors.push_back(slot_of[static_cast<std::size_t>(u)]);
        }
      }
      if (head == 0 && identical) slot.must_exceed = previous_anchor;
      slot_of[static_cast<std::size_t>(v)] = static_cast<int>(slots.size());
      slots.push_back(std::move(slot));
      for (int u : component.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          parent_vertex[static_cast<std::size_t>(u)] = v;
          queue.push_back(u);
        }
      }
    }
    previous_anchor = slot_of[static_cast<std::size_t>(root)];
    previous_component = k;
  }
  return slots;
}

int mark_slot(Mark m) {
  switch (m) {
    case Mark::kFixed: return 0;
    case Mark::kSquareFixed: return 1;
    case Mark::kStable: return 2;
  }
  return 2;
}

}  // namespace

std::vector<std::vector<std::string>> Embedding::curve_names(const CurveGraph& host) const {
  std::vector<std::vector<std::string>> out;
  for (const auto& component : images) {
    std::vector<std::string> names;
    for (int id : component) names.push_back(host.name(id));
    out.push_back(std::move(names));
  }
  return out;
}

const CurveGraph& host_for_index(int index) {
  switch (index) {
    case 2: return host_graph(Surface::S2, 2);
    case 3: return host_graph(Surface::S3, 3);
    case 4: return host_graph(Surface::S2, 4);
    default:
      throw UnsupportedCombination("no host surface for index " + std::to_string(index));
  }
}

std::optional<Embedding> find_embedding(const Configuration& configuration,
                                        const Labeling& labeling, const CurveGraph& host) {
  if (labeling.marks.size() != configuration.size()) {
    throw LabelingMismatch("labeling does not fit " + configuration.name());
  }
  // Host curves per label, and how many of each the labeling asks for.
  std::array<Mask, 3> pool = {0, 0, 0};
  for (std::size_t v = 0; v < host.size(); ++v) {
    if (const auto m = host.label(static_cast<int>(v))) pool[static_cast<std::size_t>(mark_slot(*m))] |= Mask{1} << v;
  }
  std::array<int, 3> need = {0, 0, 0};
  for (const auto& pattern : labeling.marks) {
    for (Mark m : pattern) ++need[static_cast<std::size_t>(mark_slot(m))];
  }
  // Coverage: every f (and h) curve of the host is used.
  if (need[0] != std::popcount(pool[0]) || need[1] != std::popcount(pool[1]) ||
      need[2] > std::popcount(pool[2])) {
    return std::nullopt;
  }

  const std::vector<Slot> slots = placement_order(configuration, labeling);
  std::vector<int> image(slots.size(), -1);
  const Mask all = host.size() == 32 ? ~Mask{0} : (Mask{1} << host.size()) - 1;

  std::function<bool(std::size_t, Mask, std::array<int, 3>)> place =
      [&](std::size_t i, Mask used, std::array<int, 3> left) -> bool {
    if (i == slots.size()) return true;
    for (std::size_t l = 0; l < 3; ++l) {
      if (left[l] > std::popcount(pool[l] & ~used)) return false;
    }
    const Slot& slot = slots[i];
    const std::size_t label = static_cast<std::size_t>(mark_slot(slot.mark));
    Mask candidates = slot.parent < 0 ? all : host.neighbors(image[static_cast<std::size_t>(slot.parent)]);
    candidates &= pool[label] & ~used;
    Mask required = 0;
    for (int s : slot.earlier_neighbors) required |= Mask{1} << image[static_cast<std::size_t>(s)];
    while (candidates != 0) {
      const int c = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (slot.must_exceed >= 0 && c <= image[static_cast<std::size_t>(slot.must_exceed)]) continue;
      if ((host.neighbors(c) & used) != required) continue;
      image[i] = c;
      --left[label];
      if (place(i + 1, used | (Mask{1} << c), left)) return true;
      ++left[label];
    }
    image[i] = -1;
    return false;
  };
  if (!place(0, 0, need)) return std::nullopt;

  Embedding embedding;
  embedding.images.resize(configuration.size());
  for (std::size_t k = 0; k < configuration.size(); ++k) {
    embedding.images[k].assign(static_cast<std::size_t>(configuration[k].rank), -1);
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    embedding.images[slots[i].component][static_cast<std::size_t>(slots[i].vertex)] = image[i];
  }
  return embedding;
}

std::vector<std::string> validate_embedding(const Configuration& configuration,
                                            const Labeling& labeling, const CurveGraph& host,
                                            const Embedding& embedding) {
  std::vector<std::string> problems;
  if (embedding.images.size() != configuration.size() ||
      labeling.marks.size() != configuration.size()) {
    problems.push_back("component count mismatch");
    return problems;
  }
  struct Placed {
    std::size_t component;
    int vertex;
    int curve;
  };
  std::vector<Placed> placed;
  for (std::size_t k = 0; k < configuration.size(); ++k) {
    if (embedding.images[k].size() != static_cast<std::size_t>(configuration[k].rank) ||
        labeling.marks[k].size() != embedding.images[k].size()) {
      problems.push_back(configuration[k].name() + ": wrong number of images");
      return problems;
    }
    for (std::size_t v = 0; v < embedding.images[k].size(); ++v) {
      const int curve = embedding.images[k][v];
      if (curve < 0 || static_cast<std::size_t>(curve) >= host.size()) {
        problems.push_back(configuration[k].name() + ": image out of range");
        return problems;
      }
      placed.push_back({k, static_cast<int>(v), curve});
    }
  }

  for (std::size_t a = 0; a < placed.size(); ++a) {
    const Placed& p = placed[a];
    const std::string& curve = host.name(p.curve);
    for (std::size_t b = a + 1; b < placed.size(); ++b) {
      const Placed& q = placed[b];
      if (p.curve == q.curve) problems.push_back(curve + " used twice");
      const bool in_diagram =
          p.component == q.component && configuration[p.component].adjacent(p.vertex, q.vertex);
      const bool in_host = std::find(host.edges().begin(), host.edges().end(),
                                     std::make_pair(std::min(p.curve, q.curve),
                                                    std::max(p.curve, q.curve))) != host.edges().end();
      if (in_diagram != in_host) {
        problems.push_back(curve + " / " + host.name(q.curve) +
                           (in_host ? ": extra host edge" : ": missing host edge"));
      }
    }
    const Mark wanted = labeling.marks[p.component][static_cast<std::size_t>(p.vertex)];
    const auto label = host.label(p.curve);
    if (!label || *label != wanted) {
      problems.push_back(curve + ": host label does not match mark " + mark_char(wanted));
    }
    for (const auto& [x, y] : host.swapped_pairs()) {
      if (curve == x || curve == y) problems.push_back(curve + " is not g-stable");
    }
  }

  for (Mark m : {Mark::kFixed, Mark::kSquareFixed}) {
    for (std::size_t v = 0; v < host.size(); ++v) {
      if (host.label(static_cast<int>(v)) != m) continue;
      const bool covered = std::any_of(placed.begin(), placed.end(), [&](const Placed& p) {
        return p.curve == static_cast<int>(v);
      });
      if (!covered) problems.push_back(host.name(static_cast<int>(v)) + " is not covered");
    }
  }
  return problems;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kRealized: return "realized";
    case Verdict::kIndeterminate: return "indeterminate";
    case Verdict::kExcluded: return "excluded";
  }
  return "unknown";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "realized") return Verdict::kRealized;
  if (text == "indeterminate") return Verdict::kIndeterminate;
  if (text == "excluded") return Verdict::kExcluded;
  throw MalformedGolden("unknown verdict '" + text + "'");
}

std::vector<std::string> ClassificationReport::names_with(Verdict verdict) const {
  std::vector<std::string> out;
  for (const auto& t : types) {
    if (t.verdict == verdict) out.push_back(t.name);
  }
  return out;
}

std::size_t ClassificationReport::count(Verdict verdict) const {
  return static_cast<std::size_t>(std::count_if(
      types.begin(), types.end(), [&](const TypeResult& t) { return t.verdict == verdict; }));
}

namespace {

TypeResult search_candidate(const Candidate& candidate, int index) {
  TypeResult result;
  result.name = candidate.configuration.name();
  result.family = candidate.family;
  if (candidate.labelings.empty()) {
    result.verdict = Verdict::kExcluded;
    result.reason = "no labeling";
    return result;
  }
  result.labeling = candidate.labelings.front();
  const CurveGraph& host = host_for_index(index);
  result.witness = find_embedding(candidate.configuration, *result.labeling, host);
  if (!result.witness) {
    result.verdict = Verdict::kIndeterminate;
    return result;
  }
  const auto problems =
      validate_embedding(candidate.configuration, *result.labeling, host, *result.witness);
  if (!problems.empty()) {
    throw Error("search returned an invalid witness for " + result.name + ": " + problems.front());
  }
  result.verdict = Verdict::kRealized;
  result.witness_curves = result.witness->curve_names(host);
  return result;
}

}  // namespace

ClassificationReport classify(int index) {
  const CandidateList list = enumerate_types(index);
  ClassificationReport report;
  report.index = index;
  report.trace = list.trace;
  if (index == 6) return report;
  report.host = surface_name(host_for_index(index).surface());

  std::vector<std::future<TypeResult>> jobs;
  for (const auto& candidate : list.types) {
    jobs.push_back(std::async(std::launch::async, search_candidate, std::cref(candidate), index));
  }
  for (auto& job : jobs) report.types.push_back(job.get());
  return report;
}

TypeResult realize(const Configuration& configuration, int index) {
  if (const auto reason = exclusion_reason(configuration, index)) {
    TypeResult result;
    result.name = configuration.name();
    result.verdict = Verdict::kExcluded;
    result.reason = reason->message;
    return result;
  }
  const CandidateList list = enumerate_types(index);
  Candidate candidate{configuration, std::nullopt, enumerate_labelings(configuration, index)};
  if (const Candidate* listed = list.find(configuration.name())) candidate.family = listed->family;
  return search_candidate(candidate, index);
}

}  // namespace enriques18
