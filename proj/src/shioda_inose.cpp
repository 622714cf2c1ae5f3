#include "enriques18/shioda_inose.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::string e(int i, int j) { return "E" + std::to_string(i) + std::to_string(j); }
std::string ep(int i, int j) { return "E'" + std::to_string(i) + std::to_string(j); }
std::string h(int i, int j) { return "H" + std::to_string(i) + std::to_string(j); }
std::string f(int i) { return "F" + std::to_string(i); }
std::string g(int j) { return "G" + std::to_string(j); }

std::vector<std::string> sorted(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return names;
}

// S3: F_i meets E'_ij, G_j meets E_ij, E_ij meets E'_ij.
CurveGraph build_s3() {
  std::vector<std::string> names;
  EdgeList edges;
  for (int i = 1; i <= 3; ++i) {
    names.push_back(f(i));
    names.push_back(g(i));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      names.push_back(e(i, j));
      names.push_back(ep(i, j));
      edges.emplace_back(f(i), ep(i, j));
      edges.emplace_back(g(j), e(i, j));
      edges.emplace_back(e(i, j), ep(i, j));
    }
  }
  CurveGraph graph(Surface::S3, 3, sorted(names), edges);
  for (const auto& name : graph.curves()) {
    graph.set_label(name, name[0] == 'F' || name[0] == 'G' ? Mark::kFixed : Mark::kStable);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      graph.add_isolated_point({"P" + std::to_string(i) + std::to_string(j),
                                std::make_pair(e(i, j), ep(i, j))});
    }
  }
  return graph;
}

// S2: chains F_i - E'_ij - H_ij - E_ij - G_j for i, j in {1, 3}, and the
// six curves through the order-2 points, each meeting one F and one G.
CurveGraph build_s2(int index) {
  std::vector<std::string> names;
  EdgeList edges;
  for (int i = 1; i <= 3; ++i) {
    names.push_back(f(i));
    names.push_back(g(i));
  }
  for (int i : {1, 3}) {
    for (int j : {1, 3}) {
      names.insert(names.end(), {ep(i, j), h(i, j), e(i, j)});
      edges.emplace_back(f(i), ep(i, j));
      edges.emplace_back(ep(i, j), h(i, j));
      edges.emplace_back(h(i, j), e(i, j));
      edges.emplace_back(e(i, j), g(j));
    }
  }
  const std::vector<std::pair<std::string, std::pair<int, int>>> bridges = {
      {e(1, 2), {1, 2}},  {e(3, 2), {3, 2}},  {e(2, 2), {2, 2}},
      {ep(2, 2), {2, 2}}, {ep(2, 1), {2, 1}}, {ep(2, 3), {2, 3}},
  };
  for (const auto& [curve, fg] : bridges) {
    names.push_back(curve);
    edges.emplace_back(f(fg.first), curve);
    edges.emplace_back(g(fg.second), curve);
  }
  CurveGraph graph(Surface::S2, index, sorted(names), edges);

  if (index == 2) {
    for (const auto& name : graph.curves()) {
      const bool fixed = name[0] == 'F' || name[0] == 'G' || name[0] == 'H';
      graph.set_label(name, fixed ? Mark::kFixed : Mark::kStable);
    }
    return graph;
  }

  // index 4
  for (const auto& name : graph.curves()) graph.set_label(name, Mark::kStable);
  for (const auto& name : {f(1), f(3), g(1), g(3)}) graph.set_label(name, Mark::kFixed);
  for (const auto& name : {f(2), g(2), h(1, 1), h(1, 3), h(3, 1), h(3, 3)}) {
    graph.set_label(name, Mark::kSquareFixed);
  }
  graph.add_swapped_pair(e(2, 2), ep(2, 2));
  // Each stable curve carries two g-fixed points: one on its f neighbour and
  // an isolated one where it meets its h neighbour.
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const int id = static_cast<int>(v);
    if (graph.label(id) != Mark::kStable) continue;
    for (std::size_t u = 0; u < graph.size(); ++u) {
      const int other = static_cast<int>(u);
      if (graph.adjacent(id, other) && graph.label(other) == Mark::kSquareFixed) {
        graph.add_isolated_point({"Q(" + graph.name(id) + "," + graph.name(other) + ")",
                                  std::make_pair(graph.name(id), graph.name(other))});
      }
    }
  }
  return graph;
}

}  // namespace

std::string surface_name(Surface surface) { return surface == Surface::S2 ? "S2" : "S3"; }

Surface parse_surface(std::string_view text) {
  if (text == "S2") return Surface::S2;
  if (text == "S3") return Surface::S3;
  throw UnsupportedCombination("unknown surface '" + std::string(text) + "'");
}

CurveGraph::CurveGraph(Surface surface, int index, std::vector<std::string> names,
                       const std::vector<std::pair<std::string, std::string>>& edges)
    : surface_(surface),
      index_(index),
      names_(std::move(names)),
      adjacency_(names_.size(), 0),
      labels_(names_.size()) {
  if (names_.size() > 32) throw Error("curve graphs hold at most 32 curves");
  for (const auto& [a, b] : edges) {
    const int u = id(a);
    const int v = id(b);
    if (u == v || adjacent(u, v)) throw Error("bad edge " + a + " - " + b);
    adjacency_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<int> CurveGraph::find(std::string_view name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int CurveGraph::id(std::string_view name) const {
  const auto found = find(name);
  if (!found) {
    throw UnknownCurveName("no curve named '" + std::string(name) + "' on " +
                           surface_name(surface_));
  }
  return *found;
}

int CurveGraph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<int> CurveGraph::curves_with(Mark mark) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == mark) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool CurveGraph::is_swapped(int v) const {
  return std::any_of(swapped_.begin(), swapped_.end(), [&](const auto& pair) {
    return pair.first == name(v) || pair.second == name(v);
  });
}

void CurveGraph::set_label(std::string_view curve, std::optional<Mark> mark) {
  labels_[static_cast<std::size_t>(id(curve))] = mark;
}

void CurveGraph::add_swapped_pair(std::string_view a, std::string_view b) {
  set_label(a, std::nullopt);
  set_label(b, std::nullopt);
  swapped_.emplace_back(std::string(a), std::string(b));
}

void CurveGraph::add_isolated_point(IsolatedPoint point) { points_.push_back(std::move(point)); }

const CurveGraph& host_graph(Surface surface, int index) {
  static const CurveGraph s3 = build_s3();
  static const CurveGraph s2_order2 = build_s2(2);
  static const CurveGraph s2_order4 = build_s2(4);
  if (surface == Surface::S3 && index == 3) return s3;
  if (surface == Surface::S2 && index == 2) return s2_order2;
  if (surface == Surface::S2 && index == 4) return s2_order4;
  throw UnsupportedCombination("no host data for (" + surface_name(surface) + ", index " +
                               std::to_string(index) + ")");
}

bool validate_chain(const CurveGraph& host, const DynkinComponent& shape,
                    const std::vector<std::string>& names, const MarkPattern& expected) {
  std::vector<int> ids;
  for (const auto& n : names) ids.push_back(host.id(n));
  if (ids.size() != static_cast<std::size_t>(shape.rank) || expected.size() != ids.size()) {
    return false;
  }
  if (std::set<int>(ids.begin(), ids.end()).size() != ids.size()) return false;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (host.label(ids[a]) != expected[a]) return false;
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (host.adjacent(ids[a], ids[b]) !=
          shape.adjacent(static_cast<int>(a), static_cast<int>(b))) {
        return false;
      }
    }
  }
  return true;
}

bool validate_chain(Surface surface, int index, const std::vector<std::string>& names,
                    const MarkPattern& expected) {
  const CurveGraph& host = host_graph(surface, index);
  if (names.empty()) return false;
  return validate_chain(host, make_component(Kind::A, static_cast<int>(names.size())), names,
                        expected);
}

}  // namespace enriques18
