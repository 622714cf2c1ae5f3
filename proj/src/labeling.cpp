#include "enriques18/labeling.hpp"

#include <algorithm>
#include <functional>

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

std::vector<Mark> allowed_marks(int index) {
  if (index == 4) return {Mark::kFixed, Mark::kSquareFixed, Mark::kStable};
  return {Mark::kFixed, Mark::kStable};
}

bool is_pointwise_fixed(Mark m) { return m == Mark::kFixed || m == Mark::kSquareFixed; }

// Rule for an edge whose endpoints are both assigned.
bool edge_ok(Mark a, Mark b, int index) {
  switch (index) {
    case 2:
    case 4:
      // Fixed curves are disjoint; two non-fixed stable curves meet evenly.
      if (is_pointwise_fixed(a) && is_pointwise_fixed(b)) return false;
      return !(a == Mark::kStable && b == Mark::kStable);
    case 3:
      return !(a == Mark::kFixed && b == Mark::kFixed);
    default:
      return false;
  }
}

// Neighbour-count rule for a vertex whose neighbours are all assigned.
bool closed_vertex_ok(Mark self, int fixed_neighbors, int square_fixed_neighbors, int index) {
  if (self != Mark::kStable) return true;
  switch (index) {
    case 2: return fixed_neighbors == 2;
    case 3: return fixed_neighbors == 1;
    case 4: return fixed_neighbors == 1 && square_fixed_neighbors == 1;
    default: return false;
  }
}

struct NeighborTable {
  std::vector<std::vector<int>> adj;
  explicit NeighborTable(const DynkinComponent& c) : adj(static_cast<std::size_t>(c.rank)) {
    for (const auto& [a, b] : c.edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  }
};

bool vertex_closed_ok(const NeighborTable& table, const MarkPattern& pattern, int v, int index) {
  int f = 0;
  int h = 0;
  for (int u : table.adj[static_cast<std::size_t>(v)]) {
    f += pattern[static_cast<std::size_t>(u)] == Mark::kFixed;
    h += pattern[static_cast<std::size_t>(u)] == Mark::kSquareFixed;
  }
  return closed_vertex_ok(pattern[static_cast<std::size_t>(v)], f, h, index);
}

void require_index(int index) {
  if (!is_labeling_index(index)) {
    throw UnsupportedIndex("labelings exist only for index 2, 3 or 4, got " +
                           std::to_string(index));
  }
}

}  // namespace

char mark_char(Mark mark) { return static_cast<char>(mark); }

Mark parse_mark(char c) {
  switch (c) {
    case 'f': return Mark::kFixed;
    case 'h': return Mark::kSquareFixed;
    case 's': return Mark::kStable;
    default: throw LabelingMismatch(std::string("unknown mark '") + c + "'");
  }
}

MarkPattern parse_pattern(std::string_view text) {
  MarkPattern out;
  for (char c : text) {
    if (c == 'f' || c == 'h' || c == 's') out.push_back(parse_mark(c));
  }
  return out;
}

std::string render_pattern(const DynkinComponent& component, const MarkPattern& pattern) {
  auto chain = [&](std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
      if (i > from) s += '-';
      s += mark_char(pattern[i]);
    }
    return s;
  };
  const auto n = pattern.size();
  switch (component.kind) {
    case Kind::A:
      return chain(0, n);
    case Kind::D:
      return std::string{mark_char(pattern[0]), ' ', mark_char(pattern[1])} + " > " +
             chain(2, n);
    case Kind::E:
      return std::string{mark_char(pattern[0])} + " > " + chain(1, 4) + " / " + chain(4, n);
  }
  return {};
}

FixedPointCount& FixedPointCount::operator+=(const FixedPointCount& other) {
  isolated_points += other.isolated_points;
  fixed_curves += other.fixed_curves;
  square_fixed_curves += other.square_fixed_curves;
  return *this;
}

bool is_labeling_index(int index) { return index == 2 || index == 3 || index == 4; }

GlobalCountRule global_rule(int index) {
  require_index(index);
  switch (index) {
    case 2:
      // Ten fixed curves, no isolated points.
      return {10, std::nullopt, 0};
    case 3:
      // Six fixed curves and nine isolated points on the whole surface.
      return {6, std::nullopt, 9};
    default:
      // Four g-fixed and six g^2-fixed curves, M = 2N + 4 = 12.
      return {4, 6, 12};
  }
}

bool satisfies_local_rules(const DynkinComponent& component, const MarkPattern& pattern,
                           int index) {
  require_index(index);
  if (pattern.size() != static_cast<std::size_t>(component.rank)) return false;
  if (index != 4 && std::find(pattern.begin(), pattern.end(), Mark::kSquareFixed) !=
                        pattern.end()) {
    return false;
  }
  for (const auto& [a, b] : component.edges) {
    if (!edge_ok(pattern[static_cast<std::size_t>(a)], pattern[static_cast<std::size_t>(b)],
                 index)) {
      return false;
    }
  }
  const NeighborTable table(component);
  for (int v = 0; v < component.rank; ++v) {
    if (!vertex_closed_ok(table, pattern, v, index)) return false;
  }
  return true;
}

std::vector<MarkPattern> label_component(const DynkinComponent& component, int index) {
  require_index(index);
  // E_n never carries an index-3 action on its curves (the twig argument).
  if (component.kind == Kind::E && index == 3) return {};

  const int n = component.rank;
  const NeighborTable table(component);
  // last_neighbor[v]: once this vertex is assigned, v's neighbourhood is complete.
  std::vector<int> closes_at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int last = v;
    for (int u : table.adj[static_cast<std::size_t>(v)]) last = std::max(last, u);
    closes_at[static_cast<std::size_t>(v)] = last;
  }

  const auto marks = allowed_marks(index);
  std::vector<MarkPattern> out;
  MarkPattern pattern(static_cast<std::size_t>(n), Mark::kStable);

  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      out.push_back(pattern);
      return;
    }
    for (Mark m : marks) {
      pattern[static_cast<std::size_t>(v)] = m;
      bool ok = true;
      for (int u : table.adj[static_cast<std::size_t>(v)]) {
        if (u < v && !edge_ok(pattern[static_cast<std::size_t>(u)], m, index)) {
          ok = false;
          break;
        }
      }
      if (ok && closes_at[static_cast<std::size_t>(v)] == v) {
        ok = vertex_closed_ok(table, pattern, v, index);
      }
      for (int u : table.adj[static_cast<std::size_t>(v)]) {
        if (!ok) break;
        if (u < v && closes_at[static_cast<std::size_t>(u)] == v) {
          ok = vertex_closed_ok(table, pattern, u, index);
        }
      }
      if (ok) assign(v + 1);
    }
  };
  assign(0);
  return out;
}

MarkPattern canonical_pattern(const DynkinComponent& component, const MarkPattern& pattern) {
  MarkPattern best = pattern;
  for (const auto& aut : diagram_automorphisms(component)) {
    MarkPattern image(pattern.size());
    for (std::size_t v = 0; v < pattern.size(); ++v) {
      image[static_cast<std::size_t>(aut.permutation[v])] = pattern[v];
    }
    best = std::min(best, image);
  }
  return best;
}

FixedPointCount count_component(const DynkinComponent& component, const MarkPattern& pattern) {
  if (pattern.size() != static_cast<std::size_t>(component.rank)) {
    throw LabelingMismatch("pattern of length " + std::to_string(pattern.size()) +
                           " does not fit " + component.name());
  }
  FixedPointCount count;
  int moving = 0;  // s and h curves: each carries exactly two g-fixed points
  for (Mark m : pattern) {
    count.fixed_curves += m == Mark::kFixed;
    count.square_fixed_curves += m == Mark::kSquareFixed;
    moving += m != Mark::kFixed;
  }
  int on_fixed_curve = 0;  // contacts of a moving curve with a fixed curve
  int shared = 0;          // contacts of two moving curves: one point counted twice
  for (const auto& [a, b] : component.edges) {
    const bool fa = pattern[static_cast<std::size_t>(a)] == Mark::kFixed;
    const bool fb = pattern[static_cast<std::size_t>(b)] == Mark::kFixed;
    if (fa != fb) ++on_fixed_curve;
    if (!fa && !fb) ++shared;
  }
  count.isolated_points = 2 * moving - on_fixed_curve - shared;
  return count;
}

FixedPointCount count_fixed_points(const Configuration& configuration, const Labeling& labeling) {
  if (labeling.marks.size() != configuration.size()) {
    throw LabelingMismatch("labeling has " + std::to_string(labeling.marks.size()) +
                           " components, configuration " + configuration.name() + " has " +
                           std::to_string(configuration.size()));
  }
  FixedPointCount total;
  for (std::size_t i = 0; i < configuration.size(); ++i) {
    const auto& pattern = labeling.marks[i];
    if (labeling.index != 4 &&
        std::find(pattern.begin(), pattern.end(), Mark::kSquareFixed) != pattern.end()) {
      throw LabelingMismatch("mark h only occurs for index 4");
    }
    total += count_component(configuration[i], pattern);
  }
  return total;
}

std::vector<Labeling> enumerate_labelings(const Configuration& configuration, int index) {
  require_index(index);
  const GlobalCountRule rule = global_rule(index);
  const std::size_t k = configuration.size();

  // Canonical fragments per component, with their counts.
  std::vector<std::vector<MarkPattern>> fragments(k);
  std::vector<std::vector<FixedPointCount>> counts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = configuration[i];
    if (i > 0 && c.same_shape(configuration[i - 1])) {
      fragments[i] = fragments[i - 1];
      counts[i] = counts[i - 1];
      continue;
    }
    for (const auto& p : label_component(c, index)) fragments[i].push_back(canonical_pattern(c, p));
    std::sort(fragments[i].begin(), fragments[i].end());
    fragments[i].erase(std::unique(fragments[i].begin(), fragments[i].end()), fragments[i].end());
    for (const auto& p : fragments[i]) counts[i].push_back(count_component(c, p));
    if (fragments[i].empty()) return {};
  }

  std::vector<Labeling> out;
  std::vector<std::size_t> choice(k);
  std::function<void(std::size_t, FixedPointCount)> pick = [&](std::size_t i,
                                                               FixedPointCount acc) {
    if (acc.fixed_curves > rule.fixed_curves) return;
    if (rule.square_fixed_curves && acc.square_fixed_curves > *rule.square_fixed_curves) return;
    if (i == k) {
      if (acc.fixed_curves != rule.fixed_curves) return;
      if (rule.square_fixed_curves && acc.square_fixed_curves != *rule.square_fixed_curves) {
        return;
      }
      if (acc.isolated_points > rule.max_isolated_points) return;
      Labeling lab{index, {}};
      for (std::size_t j = 0; j < k; ++j) lab.marks.push_back(fragments[j][choice[j]]);
      out.push_back(std::move(lab));
      return;
    }
    // Identical components take non-decreasing fragment indices.
    const bool same_as_prev = i > 0 && configuration[i].same_shape(configuration[i - 1]);
    const std::size_t start = same_as_prev ? choice[i - 1] : 0;
    for (std::size_t f = start; f < fragments[i].size(); ++f) {
      choice[i] = f;
      FixedPointCount next = acc;
      next += counts[i][f];
      pick(i + 1, next);
    }
  };
  pick(0, {});
  return out;
}

}  // namespace enriques18
