#pragma once

// The two host surfaces and their 24 distinguished rational curves.
//
// Curves are ASCII-named: F1, G2, E13, E'13 (E prime), H31. Within a graph the
// curve ids follow the byte order of the names, so "E'11" < "E11" < "F1".

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enriques18/dynkin.hpp"
#include "enriques18/labeling.hpp"

namespace enriques18 {

enum class Surface { S2, S3 };

std::string surface_name(Surface surface);
/// "S2" or "S3"; throws UnsupportedCombination otherwise.
Surface parse_surface(std::string_view text);

struct IsolatedPoint {
  std::string name;
  /// The two curves it lies on, or nullopt if it lies on none of the 24.
  std::optional<std::pair<std::string, std::string>> on_curves;
};

class CurveGraph {
 public:
  using Mask = std::uint32_t;

  CurveGraph(Surface surface, int index, std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges);

  Surface surface() const { return surface_; }
  int index() const { return index_; }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& curves() const { return names_; }
  const std::string& name(int id) const { return names_[static_cast<std::size_t>(id)]; }
  std::optional<int> find(std::string_view name) const;
  /// Throws UnknownCurveName.
  int id(std::string_view name) const;

  bool adjacent(int u, int v) const { return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U; }
  Mask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// nullopt for curves g exchanges with another curve.
  std::optional<Mark> label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::vector<int> curves_with(Mark mark) const;
  const std::vector<std::pair<std::string, std::string>>& swapped_pairs() const { return swapped_; }
  bool is_swapped(int v) const;
  const std::vector<IsolatedPoint>& isolated_points() const { return points_; }

  void set_label(std::string_view curve, std::optional<Mark> mark);
  void add_swapped_pair(std::string_view a, std::string_view b);
  void add_isolated_point(IsolatedPoint point);

 private:
  Surface surface_;
  int index_;
  std::vector<std::string> names_;
  std::vector<Mask> adjacency_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::optional<Mark>> labels_;
  std::vector<std::pair<std::string, std::string>> swapped_;
  std::vector<IsolatedPoint> points_;
};

/// (S3, 3), (S2, 2) or (S2, 4); throws UnsupportedCombination otherwise.
/// The graphs are built once and shared.
const CurveGraph& host_graph(Surface surface, int index);

/// True iff the names are distinct curves whose induced subgraph is exactly
/// `shape` (in dynkin vertex order) and whose host labels equal `expected`.
/// Throws UnknownCurveName for a name not in the graph.
bool validate_chain(const CurveGraph& host, const DynkinComponent& shape,
                    const std::vector<std::string>& names, const MarkPattern& expected);

/// Same, for a plain chain (shape A_n with n = names.size()).
bool validate_chain(Surface surface, int index, const std::vector<std::string>& names,
                    const MarkPattern& expected);

}  // namespace enriques18
