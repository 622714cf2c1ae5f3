#pragma once

// ADE Dynkin diagrams and rank-18 configurations.
//
// Vertex order conventions (positions are what labelings and witnesses index):
//   A_n: C_1 ... C_n along the path.
//   D_n: the two length-one twigs, then the center, then the long arm outward.
//   E_n: the length-one twig, then the center, then the length-two arm
//        outward, then the remaining arm outward.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace enriques18 {

enum class Kind { A, D, E };

char kind_letter(Kind kind);

struct DynkinComponent {
  Kind kind = Kind::A;
  int rank = 1;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;

  /// "A9", "D18", ...
  std::string name() const;
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  bool same_shape(const DynkinComponent& other) const {
    return kind == other.kind && rank == other.rank;
  }
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

/// Throws InvalidRank for (A, n<1), (D, n<4), (E, n not in {6,7,8}).
DynkinComponent make_component(Kind kind, int rank);

/// Parses "A9", "D18", "E6".
DynkinComponent parse_component(std::string_view text);

/// Sort key for canonical ordering: kind in the order D, A, E, then rank.
bool canonical_less(const DynkinComponent& lhs, const DynkinComponent& rhs);

std::string configuration_name(std::span<const DynkinComponent> components);

/// A multiset of components kept in canonical order.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<DynkinComponent> components);

  const std::vector<DynkinComponent>& components() const { return components_; }
  const std::string& name() const { return name_; }
  int total_rank() const;
  std::size_t size() const { return components_.size(); }
  const DynkinComponent& operator[](std::size_t i) const { return components_[i]; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.name_ == b.name_;
  }

 private:
  std::vector<DynkinComponent> components_;
  std::string name_;
};

/// Parses a "+"-joined name in any component order ("A3+D6+D9").
Configuration parse_configuration(std::string_view name);

struct DiagramAutomorphism {
  std::size_t component_index = 0;
  /// permutation[v] is the image of vertex v.
  std::vector<int> permutation;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

std::vector<DiagramAutomorphism> diagram_automorphisms(const DynkinComponent& component,
                                                       std::size_t component_index = 0);

}  // namespace enriques18
