#include "enriques18/dynkin.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "enriques18/errors.hpp"

namespace enriques18 {

namespace {

int kind_order(Kind kind) {
  switch (kind) {
    case Kind::D: return 0;
    case Kind::A: return 1;
    case Kind::E: return 2;
  }
  return 3;
}

void add_path(std::vector<std::pair<int, int>>& edges, int from, int to) {
  for (int v = from; v < to; ++v) edges.emplace_back(v, v + 1);
}

}  // namespace

char kind_letter(Kind kind) {
  switch (kind) {
    case Kind::A: return 'A';
    case Kind::D: return 'D';
    case Kind::E: return 'E';
  }
  return '?';
}

std::string DynkinComponent::name() const {
  return std::string(1, kind_letter(kind)) + std::to_string(rank);
}

bool DynkinComponent::adjacent(int u, int v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

std::vector<int> DynkinComponent::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int DynkinComponent::degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

DynkinComponent make_component(Kind kind, int rank) {
  DynkinComponent c;
  c.kind = kind;
  c.rank = rank;
  switch (kind) {
    case Kind::A:
      if (rank < 1) throw InvalidRank("A_n needs n >= 1, got " + std::to_string(rank));
      add_path(c.edges, 0, rank - 1);
      break;
    case Kind::D:
      if (rank < 4) throw InvalidRank("D_n needs n >= 4, got " + std::to_string(rank));
      c.edges.emplace_back(0, 2);
      c.edges.emplace_back(1, 2);
      add_path(c.edges, 2, rank - 1);
      break;
    case Kind::E:
      if (rank < 6 || rank > 8) {
        throw InvalidRank("E_n needs n in {6,7,8}, got " + std::to_string(rank));
      }
      c.edges.emplace_back(0, 1);
      c.edges.emplace_back(1, 2);
      c.edges.emplace_back(2, 3);
      c.edges.emplace_back(1, 4);
      add_path(c.edges, 4, rank - 1);
      break;
  }
  c.vertices.resize(static_cast<std::size_t>(rank));
  std::iota(c.vertices.begin(), c.vertices.end(), 0);
  return c;
}

DynkinComponent parse_component(std::string_view text) {
  if (text.size() < 2) throw InvalidConfiguration("bad component '" + std::string(text) + "'");
  Kind kind;
  switch (text.front()) {
    case 'A': kind = Kind::A; break;
    case 'D': kind = Kind::D; break;
    case 'E': kind = Kind::E; break;
    default: throw InvalidConfiguration("bad component kind in '" + std::string(text) + "'");
  }
  int rank = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last) {
    throw InvalidConfiguration("bad component rank in '" + std::string(text) + "'");
  }
  return make_component(kind, rank);
}

bool canonical_less(const DynkinComponent& lhs, const DynkinComponent& rhs) {
  if (kind_order(lhs.kind) != kind_order(rhs.kind)) {
    return kind_order(lhs.kind) < kind_order(rhs.kind);
  }
  return lhs.rank < rhs.rank;
}

std::string configuration_name(std::span<const DynkinComponent> components) {
  std::vector<DynkinComponent> sorted(components.begin(), components.end());
  std::stable_sort(sorted.begin(), sorted.end(), canonical_less);
  std::string out;
  for (const auto& c : sorted) {
    if (!out.empty()) out += '+';
    out += c.name();
  }
  return out;
}

Configuration::Configuration(std::vector<DynkinComponent> components)
    : components_(std::move(components)) {
  std::stable_sort(components_.begin(), components_.end(), canonical_less);
  name_ = configuration_name(components_);
}

int Configuration::total_rank() const {
  int total = 0;
  for (const auto& c : components_) total += c.rank;
  return total;
}

Configuration parse_configuration(std::string_view name) {
  std::vector<DynkinComponent> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t plus = name.find('+', start);
    const std::size_t end = plus == std::string_view::npos ? name.size() : plus;
    parts.push_back(parse_component(name.substr(start, end - start)));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (parts.empty()) throw InvalidConfiguration("empty configuration name");
  return Configuration(std::move(parts));
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const DynkinComponent& component,
                                                       std::size_t component_index) {
  const int n = component.rank;
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<DiagramAutomorphism> out{{component_index, identity}};

  switch (component.kind) {
    case Kind::A:
      if (n >= 2) {
        std::vector<int> reversal(identity.rbegin(), identity.rend());
        out.push_back({component_index, reversal});
      }
      break;
    case Kind::D:
      if (n == 4) {
        // Every permutation of the three outer vertices 0, 1, 3.
        std::vector<int> outer{0, 1, 3};
        while (std::next_permutation(outer.begin(), outer.end())) {
          std::vector<int> p = identity;
          p[0] = outer[0];
          p[1] = outer[1];
          p[3] = outer[2];
          out.push_back({component_index, p});
        }
      } else {
        std::vector<int> p = identity;
        std::swap(p[0], p[1]);
        out.push_back({component_index, p});
      }
      break;
    case Kind::E:
      if (n == 6) {
        std::vector<int> p = identity;
        std::swap(p[2], p[4]);
        std::swap(p[3], p[5]);
        out.push_back({component_index, p});
      }
      break;
  }
  return out;
}

}  // namespace enriques18
