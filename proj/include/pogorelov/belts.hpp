#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pogorelov/polytope.hpp"

namespace pogorelov {

/// Cyclic sequence of facets: cyclically consecutive members are adjacent,
/// other pairs are not, and no three members share a vertex. Stored with the
/// smallest facet first and the smaller of its two neighbours second.
struct Belt {
  std::vector<FacetId> facets;

  int size() const { return static_cast<int>(facets.size()); }
  friend bool operator==(const Belt&, const Belt&) = default;
  friend auto operator<=>(const Belt&, const Belt&) = default;
};

struct TetrahedronWitness {
  friend bool operator==(const TetrahedronWitness&, const TetrahedronWitness&) = default;
};

struct PogorelovVerdict {
  bool pogorelov = false;
  /// Empty exactly when `pogorelov` holds.
  std::variant<std::monostate, TetrahedronWitness, Belt> witness;
};

/// All k-belts of `p`, canonically rotated and sorted. Throws
/// std::invalid_argument for k < 3.
std::vector<Belt> find_belts(const Polytope& p, int k);

/// Checks every belt condition directly, including canonical rotation.
bool is_belt(const Polytope& p, const Belt& belt);

PogorelovVerdict is_pogorelov(const Polytope& p);

struct FullereneStatus {
  bool fullerene = false;
  bool ipr = false;
  int adjacent_pentagon_pairs = 0;
};

FullereneStatus fullerene_status(const Polytope& p);

}  // namespace pogorelov
