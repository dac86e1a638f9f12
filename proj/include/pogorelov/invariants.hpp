#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pogorelov/belts.hpp"
#include "pogorelov/charfun.hpp"
#include "pogorelov/colouring.hpp"
#include "pogorelov/polytope.hpp"

namespace pogorelov {

struct OrientabilityVerdict {
  bool orientable = false;
  /// Linear functional F2^3 -> F2 as a coefficient vector with phi(lambda(F)) = 1
  /// on every facet; present iff orientable.
  std::optional<Vec3> witness;
};

/// Scans the seven nonzero functionals for one that is 1 on every facet vector.
OrientabilityVerdict is_orientable_small_cover(const Polytope& p, const CharFun& lambda_f2);

enum class ManifoldKind { small_cover, quasitoric };

/// Z2 Betti numbers from the h-vector of the dual sphere; length 4 for small
/// covers (degrees 0..3) and 7 for quasitoric manifolds (degrees 0..6).
std::vector<std::int64_t> betti_z2(const Polytope& p, ManifoldKind kind);

/// h-vector (h0, h1, h2, h3) of the boundary of the dual simplicial polytope.
std::array<std::int64_t, 4> h_vector(const Polytope& p);

struct CensusEntry {
  CanonicalCode code;
  int multiplicity = 0;  // number of inputs of this combinatorial type
  int facet_count = 0;
  int vertex_count = 0;
  PogorelovVerdict verdict;
  std::uint64_t automorphisms = 0;
  std::uint64_t colourings = 0;
  std::uint64_t classes_s4 = 0;
  std::uint64_t classes_s4_x_aut = 0;
  std::uint64_t complete_colourings = 0;
  std::uint64_t complete_classes_s4 = 0;
  /// Colourings whose small cover M(P, lambda_chi) is orientable.
  std::uint64_t orientable_colourings = 0;
};

struct Census {
  CodeMode mode = CodeMode::s4;
  std::vector<CensusEntry> types;  // sorted by canonical code

  /// Headline class count for an entry under the census mode.
  std::uint64_t classes(const CensusEntry& e) const {
    return mode == CodeMode::s4 ? e.classes_s4 : e.classes_s4_x_aut;
  }
};

/// Groups inputs by combinatorial type and counts colouring classes per type.
/// Types run concurrently; the result does not depend on input order.
Census classify(std::span<const Polytope> polytopes, CodeMode mode);

std::string census_text(const Census& census);
std::string census_kv(const Census& census);

}  // namespace pogorelov
