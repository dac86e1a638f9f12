#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pogorelov {

using Dart = int;
using FacetId = int;
using VertexId = int;

/// Raised when an input stream is not well-formed in its declared format.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when well-formed input does not describe a simple 3-polytope.
class InvalidPolytope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { planar_code, face_list };

/// Combinatorial simple 3-polytope stored as a cubic combinatorial map.
///
/// Dart `3*v + i` leaves vertex `v` towards `rotation(v)[i]`; the rotation
/// at each vertex is the cyclic order of its three neighbours. Facets are the
/// orbits of `next_in_facet = next_around_vertex . reverse`. Facet adjacency
/// and vertex triples are derived on construction and the object is immutable
/// afterwards.
class Polytope {
 public:
  /// Builds from a rotation system; facets are indexed by their
  /// lexicographically smallest (tail, head) dart.
  static Polytope from_rotation(std::vector<std::array<VertexId, 3>> rotation);

  /// Builds from facet boundary cycles. Facet `i` of the result is `faces[i]`;
  /// cycles may be given in either orientation. Vertex ids need not be
  /// contiguous; they are compacted in increasing order.
  static Polytope from_faces(const std::vector<std::vector<int>>& faces);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int dart_count() const { return 3 * vertex_count(); }
  int edge_count() const { return dart_count() / 2; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  const std::array<VertexId, 3>& rotation(VertexId v) const { return rotation_[v]; }
  VertexId tail(Dart d) const { return d / 3; }
  VertexId head(Dart d) const { return rotation_[d / 3][d % 3]; }
  Dart reverse(Dart d) const { return reverse_[d]; }
  Dart next_around_vertex(Dart d) const { return 3 * (d / 3) + (d % 3 + 1) % 3; }
  Dart prev_around_vertex(Dart d) const { return 3 * (d / 3) + (d % 3 + 2) % 3; }
  Dart next_in_facet(Dart d) const { return next_around_vertex(reverse_[d]); }
  FacetId facet_of(Dart d) const { return facet_of_[d]; }

  std::span<const Dart> facet_darts(FacetId f) const { return facets_[f]; }
  int facet_size(FacetId f) const { return static_cast<int>(facets_[f].size()); }
  /// Boundary vertices of `f` in traversal order.
  std::vector<VertexId> facet_vertices(FacetId f) const;

  /// Sorted facet triple meeting at each vertex, indexed by vertex.
  const std::vector<std::array<FacetId, 3>>& vertex_triples() const { return triples_; }
  const std::vector<std::vector<FacetId>>& facet_neighbours() const { return neighbours_; }
  bool adjacent(FacetId a, FacetId b) const {
    return adjacency_[static_cast<std::size_t>(a) * facets_.size() + b] != 0;
  }

  /// Same labelled map and same facet indexing.
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.rotation_ == b.rotation_ && a.facets_ == b.facets_;
  }

 private:
  Polytope() = default;
  void build(const std::vector<Dart>* facet_starts);

  std::vector<std::array<VertexId, 3>> rotation_;
  std::vector<Dart> reverse_;
  std::vector<std::vector<Dart>> facets_;
  std::vector<FacetId> facet_of_;
  std::vector<std::array<FacetId, 3>> triples_;
  std::vector<std::vector<FacetId>> neighbours_;
  std::vector<std::uint8_t> adjacency_;
};

/// Lexicographic-minimum breadth-first encoding of a rooted map.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  bool reflections_quotiented = true;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

/// Map from facet indices of one polytope to those of another.
class FacetBijection {
 public:
  FacetBijection() = default;
  explicit FacetBijection(std::vector<FacetId> image) : image_(std::move(image)) {}
  static FacetBijection identity(int m);

  FacetId operator()(FacetId f) const { return image_[f]; }
  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<FacetId>& image() const { return image_; }

  FacetBijection inverse() const;
  /// (this . other)(f) = this(other(f)).
  FacetBijection after(const FacetBijection& other) const;

  friend bool operator==(const FacetBijection&, const FacetBijection&) = default;
  friend auto operator<=>(const FacetBijection&, const FacetBijection&) = default;

 private:
  std::vector<FacetId> image_;
};

CanonicalCode canonical_code(const Polytope& p, bool include_reflections = true);
// The polytope whose rotation system is spelled out by `code`.
Polytope from_canonical_code(const CanonicalCode& code);

/// All face-lattice isomorphisms `p -> q`; with p == q this is Aut(p).
std::vector<FacetBijection> isomorphisms(const Polytope& p, const Polytope& q,
                                         bool include_reflections = true);

/// True iff the bijection maps adjacent facets to adjacent facets and vertex
/// triples to vertex triples.
bool preserves_face_lattice(const Polytope& p, const Polytope& q, const FacetBijection& phi);

// --- serialization -------------------------------------------------------

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Parses every graph of a planar_code stream (header included).
std::vector<Polytope> parse_planar_code(std::span<const std::uint8_t> bytes);
/// Parses a face_list text document.
Polytope parse_face_list(std::string_view text);
/// Format is planar_code when the stream starts with the planar_code header.
Format detect_format(std::span<const std::uint8_t> bytes);
/// Parses a stream in the given format; face_list streams hold one polytope.
std::vector<Polytope> load_polytopes(std::span<const std::uint8_t> bytes, Format format);
Polytope load_polytope(std::span<const std::uint8_t> bytes, Format format);

/// Serializes with header; vertex counts above 255 are rejected.
std::vector<std::uint8_t> to_planar_code(std::span<const Polytope> polytopes);
std::string to_face_list(const Polytope& p);

}  // namespace pogorelov
