#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pogorelov/polytope.hpp"

namespace pogorelov {

using Colour = std::uint8_t;  // 1..4

/// Facet colouring, one colour in 1..4 per facet index.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  Colour operator[](FacetId f) const { return colours_[f]; }
  Colour& operator[](FacetId f) { return colours_[f]; }
  int size() const { return static_cast<int>(colours_.size()); }
  const std::vector<Colour>& colours() const { return colours_; }

  /// "1,2,3,..." in facet-index order.
  std::string to_string() const;
  /// Throws std::invalid_argument on anything but comma-separated digits 1..4.
  static Colouring parse(std::string_view line);

  friend bool operator==(const Colouring&, const Colouring&) = default;
  friend auto operator<=>(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// Permutation of {1,2,3,4}.
class ColourPermutation {
 public:
  ColourPermutation() : image_{1, 2, 3, 4} {}
  explicit ColourPermutation(std::array<Colour, 4> image);

  Colour operator()(Colour c) const { return image_[c - 1]; }
  const std::array<Colour, 4>& image() const { return image_; }
  ColourPermutation inverse() const;
  /// All 24 permutations in lexicographic order.
  static std::vector<ColourPermutation> all();

  friend bool operator==(const ColourPermutation&, const ColourPermutation&) = default;

 private:
  std::array<Colour, 4> image_;
};

Colouring apply(const ColourPermutation& sigma, const Colouring& chi);
/// chi . phi, i.e. the colouring of p pulled back along phi: p -> q.
Colouring pull_back(const Colouring& chi_on_q, const FacetBijection& phi);

bool is_proper(const Polytope& p, const Colouring& chi);

/// Visits every proper 4-colouring in deterministic order (facets in index
/// order, colours ascending). The visitor returns false to stop early.
/// Returns the number of colourings visited.
std::uint64_t for_each_colouring(const Polytope& p,
                                 const std::function<bool(const Colouring&)>& visit);
std::vector<Colouring> enumerate_colourings(const Polytope& p);
std::uint64_t count_colourings(const Polytope& p);

using ColourTriple = std::array<Colour, 3>;

/// First proper colouring (in enumeration order) in which no vertex carries
/// the colour set `avoid`.
std::optional<Colouring> find_colouring_avoiding(const Polytope& p, ColourTriple avoid);

enum class EquivalenceMode { strict_s4, up_to_iso };

struct ColouringMatch {
  FacetBijection phi;
  ColourPermutation sigma;
};

/// Finds (phi, sigma) with chi2(phi(F)) = sigma(chi1(F)). strict_s4 requires
/// p == q (std::invalid_argument otherwise) and only tries phi = id.
std::optional<ColouringMatch> colourings_equivalent(const Polytope& p, const Colouring& chi1,
                                                    const Polytope& q, const Colouring& chi2,
                                                    EquivalenceMode mode,
                                                    bool include_reflections = true);

enum class CodeMode { s4, s4_x_aut };

/// Orbit representative code. `automorphisms` is only consulted in
/// s4_x_aut mode; pass the result of isomorphisms(p, p) to avoid recomputing it.
CanonicalCode canonical_colouring_code(const Polytope& p, const Colouring& chi, CodeMode mode,
                                       const std::vector<FacetBijection>* automorphisms = nullptr);

/// Colours relabelled in order of first appearance; the lexicographic
/// minimum of the S4-orbit.
Colouring normalize_s4(const Colouring& chi);

struct Completeness {
  bool complete = false;
  std::vector<ColourTriple> missing;  // ascending triples
};

Completeness is_complete(const Polytope& p, const Colouring& chi);

}  // namespace pogorelov
