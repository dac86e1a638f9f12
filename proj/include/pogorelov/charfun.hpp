#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pogorelov/colouring.hpp"
#include "pogorelov/polytope.hpp"

namespace pogorelov {

enum class Ring { z, f2 };

using Vec3 = std::array<std::int64_t, 3>;
/// Row-major 3x3 matrix.
using Mat3 = std::array<Vec3, 3>;

/// Characteristic function: one vector per facet, over Z or over F2
/// (entries 0/1). Validity is checked by validate_charfun.
struct CharFun {
  Ring ring = Ring::z;
  std::vector<Vec3> values;

  int size() const { return static_cast<int>(values.size()); }
  friend bool operator==(const CharFun&, const CharFun&) = default;
};

/// g * lambda(F_i) = signs[i] * lambda'(F_i) for every facet.
struct Transform {
  Mat3 g{};
  std::vector<int> signs;
};

struct CharacteristicPair {
  const Polytope* polytope = nullptr;
  CharFun lambda;
};

/// Raised when a constructed characteristic function fails the basis
/// condition; carries the first offending vertex.
class InvalidCharFun : public std::invalid_argument {
 public:
  InvalidCharFun(VertexId vertex, const std::string& what)
      : std::invalid_argument(what), vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

struct VertexViolation {
  VertexId vertex;
  std::string determinant;  // exact decimal value (reduced mod 2 over F2)
};

struct ValidationReport {
  bool ok = true;
  std::vector<VertexViolation> violations;
};

/// Exact determinant as a decimal string.
std::string determinant(const Vec3& a, const Vec3& b, const Vec3& c);

ValidationReport validate_charfun(const Polytope& p, const CharFun& lambda);

/// lambda(F) = a_i for colour i <= 3 and e1*a1 + e2*a2 + e3*a3 for colour 4.
/// Throws std::invalid_argument when (a1, a2, a3) is not unimodular.
CharFun lambda_from_colouring(const Polytope& p, const Colouring& chi, const Vec3& a1,
                              const Vec3& a2, const Vec3& a3, std::array<int, 3> signs);

/// lambda_from_colouring with the standard basis and all signs +1.
CharFun lambda_chi(const Polytope& p, const Colouring& chi);

/// e_i for colour i <= 3, e1 + e2 + k*e3 for colour 4. Throws InvalidCharFun
/// naming the first vertex whose determinant is not +-1.
CharFun lambda_chi_k(const Polytope& p, const Colouring& chi, std::int64_t k);

CharFun reduce_mod2(const CharFun& lambda);

/// Decides lambda ~ lambda' by solving for g at the first vertex under each
/// sign pattern there and checking the candidate on every facet.
std::optional<Transform> charfuns_equivalent(const Polytope& p, const CharFun& lambda,
                                             const CharFun& lambda2);

/// Exhaustive search over the 168 invertible 3x3 matrices over F2.
std::optional<Transform> charfun_equivalent_f2_oracle(const Polytope& p, const CharFun& lambda,
                                                      const CharFun& lambda2);

/// The invertible 3x3 matrices over F2, in increasing bit-pattern order.
const std::vector<Mat3>& gl3_f2();

/// True iff g * lambda(F_i) = signs[i] * lambda'(F_i) for every facet (mod 2 over F2).
bool verify_transform(const CharFun& lambda, const CharFun& lambda2, const Transform& t);

/// Every F2 characteristic function that is constant on colour classes.
std::vector<CharFun> colouring_defined_charfuns_f2(const Polytope& p, const Colouring& chi);

struct PairMatch {
  FacetBijection phi;
  Transform transform;
};

/// Searches isomorphisms phi: P -> P' for lambda ~ lambda' . phi.
std::optional<PairMatch> pairs_equivalent(const CharacteristicPair& a, const CharacteristicPair& b,
                                          bool include_reflections = true);

/// Text form: ring tag line ("z" or "f2") then one "x y z" line per facet.
std::string to_text(const CharFun& lambda);
CharFun parse_charfun(std::string_view text);

}  // namespace pogorelov
