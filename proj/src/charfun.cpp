#include "pogorelov/charfun.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace pogorelov {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigVec = std::array<Big, 3>;
using BigMat = std::array<BigVec, 3>;  // row-major

BigVec big(const Vec3& v) { return {Big(v[0]), Big(v[1]), Big(v[2])}; }

Big det3(const BigVec& a, const BigVec& b, const BigVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Big mod2(const Big& x) {
  Big r = x % 2;
  return r < 0 ? Big(-r) : r;
}

BigVec mul(const BigMat& g, const BigVec& v) {
  BigVec out;
  for (int i = 0; i < 3; ++i) out[i] = g[i][0] * v[0] + g[i][1] * v[1] + g[i][2] * v[2];
  return out;
}

bool vertex_ok(Ring ring, const Big& d) { return ring == Ring::z ? abs(d) == 1 : mod2(d) == 1; }

void require_same_shape(const Polytope& p, const CharFun& a, const CharFun& b) {
  if (a.ring != b.ring) throw std::invalid_argument("characteristic functions over different rings");
  if (a.size() != p.facet_count() || b.size() != p.facet_count())
    throw std::invalid_argument("characteristic function does not match the polytope");
}

Vec3 to_vec3(const BigVec& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    if (v[i] > std::numeric_limits<std::int64_t>::max() ||
        v[i] < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("transform entry exceeds 64-bit range");
    out[i] = static_cast<std::int64_t>(v[i]);
  }
  return out;
}

// Checks g * lambda(F) = s_F * lambda'(F) for some sign s_F on every facet.
std::optional<std::vector<int>> facet_signs(Ring ring, const BigMat& g, const CharFun& lambda,
                                            const CharFun& lambda2) {
  std::vector<int> signs(lambda.size(), 1);
  for (int f = 0; f < lambda.size(); ++f) {
    const BigVec image = mul(g, big(lambda.values[f]));
    const BigVec target = big(lambda2.values[f]);
    if (ring == Ring::f2) {
      for (int i = 0; i < 3; ++i)
        if (mod2(image[i]) != mod2(target[i])) return std::nullopt;
      continue;
    }
    if (image == target) continue;
    if (image == BigVec{-target[0], -target[1], -target[2]}) {
      signs[f] = -1;
      continue;
    }
    return std::nullopt;
  }
  return signs;
}

}  // namespace

std::string determinant(const Vec3& a, const Vec3& b, const Vec3& c) {
  return det3(big(a), big(b), big(c)).str();
}

ValidationReport validate_charfun(const Polytope& p, const CharFun& lambda) {
  if (lambda.size() != p.facet_count())
    throw std::invalid_argument("characteristic function has " + std::to_string(lambda.size()) +
                                " values for " + std::to_string(p.facet_count()) + " facets");
  ValidationReport report;
  const auto& triples = p.vertex_triples();
  for (VertexId v = 0; v < static_cast<VertexId>(triples.size()); ++v) {
    const auto& t = triples[v];
    Big d = det3(big(lambda.values[t[0]]), big(lambda.values[t[1]]), big(lambda.values[t[2]]));
    if (lambda.ring == Ring::f2) d = mod2(d);
    if (!vertex_ok(lambda.ring, d)) report.violations.push_back({v, d.str()});
  }
  report.ok = report.violations.empty();
  return report;
}

namespace {

void require_valid(const Polytope& p, const CharFun& lambda) {
  const auto report = validate_charfun(p, lambda);
  if (!report.ok) {
    const auto& v = report.violations.front();
    const auto& t = p.vertex_triples()[v.vertex];
    throw InvalidCharFun(v.vertex, "not a basis at vertex " + std::to_string(v.vertex) +
                                       " (facets " + std::to_string(t[0]) + "," +
                                       std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                       "; determinant " + v.determinant + ")");
  }
}

}  // namespace

CharFun lambda_from_colouring(const Polytope& p, const Colouring& chi, const Vec3& a1,
                              const Vec3& a2, const Vec3& a3, std::array<int, 3> signs) {
  if (!is_proper(p, chi)) throw std::invalid_argument("colouring is not proper");
  if (abs(det3(big(a1), big(a2), big(a3))) != 1)
    throw std::invalid_argument("(a1, a2, a3) is not a basis of Z^3");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  BigVec fourth;
  const BigVec b1 = big(a1), b2 = big(a2), b3 = big(a3);
  for (int i = 0; i < 3; ++i) fourth[i] = signs[0] * b1[i] + signs[1] * b2[i] + signs[2] * b3[i];
  const std::array<Vec3, 4> by_colour{a1, a2, a3, to_vec3(fourth)};
  CharFun out;
  out.ring = Ring::z;
  out.values.reserve(chi.size());
  for (int f = 0; f < chi.size(); ++f) out.values.push_back(by_colour[chi[f] - 1]);
  require_valid(p, out);
  return out;
}

CharFun lambda_chi(const Polytope& p, const Colouring& chi) {
  return lambda_from_colouring(p, chi, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1});
}

CharFun lambda_chi_k(const Polytope& p, const Colouring& chi, std::int64_t k) {
  if (!is_proper(p, chi)) throw std::invalid_argument("colouring is not proper");
  const std::array<Vec3, 4> by_colour{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{1, 1, k}};
  CharFun out;
  out.ring = Ring::z;
  for (int f = 0; f < chi.size(); ++f) out.values.push_back(by_colour[chi[f] - 1]);
  require_valid(p, out);
  return out;
}

CharFun reduce_mod2(const CharFun& lambda) {
  CharFun out{Ring::f2, lambda.values};
  for (auto& v : out.values)
    for (auto& x : v) x = ((x % 2) + 2) % 2;
  return out;
}

std::optional<Transform> charfuns_equivalent(const Polytope& p, const CharFun& lambda,
                                             const CharFun& lambda2) {
  require_same_shape(p, lambda, lambda2);
  const auto& t = p.vertex_triples().front();
  // Columns of the pinned-vertex bases.
  std::array<BigVec, 3> from, to;
  for (int j = 0; j < 3; ++j) {
    from[j] = big(lambda.values[t[j]]);
    to[j] = big(lambda2.values[t[j]]);
  }
  const Big d = det3(from[0], from[1], from[2]);
  if (!vertex_ok(lambda.ring, d) || !vertex_ok(lambda.ring, det3(to[0], to[1], to[2])))
    throw std::invalid_argument("characteristic function is not a basis at the first vertex");
  // inverse(L) = adj(L) / det(L); det(L) = +-1 over Z, 1 over F2.
  BigMat inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      // Cofactor C(c, r) of L where L[i][j] = from[j][i].
      int rows[2], cols[2], ri = 0, ci = 0;
      for (int i = 0; i < 3; ++i)
        if (i != c) rows[ri++] = i;
      for (int j = 0; j < 3; ++j)
        if (j != r) cols[ci++] = j;
      Big minor = from[cols[0]][rows[0]] * from[cols[1]][rows[1]] -
                  from[cols[1]][rows[0]] * from[cols[0]][rows[1]];
      if ((r + c) % 2) minor = -minor;
      inv[r][c] = lambda.ring == Ring::z ? Big(minor * d) : minor;
    }
  const int patterns = lambda.ring == Ring::z ? 8 : 1;
  for (int mask = 0; mask < patterns; ++mask) {
    BigMat g;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Big s = 0;
        for (int j = 0; j < 3; ++j) {
          const int sign = (mask >> j) & 1 ? -1 : 1;
          s += sign * to[j][r] * inv[j][c];
        }
        g[r][c] = lambda.ring == Ring::z ? s : mod2(s);
      }
    if (auto signs = facet_signs(lambda.ring, g, lambda, lambda2)) {
      Transform out;
      for (int r = 0; r < 3; ++r) out.g[r] = to_vec3(g[r]);
      out.signs = std::move(*signs);
      return out;
    }
  }
  return std::nullopt;
}

const std::vector<Mat3>& gl3_f2() {
  static const std::vector<Mat3> group = [] {
    std::vector<Mat3> out;
    for (int bits = 0; bits < 512; ++bits) {
      Mat3 g{};
      for (int i = 0; i < 9; ++i) g[i / 3][i % 3] = (bits >> i) & 1;
      if (mod2(det3(big(g[0]), big(g[1]), big(g[2]))) == 1) out.push_back(g);
    }
    return out;
  }();
  return group;
}

std::optional<Transform> charfun_equivalent_f2_oracle(const Polytope& p, const CharFun& lambda,
                                                      const CharFun& lambda2) {
  require_same_shape(p, lambda, lambda2);
  if (lambda.ring != Ring::f2) throw std::invalid_argument("oracle works over F2 only");
  for (const auto& g : gl3_f2()) {
    Transform t{g, std::vector<int>(lambda.size(), 1)};
    if (verify_transform(lambda, lambda2, t)) return t;
  }
  return std::nullopt;
}

bool verify_transform(const CharFun& lambda, const CharFun& lambda2, const Transform& t) {
  if (lambda.ring != lambda2.ring || lambda.size() != lambda2.size() ||
      static_cast<int>(t.signs.size()) != lambda.size())
    return false;
  BigMat g;
  for (int r = 0; r < 3; ++r) g[r] = big(t.g[r]);
  for (int f = 0; f < lambda.size(); ++f) {
    const BigVec image = mul(g, big(lambda.values[f]));
    const BigVec target = big(lambda2.values[f]);
    for (int i = 0; i < 3; ++i) {
      const Big want = t.signs[f] * target[i];
      if (lambda.ring == Ring::f2 ? mod2(image[i] - want) != 0 : image[i] != want) return false;
    }
  }
  return true;
}

std::vector<CharFun> colouring_defined_charfuns_f2(const Polytope& p, const Colouring& chi) {
  if (!is_proper(p, chi)) throw std::invalid_argument("colouring is not proper");
  // Colour triples (as colour indices 0..3) that occur at vertices.
  std::set<std::array<int, 3>> triples;
  for (const auto& t : p.vertex_triples())
    triples.insert({chi[t[0]] - 1, chi[t[1]] - 1, chi[t[2]] - 1});
  auto as_vec = [](int mask) { return Vec3{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}; };
  std::vector<CharFun> out;
  std::set<std::vector<Vec3>> seen;
  std::array<int, 4> m{};
  for (m[0] = 1; m[0] < 8; ++m[0])
    for (m[1] = 1; m[1] < 8; ++m[1])
      for (m[2] = 1; m[2] < 8; ++m[2])
        for (m[3] = 1; m[3] < 8; ++m[3]) {
          bool ok = true;
          for (const auto& t : triples) {
            const int a = m[t[0]], b = m[t[1]], c = m[t[2]];
            if (a == b || b == c || a == c || (a ^ b) == c) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          CharFun lambda{Ring::f2, {}};
          for (int f = 0; f < chi.size(); ++f) lambda.values.push_back(as_vec(m[chi[f] - 1]));
          if (seen.insert(lambda.values).second) out.push_back(std::move(lambda));
        }
  return out;
}

std::optional<PairMatch> pairs_equivalent(const CharacteristicPair& a, const CharacteristicPair& b,
                                          bool include_reflections) {
  if (a.lambda.ring != b.lambda.ring)
    throw std::invalid_argument("characteristic pairs over different rings");
  for (auto& phi : isomorphisms(*a.polytope, *b.polytope, include_reflections)) {
    CharFun pulled{b.lambda.ring, {}};
    pulled.values.reserve(phi.size());
    for (FacetId f = 0; f < phi.size(); ++f) pulled.values.push_back(b.lambda.values[phi(f)]);
    if (auto t = charfuns_equivalent(*a.polytope, a.lambda, pulled))
      return PairMatch{std::move(phi), std::move(*t)};
  }
  return std::nullopt;
}

std::string to_text(const CharFun& lambda) {
  std::ostringstream os;
  os << (lambda.ring == Ring::z ? "z" : "f2") << '\n';
  for (const auto& v : lambda.values) os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  return os.str();
}

CharFun parse_charfun(std::string_view text) {
  CharFun out;
  bool have_ring = false;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!have_ring) {
      if (toks.size() != 1 || (toks[0] != "z" && toks[0] != "f2"))
        throw FormatError("characteristic function must start with a ring tag (z or f2)");
      out.ring = toks[0] == "z" ? Ring::z : Ring::f2;
      have_ring = true;
      continue;
    }
    if (toks.size() != 3) throw FormatError("expected 3 coordinates per facet line");
    Vec3 v{};
    for (int i = 0; i < 3; ++i) {
      const auto& s = toks[i];
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v[i]);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw FormatError("bad coordinate '" + s + "'");
      if (out.ring == Ring::f2 && v[i] != 0 && v[i] != 1)
        throw FormatError("F2 coordinates must be 0 or 1");
    }
    out.values.push_back(v);
  }
  if (!have_ring) throw FormatError("empty characteristic function");
  return out;
}

}  // namespace pogorelov
