// Test-only helpers: fixtures, relabelling, and independent oracles.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pogorelov/belts.hpp"
#include "pogorelov/charfun.hpp"
#include "pogorelov/colouring.hpp"
#include "pogorelov/polytope.hpp"

namespace testing {

using namespace pogorelov;

inline std::string fixture_path(const std::string& name) {
  return std::string(POGORELOV_FIXTURE_DIR) + "/" + name + ".txt";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Polytope fixture(const std::string& name) {
  return parse_face_list(read_file(fixture_path(name)));
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names{"tetrahedron", "prism3", "cube",  "prism5", "dodecahedron",
                                              "c24",         "c26",    "c28",   "c60"};
  return names;
}

inline std::vector<std::vector<int>> face_lists(const Polytope& p) {
  std::vector<std::vector<int>> faces;
  for (FacetId f = 0; f < p.facet_count(); ++f) faces.push_back(p.facet_vertices(f));
  return faces;
}

struct Relabelled {
  Polytope polytope;
  FacetBijection rho;  // facet of the original -> facet of the relabelled copy
};

/// Random vertex ids (with gaps), facet order, cycle rotation and, unless
/// `keep_orientation`, cycle direction.
inline Relabelled relabel(const Polytope& p, std::mt19937& rng, bool keep_orientation = false) {
  const int n = p.vertex_count(), m = p.facet_count();
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (auto& x : ids) x = 3 * x + 7;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const bool reverse_all = !keep_orientation && (rng() & 1);
  std::vector<std::vector<int>> faces(m);
  std::vector<FacetId> image(m);
  for (int pos = 0; pos < m; ++pos) {
    const FacetId f = order[pos];
    image[f] = pos;
    auto cyc = p.facet_vertices(f);
    for (auto& v : cyc) v = ids[v];
    std::rotate(cyc.begin(), cyc.begin() + rng() % cyc.size(), cyc.end());
    if (reverse_all) std::reverse(cyc.begin(), cyc.end());
    faces[pos] = cyc;
  }
  return {Polytope::from_faces(faces), FacetBijection(image)};
}

inline Polytope mirror(const Polytope& p) {
  auto faces = face_lists(p);
  for (auto& f : faces) std::reverse(f.begin(), f.end());
  return Polytope::from_faces(faces);
}

inline Polytope prism(int k) {
  std::vector<std::vector<int>> faces;
  std::vector<int> top(k), bottom(k);
  for (int i = 0; i < k; ++i) {
    top[i] = i;
    bottom[k - 1 - i] = k + i;
  }
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < k; ++i) faces.push_back({i, k + i, k + (i + 1) % k, (i + 1) % k});
  return Polytope::from_faces(faces);
}

/// Cuts off vertex v, adding a triangular facet (appended last).
inline Polytope truncate_vertex(const Polytope& p, VertexId v) {
  const int n = p.vertex_count();
  auto cut = [&](VertexId w) {  // new vertex on edge v-w
    const auto& r = p.rotation(v);
    return n + static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
  };
  std::vector<std::vector<int>> faces;
  for (FacetId f = 0; f < p.facet_count(); ++f) {
    const auto cyc = p.facet_vertices(f);
    std::vector<int> out;
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (cyc[i] != v) {
        out.push_back(cyc[i]);
        continue;
      }
      out.push_back(cut(cyc[(i + k - 1) % k]));
      out.push_back(cut(cyc[(i + 1) % k]));
    }
    faces.push_back(out);
  }
  faces.push_back({n, n + 1, n + 2});
  return Polytope::from_faces(faces);
}

// --- chromatic polynomial by deletion-contraction ----------------------

/// P(G, k) for a simple graph on <= 64 vertices given by adjacency masks.
class Chromatic {
 public:
  explicit Chromatic(std::int64_t k) : k_(k) {}

  std::int64_t operator()(std::vector<std::uint64_t> g) {
    if (g.empty()) return 1;
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    const int n = static_cast<int>(g.size());
    // Isolated vertex: factor k. Degree-one vertex: factor k - 1.
    for (int v = 0; v < n; ++v) {
      const int deg = __builtin_popcountll(g[v]);
      if (deg <= 1) {
        const std::int64_t r = (deg == 0 ? k_ : k_ - 1) * (*this)(remove(g, v));
        memo_[g] = r;
        return r;
      }
    }
    int u = 0;
    for (int v = 1; v < n; ++v)
      if (__builtin_popcountll(g[v]) > __builtin_popcountll(g[u])) u = v;
    const int w = __builtin_ctzll(g[u]);
    auto deleted = g;
    deleted[u] &= ~(1ULL << w);
    deleted[w] &= ~(1ULL << u);
    auto merged = deleted;
    merged[u] |= deleted[w];
    for (int x = 0; x < n; ++x)
      if (deleted[w] >> x & 1) merged[x] |= 1ULL << u;
    const std::int64_t r = (*this)(deleted) - (*this)(remove(merged, w));
    memo_[g] = r;
    return r;
  }

  static std::vector<std::uint64_t> remove(const std::vector<std::uint64_t>& g, int v) {
    std::vector<std::uint64_t> out;
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
      if (x == v) continue;
      const std::uint64_t m = g[x];
      const std::uint64_t low = m & ((1ULL << v) - 1);
      const std::uint64_t high = (m >> (v + 1)) << v;
      out.push_back(low | high);
    }
    return out;
  }

 private:
  std::int64_t k_;
  std::map<std::vector<std::uint64_t>, std::int64_t> memo_;
};

inline std::int64_t chromatic_at(const Polytope& p, std::int64_t k) {
  std::vector<std::uint64_t> g(p.facet_count(), 0);
  for (FacetId f = 0; f < p.facet_count(); ++f)
    for (FacetId h : p.facet_neighbours()[f]) g[f] |= 1ULL << h;
  return Chromatic(k)(g);
}

// --- naive belt oracle ---------------------------------------------------

inline bool belt_predicate(const Polytope& p, const std::vector<FacetId>& c) {
  const int k = static_cast<int>(c.size());
  std::set<std::array<FacetId, 3>> triples(p.vertex_triples().begin(), p.vertex_triples().end());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (p.adjacent(c[i], c[j]) != consecutive) return false;
      for (int l = j + 1; l < k; ++l) {
        std::array<FacetId, 3> t{c[i], c[j], c[l]};
        std::sort(t.begin(), t.end());
        if (triples.count(t)) return false;
      }
    }
  return true;
}

/// Every k-subset in every cyclic order, reduced to canonical rotation.
inline std::vector<std::vector<FacetId>> naive_belts(const Polytope& p, int k) {
  std::set<std::vector<FacetId>> found;
  const int m = p.facet_count();
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<FacetId> subset;
    for (int i = 0; i < m; ++i)
      if (pick[i]) subset.push_back(i);
    std::vector<FacetId> perm(subset.begin() + 1, subset.end());
    do {
      std::vector<FacetId> cyc{subset[0]};
      cyc.insert(cyc.end(), perm.begin(), perm.end());
      if (cyc[1] < cyc.back() && belt_predicate(p, cyc)) found.insert(cyc);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

// --- random lattice data -------------------------------------------------

/// Random element of GL3(Z): product of elementary operations and sign flips.
inline Mat3 random_unimodular(std::mt19937& rng, int steps = 6) {
  Mat3 g{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  std::uniform_int_distribution<int> row(0, 2), mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const int a = row(rng), b = row(rng);
    if (a == b) {
      for (auto& x : g[a]) x = -x;
      continue;
    }
    const int c = mult(rng);
    for (int j = 0; j < 3; ++j) g[a][j] += c * g[b][j];
  }
  return g;
}

inline Colouring random_colouring(const std::vector<Colouring>& all, std::mt19937& rng) {
  return all[rng() % all.size()];
}

}  // namespace testing
