#include "pogorelov/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace pogorelov {

namespace {

bool connected_without(const std::vector<std::array<VertexId, 3>>& rotation, VertexId skip_a,
                       VertexId skip_b) {
  const int n = static_cast<int>(rotation.size());
  std::vector<char> seen(n, 0);
  if (skip_a >= 0) seen[skip_a] = 1;
  if (skip_b >= 0) seen[skip_b] = 1;
  VertexId start = 0;
  while (start < n && seen[start]) ++start;
  if (start == n) return true;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : rotation[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  const int removed = (skip_a >= 0) + (skip_b >= 0);
  return reached == n - removed;
}

}  // namespace

Polytope Polytope::from_rotation(std::vector<std::array<VertexId, 3>> rotation) {
  Polytope p;
  p.rotation_ = std::move(rotation);
  p.build(nullptr);
  return p;
}

void Polytope::build(const std::vector<Dart>* facet_starts) {
  const int n = vertex_count();
  if (n < 4) throw InvalidPolytope("a simple 3-polytope needs at least 4 vertices");
  for (VertexId v = 0; v < n; ++v) {
    const auto& r = rotation_[v];
    for (int i = 0; i < 3; ++i) {
      if (r[i] < 0 || r[i] >= n) throw InvalidPolytope("neighbour index out of range");
      if (r[i] == v) throw InvalidPolytope("loop at vertex " + std::to_string(v));
    }
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
      throw InvalidPolytope("multiple edge at vertex " + std::to_string(v));
  }

  reverse_.assign(dart_count(), -1);
  for (Dart d = 0; d < dart_count(); ++d) {
    const VertexId w = head(d);
    const auto& r = rotation_[w];
    const auto it = std::find(r.begin(), r.end(), tail(d));
    if (it == r.end())
      throw InvalidPolytope("edge " + std::to_string(tail(d)) + "-" + std::to_string(w) +
                            " is not symmetric");
    reverse_[d] = 3 * w + static_cast<int>(it - r.begin());
  }

  if (!connected_without(rotation_, -1, -1)) throw InvalidPolytope("skeleton is not connected");
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (!connected_without(rotation_, a, b))
        throw InvalidPolytope("skeleton is not 3-connected (separating pair " +
                              std::to_string(a) + ", " + std::to_string(b) + ")");

  facet_of_.assign(dart_count(), -1);
  facets_.clear();
  auto trace = [&](Dart start) {
    std::vector<Dart> cycle;
    Dart d = start;
    do {
      if (facet_of_[d] != -1) throw InvalidPolytope("inconsistent facet tracing");
      facet_of_[d] = static_cast<FacetId>(facets_.size());
      cycle.push_back(d);
      d = next_in_facet(d);
    } while (d != start);
    facets_.push_back(std::move(cycle));
  };
  if (facet_starts != nullptr) {
    for (Dart s : *facet_starts) trace(s);
    if (std::find(facet_of_.begin(), facet_of_.end(), -1) != facet_of_.end())
      throw InvalidPolytope("facets do not cover every edge twice");
  } else {
    // Darts in (tail, head) order; the first dart of each untraced facet
    // seen in that order is its minimal dart.
    std::vector<Dart> order(dart_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Dart x, Dart y) {
      return std::pair(tail(x), head(x)) < std::pair(tail(y), head(y));
    });
    for (Dart d : order)
      if (facet_of_[d] == -1) trace(d);
  }

  const int m = facet_count();
  if (n - edge_count() + m != 2)
    throw InvalidPolytope("rotation system is not planar (Euler characteristic " +
                          std::to_string(n - edge_count() + m) + ")");

  adjacency_.assign(static_cast<std::size_t>(m) * m, 0);
  neighbours_.assign(m, {});
  for (FacetId f = 0; f < m; ++f) {
    if (facets_[f].size() < 3) throw InvalidPolytope("facet with fewer than 3 edges");
    std::vector<VertexId> verts;
    for (Dart d : facets_[f]) verts.push_back(tail(d));
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw InvalidPolytope("facet " + std::to_string(f) + " is not a simple cycle");
    for (Dart d : facets_[f]) {
      const FacetId g = facet_of_[reverse_[d]];
      if (g == f) throw InvalidPolytope("edge lies twice on facet " + std::to_string(f));
      auto& cell = adjacency_[static_cast<std::size_t>(f) * m + g];
      if (cell) throw InvalidPolytope("facets " + std::to_string(f) + " and " +
                                      std::to_string(g) + " share more than one edge");
      cell = 1;
      neighbours_[f].push_back(g);
    }
    std::sort(neighbours_[f].begin(), neighbours_[f].end());
  }

  triples_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::array<FacetId, 3> t{facet_of_[3 * v], facet_of_[3 * v + 1], facet_of_[3 * v + 2]};
    std::sort(t.begin(), t.end());
    triples_[v] = t;
  }
}

Polytope Polytope::from_faces(const std::vector<std::vector<int>>& faces) {
  if (faces.empty()) throw InvalidPolytope("no facets");
  std::vector<int> ids;
  for (const auto& f : faces) {
    if (f.size() < 3) throw InvalidPolytope("facet with fewer than 3 vertices");
    for (int v : f) {
      if (v < 0) throw InvalidPolytope("negative vertex id");
      ids.push_back(v);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto compact = [&](int v) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  const int m = static_cast<int>(faces.size());
  std::vector<std::vector<VertexId>> cyc(m);
  for (int i = 0; i < m; ++i) {
    for (int v : faces[i]) cyc[i].push_back(compact(v));
    auto sorted = cyc[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidPolytope("facet " + std::to_string(i) + " repeats a vertex");
  }

  // Each undirected edge must lie on exactly two facets.
  struct Side {
    int face;
    bool forward;  // face lists the edge as (min, max)
  };
  std::map<std::pair<VertexId, VertexId>, std::vector<Side>> edges;
  for (int i = 0; i < m; ++i) {
    const auto& c = cyc[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      const VertexId a = c[j], b = c[(j + 1) % c.size()];
      edges[{std::min(a, b), std::max(a, b)}].push_back({i, a < b});
    }
  }
  for (const auto& [e, sides] : edges)
    if (sides.size() != 2)
      throw InvalidPolytope("edge " + std::to_string(ids[e.first]) + "-" +
                            std::to_string(ids[e.second]) + " lies on " +
                            std::to_string(sides.size()) + " facets");

  // Orient facets coherently, keeping facet 0 as given.
  std::vector<int> flip(m, -1);
  flip[0] = 0;
  std::deque<int> queue{0};
  std::vector<std::vector<std::pair<int, bool>>> across(m);  // (other face, same raw direction)
  for (const auto& [e, sides] : edges) {
    const bool same = sides[0].forward == sides[1].forward;
    across[sides[0].face].push_back({sides[1].face, same});
    across[sides[1].face].push_back({sides[0].face, same});
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (auto [g, same] : across[f]) {
      const int want = same ? 1 - flip[f] : flip[f];
      if (flip[g] == -1) {
        flip[g] = want;
        queue.push_back(g);
      } else if (flip[g] != want) {
        throw InvalidPolytope("facet cycles cannot be oriented coherently");
      }
    }
  }
  if (std::find(flip.begin(), flip.end(), -1) != flip.end())
    throw InvalidPolytope("facets do not form a connected surface");

  const int n = static_cast<int>(ids.size());
  // succ[v] maps the neighbour preceding v on a facet to the one following it.
  std::vector<std::vector<std::pair<VertexId, VertexId>>> succ(n);
  std::vector<std::pair<VertexId, VertexId>> first_edge(m);
  for (int i = 0; i < m; ++i) {
    auto c = cyc[i];
    const std::size_t k = c.size();
    if (flip[i]) {
      std::reverse(c.begin(), c.end());
      std::rotate(c.begin(), c.end() - 1, c.end());  // keep the file's first vertex first
    }
    first_edge[i] = {c[0], c[1]};
    for (std::size_t j = 0; j < k; ++j) {
      const VertexId u = c[(j + k - 1) % k], v = c[j], w = c[(j + 1) % k];
      succ[v].push_back({u, w});
    }
  }
  std::vector<std::array<VertexId, 3>> rotation(n);
  for (VertexId v = 0; v < n; ++v) {
    if (succ[v].size() != 3)
      throw InvalidPolytope("vertex " + std::to_string(ids[v]) + " lies on " +
                            std::to_string(succ[v].size()) + " facets, expected 3");
    auto next = [&](VertexId u) {
      for (auto [a, b] : succ[v])
        if (a == u) return b;
      throw InvalidPolytope("vertex " + std::to_string(ids[v]) + " has degree other than 3");
    };
    const VertexId a = succ[v][0].first;
    const VertexId b = next(a);
    const VertexId c = next(b);
    if (next(c) != a || a == b || b == c || a == c)
      throw InvalidPolytope("facets around vertex " + std::to_string(ids[v]) +
                            " do not close up");
    rotation[v] = {a, b, c};
  }

  Polytope p;
  p.rotation_ = std::move(rotation);
  std::vector<Dart> starts;
  starts.reserve(m);
  for (const auto& [u, v] : first_edge) {
    const auto& r = p.rotation_[u];
    const auto it = std::find(r.begin(), r.end(), v);
    starts.push_back(3 * u + static_cast<int>(it - r.begin()));
  }
  p.build(&starts);
  return p;
}

std::vector<VertexId> Polytope::facet_vertices(FacetId f) const {
  std::vector<VertexId> out;
  out.reserve(facets_[f].size());
  for (Dart d : facets_[f]) out.push_back(tail(d));
  return out;
}

// --- canonical form ----------------------------------------------------

namespace {

// Breadth-first code of the map rooted at `root`; the rotation is read in
// reverse when `mirrored`. Returns false as soon as the code exceeds `best`.
bool encode(const Polytope& p, Dart root, bool mirrored, std::vector<std::uint16_t>& code,
            const std::vector<std::uint16_t>* best) {
  const int n = p.vertex_count();
  std::vector<int> label(n, 0);
  std::vector<Dart> start(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  code.clear();
  label[p.tail(root)] = 1;
  start[p.tail(root)] = root;
  order.push_back(p.tail(root));
  bool tied = best != nullptr;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const VertexId v = order[qi];
    Dart d = start[v];
    for (int i = 0; i < 3; ++i) {
      const VertexId w = p.head(d);
      if (label[w] == 0) {
        label[w] = static_cast<int>(order.size()) + 1;
        start[w] = p.reverse(d);
        order.push_back(w);
      }
      const auto entry = static_cast<std::uint16_t>(label[w]);
      if (tied) {
        const auto theirs = (*best)[code.size()];
        if (entry > theirs) return false;
        if (entry < theirs) tied = false;
      }
      code.push_back(entry);
      d = mirrored ? p.prev_around_vertex(d) : p.next_around_vertex(d);
    }
  }
  return true;
}

}  // namespace

CanonicalCode canonical_code(const Polytope& p, bool include_reflections) {
  std::vector<std::uint16_t> best, current;
  bool have = false;
  for (int mirrored = 0; mirrored <= (include_reflections ? 1 : 0); ++mirrored) {
    for (Dart d = 0; d < p.dart_count(); ++d) {
      if (encode(p, d, mirrored != 0, current, have ? &best : nullptr)) {
        if (!have || current < best) best = current;
        have = true;
      }
    }
  }
  CanonicalCode out;
  out.reflections_quotiented = include_reflections;
  const auto n = static_cast<std::uint16_t>(p.vertex_count());
  out.bytes.reserve(2 * (best.size() + 1));
  out.bytes.push_back(static_cast<std::uint8_t>(n >> 8));
  out.bytes.push_back(static_cast<std::uint8_t>(n & 0xff));
  for (auto x : best) {
    out.bytes.push_back(static_cast<std::uint8_t>(x >> 8));
    out.bytes.push_back(static_cast<std::uint8_t>(x & 0xff));
  }
  return out;
}

Polytope from_canonical_code(const CanonicalCode& code) {
  const auto& b = code.bytes;
  auto word = [&](std::size_t i) { return (b.at(2 * i) << 8) | b.at(2 * i + 1); };
  const int n = word(0);
  if (b.size() != 2 * (3 * static_cast<std::size_t>(n) + 1)) throw FormatError("malformed canonical code");
  std::vector<std::array<VertexId, 3>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < 3; ++i) rot[v][i] = static_cast<VertexId>(word(1 + 3 * v + i) - 1);
  return Polytope::from_rotation(std::move(rot));
}

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

// --- isomorphisms ------------------------------------------------------

FacetBijection FacetBijection::identity(int m) {
  std::vector<FacetId> image(m);
  std::iota(image.begin(), image.end(), 0);
  return FacetBijection(std::move(image));
}

FacetBijection FacetBijection::inverse() const {
  std::vector<FacetId> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<FacetId>(i);
  return FacetBijection(std::move(inv));
}

FacetBijection FacetBijection::after(const FacetBijection& other) const {
  std::vector<FacetId> out(other.image_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image_[other.image_[i]];
  return FacetBijection(std::move(out));
}

namespace {

// Extends root_p -> root_q to a map isomorphism if possible; fills dart_map.
bool match_from(const Polytope& p, const Polytope& q, Dart root_q, bool mirrored,
                std::vector<Dart>& dart_map) {
  const int n = p.vertex_count();
  std::vector<VertexId> vmap(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Dart> start_p(n, -1), start_q(n, -1);
  std::vector<VertexId> order{0};
  vmap[0] = q.tail(root_q);
  used[vmap[0]] = 1;
  start_p[0] = 0;
  start_q[0] = root_q;
  dart_map.assign(p.dart_count(), -1);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const VertexId v = order[qi];
    Dart dp = start_p[v], dq = start_q[v];
    for (int i = 0; i < 3; ++i) {
      dart_map[dp] = dq;
      const VertexId w = p.head(dp), wq = q.head(dq);
      if (vmap[w] == -1) {
        if (used[wq]) return false;
        vmap[w] = wq;
        used[wq] = 1;
        start_p[w] = p.reverse(dp);
        start_q[w] = q.reverse(dq);
        order.push_back(w);
      } else if (vmap[w] != wq) {
        return false;
      }
      dp = p.next_around_vertex(dp);
      dq = mirrored ? q.prev_around_vertex(dq) : q.next_around_vertex(dq);
    }
  }
  return true;
}

}  // namespace

std::vector<FacetBijection> isomorphisms(const Polytope& p, const Polytope& q,
                                         bool include_reflections) {
  std::vector<FacetBijection> out;
  if (p.vertex_count() != q.vertex_count() || p.facet_count() != q.facet_count()) return out;
  std::vector<Dart> dart_map;
  for (int mirrored = 0; mirrored <= (include_reflections ? 1 : 0); ++mirrored) {
    for (Dart root = 0; root < q.dart_count(); ++root) {
      if (!match_from(p, q, root, mirrored != 0, dart_map)) continue;
      std::vector<FacetId> image(p.facet_count());
      for (FacetId f = 0; f < p.facet_count(); ++f) {
        const Dart dq = dart_map[p.facet_darts(f)[0]];
        // A reflection carries the facet on one side of a dart to the other side.
        image[f] = q.facet_of(mirrored ? q.reverse(dq) : dq);
      }
      out.emplace_back(std::move(image));
    }
  }
  return out;
}

bool preserves_face_lattice(const Polytope& p, const Polytope& q, const FacetBijection& phi) {
  const int m = p.facet_count();
  if (q.facet_count() != m || phi.size() != m) return false;
  std::vector<char> hit(m, 0);
  for (FacetId f = 0; f < m; ++f) {
    if (phi(f) < 0 || phi(f) >= m || hit[phi(f)]) return false;
    hit[phi(f)] = 1;
  }
  for (FacetId a = 0; a < m; ++a)
    for (FacetId b = 0; b < m; ++b)
      if (p.adjacent(a, b) != q.adjacent(phi(a), phi(b))) return false;
  auto qt = q.vertex_triples();
  std::sort(qt.begin(), qt.end());
  std::vector<std::array<FacetId, 3>> mapped;
  for (const auto& t : p.vertex_triples()) {
    std::array<FacetId, 3> u{phi(t[0]), phi(t[1]), phi(t[2])};
    std::sort(u.begin(), u.end());
    mapped.push_back(u);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == qt;
}

}  // namespace pogorelov
