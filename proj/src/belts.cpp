#include "pogorelov/belts.hpp"

#include <algorithm>
#include <stdexcept>

namespace pogorelov {

namespace {

bool share_vertex(const Polytope& p, FacetId a, FacetId b, FacetId c) {
  std::array<FacetId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  const auto& triples = p.vertex_triples();
  return std::find(triples.begin(), triples.end(), t) != triples.end();
}

// Depth-first extension of paths whose first facet is the smallest member.
void extend(const Polytope& p, int k, std::vector<FacetId>& path, std::vector<Belt>& out) {
  const FacetId first = path.front();
  const FacetId last = path.back();
  const int pos = static_cast<int>(path.size());
  for (FacetId f : p.facet_neighbours()[last]) {
    if (f <= first) continue;
    if (std::find(path.begin(), path.end(), f) != path.end()) continue;
    bool ok = true;
    // Positions 1..pos-2 are never adjacent to f; position 0 only when closing.
    for (int i = 1; i + 1 < pos && ok; ++i) ok = !p.adjacent(f, path[i]);
    if (!ok) continue;
    const bool closing = pos == k - 1;
    if (pos >= 2 && p.adjacent(f, first) != closing) continue;
    path.push_back(f);
    if (closing) {
      if (path[1] < path.back() && (k != 3 || !share_vertex(p, path[0], path[1], path[2])))
        out.push_back(Belt{path});
    } else {
      extend(p, k, path, out);
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<Belt> find_belts(const Polytope& p, int k) {
  if (k < 3) throw std::invalid_argument("belt length must be at least 3");
  std::vector<Belt> out;
  if (k > p.facet_count()) return out;
  std::vector<FacetId> path;
  for (FacetId s = 0; s < p.facet_count(); ++s) {
    path.assign(1, s);
    extend(p, k, path, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_belt(const Polytope& p, const Belt& belt) {
  const int k = belt.size();
  if (k < 3) return false;
  const auto& f = belt.facets;
  for (FacetId x : f)
    if (x < 0 || x >= p.facet_count()) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (f[i] == f[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (p.adjacent(f[i], f[j]) != consecutive) return false;
      for (int l = j + 1; l < k; ++l)
        if (share_vertex(p, f[i], f[j], f[l])) return false;
    }
  return *std::min_element(f.begin(), f.end()) == f[0] && f[1] < f[k - 1];
}

PogorelovVerdict is_pogorelov(const Polytope& p) {
  PogorelovVerdict v;
  if (p.facet_count() == 4) {
    v.witness = TetrahedronWitness{};
    return v;
  }
  for (int k : {3, 4}) {
    auto belts = find_belts(p, k);
    if (!belts.empty()) {
      v.witness = std::move(belts.front());
      return v;
    }
  }
  v.pogorelov = true;
  return v;
}

FullereneStatus fullerene_status(const Polytope& p) {
  FullereneStatus s;
  for (FacetId f = 0; f < p.facet_count(); ++f)
    if (p.facet_size(f) != 5 && p.facet_size(f) != 6) return s;
  s.fullerene = true;
  for (FacetId f = 0; f < p.facet_count(); ++f)
    for (FacetId g : p.facet_neighbours()[f])
      if (g > f && p.facet_size(f) == 5 && p.facet_size(g) == 5) ++s.adjacent_pentagon_pairs;
  s.ipr = s.adjacent_pentagon_pairs == 0;
  return s;
}

}  // namespace pogorelov
