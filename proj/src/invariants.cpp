#include "pogorelov/invariants.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace pogorelov {

OrientabilityVerdict is_orientable_small_cover(const Polytope& p, const CharFun& lambda_f2) {
  if (lambda_f2.ring != Ring::f2) throw std::invalid_argument("orientability needs an F2 function");
  if (lambda_f2.size() != p.facet_count())
    throw std::invalid_argument("characteristic function does not match the polytope");
  OrientabilityVerdict out;
  // Try the all-ones functional first, then the rest in increasing order.
  for (int mask : {7, 1, 2, 3, 4, 5, 6}) {
    const Vec3 phi{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    const bool all_one = std::all_of(lambda_f2.values.begin(), lambda_f2.values.end(),
                                     [&](const Vec3& v) {
                                       return ((phi[0] * v[0] + phi[1] * v[1] + phi[2] * v[2]) & 1) == 1;
                                     });
    if (all_one) {
      out.orientable = true;
      out.witness = phi;
      return out;
    }
  }
  return out;
}

std::array<std::int64_t, 4> h_vector(const Polytope& p) {
  // Dual f-vector: vertices = facets, edges = edges, triangles = vertices.
  const std::int64_t f0 = p.facet_count(), f1 = p.edge_count(), f2 = p.vertex_count();
  return {1, f0 - 3, f1 - 2 * f0 + 3, f2 - f1 + f0 - 1};
}

std::vector<std::int64_t> betti_z2(const Polytope& p, ManifoldKind kind) {
  const auto h = h_vector(p);
  if (kind == ManifoldKind::small_cover) return {h[0], h[1], h[2], h[3]};
  return {h[0], 0, h[1], 0, h[2], 0, h[3]};
}

namespace {

CensusEntry analyse_type(const Polytope& p) {
  CensusEntry e;
  e.facet_count = p.facet_count();
  e.vertex_count = p.vertex_count();
  e.verdict = is_pogorelov(p);
  const auto aut = isomorphisms(p, p, true);
  e.automorphisms = aut.size();
  std::set<CanonicalCode> aut_classes;
  e.colourings = for_each_colouring(p, [&](const Colouring& chi) {
    const bool complete = is_complete(p, chi).complete;
    if (complete) ++e.complete_colourings;
    if (is_orientable_small_cover(p, reduce_mod2(lambda_chi(p, chi))).orientable)
      ++e.orientable_colourings;
    // Each S4 class has exactly one member in first-occurrence normal form.
    if (normalize_s4(chi) == chi) {
      ++e.classes_s4;
      if (complete) ++e.complete_classes_s4;
      aut_classes.insert(canonical_colouring_code(p, chi, CodeMode::s4_x_aut, &aut));
    }
    return true;
  });
  e.classes_s4_x_aut = aut_classes.size();
  return e;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const PogorelovVerdict& v) {
  if (std::holds_alternative<TetrahedronWitness>(v.witness)) return "tetrahedron";
  if (const auto* belt = std::get_if<Belt>(&v.witness)) {
    std::string s = std::to_string(belt->size()) + "-belt";
    for (FacetId f : belt->facets) s += " " + std::to_string(f);
    return s;
  }
  return "none";
}

}  // namespace

Census classify(std::span<const Polytope> polytopes, CodeMode mode) {
  std::map<CanonicalCode, std::pair<std::size_t, int>> types;  // first input index, count
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    auto [it, fresh] = types.try_emplace(canonical_code(polytopes[i], true), i, 0);
    ++it->second.second;
  }
  // Each type is analysed in its canonical labelling so reports do not depend on input order.
  std::vector<std::future<CensusEntry>> jobs;
  for (const auto& [code, info] : types)
    jobs.push_back(std::async(std::launch::async, [&code] { return analyse_type(from_canonical_code(code)); }));
  Census census;
  census.mode = mode;
  std::size_t j = 0;
  for (const auto& [code, info] : types) {
    CensusEntry e = jobs[j++].get();
    e.code = code;
    e.multiplicity = info.second;
    census.types.push_back(std::move(e));
  }
  return census;
}

std::string census_text(const Census& census) {
  std::ostringstream os;
  const char* mode = census.mode == CodeMode::s4 ? "s4" : "s4_x_aut";
  os << "census: " << census.types.size() << " type(s), mode " << mode << '\n';
  for (std::size_t i = 0; i < census.types.size(); ++i) {
    const auto& e = census.types[i];
    os << "type " << i + 1 << ": m=" << e.facet_count << " vertices=" << e.vertex_count
       << " inputs=" << e.multiplicity << '\n';
    os << "  Pogorelov: " << yes_no(e.verdict.pogorelov);
    if (!e.verdict.pogorelov) os << " (" << witness_text(e.verdict) << ")";
    os << '\n';
    os << "  automorphisms: " << e.automorphisms << '\n';
    os << "  colourings: " << e.colourings << '\n';
    os << "  classes: " << census.classes(e) << '\n';
    os << "  classes_s4: " << e.classes_s4 << '\n';
    os << "  classes_s4_x_aut: " << e.classes_s4_x_aut << '\n';
    os << "  complete colourings: " << e.complete_colourings << " (" << e.complete_classes_s4
       << " s4 classes)\n";
    os << "  orientable small covers: " << e.orientable_colourings << '\n';
    if (e.verdict.pogorelov)
      os << "  manifolds: " << census.classes(e)
         << " diffeomorphism classes of small covers / quasitoric manifolds over lambda_chi\n";
    else
      os << "  manifolds: not classified (polytope outside the Pogorelov class)\n";
  }
  return os.str();
}

std::string census_kv(const Census& census) {
  std::ostringstream os;
  const char* mode = census.mode == CodeMode::s4 ? "s4" : "s4_x_aut";
  for (std::size_t i = 0; i < census.types.size(); ++i) {
    const auto& e = census.types[i];
    os << "[type " << i + 1 << "]\n";
    os << "code=" << e.code.hex() << '\n';
    os << "inputs=" << e.multiplicity << '\n';
    os << "facets=" << e.facet_count << '\n';
    os << "vertices=" << e.vertex_count << '\n';
    os << "pogorelov=" << yes_no(e.verdict.pogorelov) << '\n';
    os << "witness=" << witness_text(e.verdict) << '\n';
    os << "automorphisms=" << e.automorphisms << '\n';
    os << "colourings=" << e.colourings << '\n';
    os << "mode=" << mode << '\n';
    os << "classes=" << census.classes(e) << '\n';
    os << "classes_s4=" << e.classes_s4 << '\n';
    os << "classes_s4_x_aut=" << e.classes_s4_x_aut << '\n';
    os << "complete_colourings=" << e.complete_colourings << '\n';
    os << "complete_classes_s4=" << e.complete_classes_s4 << '\n';
    os << "orientable_colourings=" << e.orientable_colourings << '\n';
    os << "theorem_applies=" << yes_no(e.verdict.pogorelov) << '\n';
  }
  return os.str();
}

}  // namespace pogorelov
