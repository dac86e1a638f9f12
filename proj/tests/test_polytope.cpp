#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::uint8_t> planar_code(std::initializer_list<std::initializer_list<int>> graph) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  out.push_back(static_cast<std::uint8_t>(graph.size()));
  for (const auto& nbrs : graph) {
    for (int x : nbrs) out.push_back(static_cast<std::uint8_t>(x));
    out.push_back(0);
  }
  return out;
}

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("planar_code of K4 loads as the tetrahedron") {
  const auto p = load_polytope(planar_code({{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}),
                               Format::planar_code);
  CHECK(p.facet_count() == 4);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 6);
  for (FacetId f = 0; f < 4; ++f) CHECK(p.facet_size(f) == 3);
}

TEST_CASE("planar_code facets are ordered by their minimal dart") {
  const auto p = load_polytope(planar_code({{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}),
                               Format::planar_code);
  std::pair<int, int> prev{-1, -1};
  for (FacetId f = 0; f < p.facet_count(); ++f) {
    std::pair<int, int> least{1 << 30, 0};
    for (Dart d : p.facet_darts(f)) least = std::min(least, std::pair(p.tail(d), p.head(d)));
    const Dart first = p.facet_darts(f)[0];
    CHECK(least == std::pair(p.tail(first), p.head(first)));
    CHECK(prev < least);
    prev = least;
  }
}

TEST_CASE("face_list of the cube") {
  const auto p = fixture("cube");
  CHECK(p.facet_count() == 6);
  CHECK(p.vertex_count() == 8);
  CHECK(p.edge_count() == 12);
  // Facet order follows the file.
  CHECK(p.facet_vertices(0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("face_list accepts mixed orientations, comments and sparse ids") {
  const auto p = parse_face_list("# cube\n10 11 12 13\n14 15 16 17 # bottom, same direction\n"
                                 "10 14 15 11\n11 15 16 12\n12 16 17 13\n13 17 14 10\n\n");
  CHECK(p.facet_count() == 6);
  CHECK(p.vertex_count() == 8);
  const auto cube = fixture("cube");
  CHECK(canonical_code(p, false) == canonical_code(cube, false));
  for (FacetId f = 0; f < 6; ++f) {
    auto a = p.facet_vertices(f), b = cube.facet_vertices(f);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("malformed inputs are rejected") {
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_planar_code(bytes_of("planar_code 4...")), FormatError);
  }
  SUBCASE("truncated stream") {
    auto b = planar_code({{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}});
    b.resize(b.size() - 3);
    CHECK_THROWS_AS(parse_planar_code(b), FormatError);
  }
  SUBCASE("multi-byte extension") {
    auto b = bytes_of(kPlanarCodeHeader);
    b.push_back(0);
    CHECK_THROWS_AS(parse_planar_code(b), FormatError);
  }
  SUBCASE("degree other than 3") {
    CHECK_THROWS_AS(parse_planar_code(planar_code({{2, 3, 4}, {1, 3}, {1, 2, 4}, {1, 3}})),
                    InvalidPolytope);
  }
  SUBCASE("not 3-connected") {
    // Two K4 minus an edge, joined by two edges: {1, 2} separates.
    auto b = planar_code({{3, 4, 5}, {4, 3, 6}, {1, 2, 4}, {1, 3, 2},
                          {1, 7, 8}, {2, 8, 7}, {5, 6, 8}, {5, 7, 6}});
    CHECK_THROWS_WITH_AS(parse_planar_code(b), doctest::Contains("3-connected"), InvalidPolytope);
  }
  SUBCASE("nonplanar rotation (K3,3)") {
    auto b = planar_code({{4, 5, 6}, {4, 5, 6}, {4, 5, 6}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    CHECK_THROWS_WITH_AS(parse_planar_code(b), doctest::Contains("planar"), InvalidPolytope);
  }
  SUBCASE("nonplanar rotation of K4") {
    CHECK_THROWS_AS(parse_planar_code(planar_code({{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}})),
                    InvalidPolytope);
  }
  SUBCASE("face_list problems") {
    CHECK_THROWS_AS(parse_face_list("# nothing\n"), FormatError);
    CHECK_THROWS_AS(parse_face_list("0 1 x\n"), FormatError);
    CHECK_THROWS_AS(parse_face_list("0 1 -2\n"), FormatError);
    CHECK_THROWS_AS(parse_face_list("0 1 2\n0 2 1\n"), InvalidPolytope);
    CHECK_THROWS_AS(parse_face_list("0 1 2 3\n0 1 2 3\n"), InvalidPolytope);
  }
}

TEST_CASE("Euler relation and cubic edge count on every fixture") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    const auto p = fixture(name);
    CHECK(3 * p.vertex_count() == 2 * p.edge_count());
    CHECK(p.vertex_count() - p.edge_count() + p.facet_count() == 2);
    for (const auto& t : p.vertex_triples()) {
      CHECK(t[0] < t[1]);
      CHECK(t[1] < t[2]);
      CHECK(p.adjacent(t[0], t[1]));
      CHECK(p.adjacent(t[1], t[2]));
    }
  }
}

TEST_CASE("serialization round trips") {
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    const auto p = fixture(name);
    CHECK(parse_face_list(to_face_list(p)) == p);

    const std::vector<Polytope> one{p};
    const auto q = load_polytope(to_planar_code(one), Format::planar_code);
    for (VertexId v = 0; v < p.vertex_count(); ++v) CHECK(q.rotation(v) == p.rotation(v));
    std::set<std::set<Dart>> fp, fq;
    for (FacetId f = 0; f < p.facet_count(); ++f) {
      fp.insert({p.facet_darts(f).begin(), p.facet_darts(f).end()});
      fq.insert({q.facet_darts(f).begin(), q.facet_darts(f).end()});
    }
    CHECK(fp == fq);
    // planar_code-loaded polytopes survive exactly.
    const std::vector<Polytope> again{q};
    CHECK(load_polytope(to_planar_code(again), Format::planar_code) == q);
  }
}

TEST_CASE("planar_code streams carry several graphs") {
  const std::vector<Polytope> ps{fixture("tetrahedron"), fixture("cube"), fixture("dodecahedron")};
  const auto loaded = parse_planar_code(to_planar_code(ps));
  REQUIRE(loaded.size() == 3);
  CHECK(loaded[0].facet_count() == 4);
  CHECK(loaded[1].facet_count() == 6);
  CHECK(loaded[2].facet_count() == 12);
  CHECK(detect_format(to_planar_code(ps)) == Format::planar_code);
  CHECK_THROWS_AS(load_polytope(to_planar_code(ps), Format::planar_code), FormatError);
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937 rng(17);
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    const auto p = fixture(name);
    const auto code = canonical_code(p, true);
    const auto oriented = canonical_code(p, false);
    for (int trial = 0; trial < 10; ++trial) {
      CHECK(canonical_code(relabel(p, rng).polytope, true) == code);
      CHECK(canonical_code(relabel(p, rng, true).polytope, false) == oriented);
    }
  }
}

TEST_CASE("canonical code distinguishes types") {
  std::mt19937 rng(3);
  const auto prism_a = relabel(fixture("prism3"), rng).polytope;
  const auto prism_b = relabel(fixture("prism3"), rng).polytope;
  CHECK(canonical_code(prism_a) == canonical_code(prism_b));
  CHECK(canonical_code(fixture("cube")) != canonical_code(fixture("prism3")));
  CHECK(canonical_code(fixture("c28")) != canonical_code(fixture("c26")));
  const auto d = fixture("dodecahedron");
  CHECK(canonical_code(d, true) == canonical_code(mirror(d), true));
  CHECK(canonical_code(d, true).reflections_quotiented);
  CHECK_FALSE(canonical_code(d, false).reflections_quotiented);
}

TEST_CASE("automorphism group orders") {
  CHECK(isomorphisms(fixture("tetrahedron"), fixture("tetrahedron")).size() == 24);
  CHECK(isomorphisms(fixture("cube"), fixture("cube")).size() == 48);
  CHECK(isomorphisms(fixture("cube"), fixture("cube"), false).size() == 24);
  CHECK(isomorphisms(fixture("prism5"), fixture("prism5")).size() == 20);
  CHECK(isomorphisms(fixture("dodecahedron"), fixture("dodecahedron")).size() == 120);
  CHECK(isomorphisms(fixture("c60"), fixture("c60")).size() == 120);
  CHECK(isomorphisms(fixture("c24"), fixture("c24")).size() == 24);
  CHECK(isomorphisms(fixture("dodecahedron"), fixture("cube")).empty());
  CHECK(isomorphisms(fixture("c26"), fixture("c28")).empty());
}

TEST_CASE("isomorphisms preserve the face lattice") {
  std::mt19937 rng(5);
  for (const auto& name : all_fixtures()) {
    CAPTURE(name);
    const auto p = fixture(name);
    const auto aut = isomorphisms(p, p);
    CHECK((4 * p.dart_count()) % aut.size() == 0);
    std::set<FacetBijection> distinct(aut.begin(), aut.end());
    CHECK(distinct.size() == aut.size());
    CHECK(distinct.count(FacetBijection::identity(p.facet_count())) == 1);
    for (const auto& phi : aut) CHECK(preserves_face_lattice(p, p, phi));

    const auto r = relabel(p, rng);
    const auto isos = isomorphisms(p, r.polytope);
    CHECK(isos.size() == aut.size());
    CHECK(std::find(isos.begin(), isos.end(), r.rho) != isos.end());
    for (const auto& phi : isos) CHECK(preserves_face_lattice(p, r.polytope, phi));
  }
}

TEST_CASE("facet bijections compose and invert") {
  const auto p = fixture("cube");
  const auto aut = isomorphisms(p, p);
  const auto& a = aut[5];
  const auto& b = aut[17];
  CHECK(a.after(a.inverse()) == FacetBijection::identity(6));
  const auto ab = a.after(b);
  CHECK(std::find(aut.begin(), aut.end(), ab) != aut.end());
  for (FacetId f = 0; f < 6; ++f) CHECK(ab(f) == a(b(f)));
}

TEST_CASE("canonical code decodes to an isomorphic polytope") {
  std::mt19937 rng(5);
  for (const auto& name : all_fixtures()) {
    const auto p = fixture(name);
    const auto code = canonical_code(p);
    const auto q = from_canonical_code(code);
    CHECK(canonical_code(q) == code);
    CHECK(canonical_code(from_canonical_code(canonical_code(relabel(p, rng).polytope))) == code);
  }
}
