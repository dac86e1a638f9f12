#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

bool proper_by_hand(const Polytope& p, const Colouring& chi) {
  for (const auto& t : p.vertex_triples())
    if (chi[t[0]] == chi[t[1]] || chi[t[1]] == chi[t[2]] || chi[t[0]] == chi[t[2]]) return false;
  for (FacetId f = 0; f < p.facet_count(); ++f)
    if (chi[f] < 1 || chi[f] > 4) return false;
  return true;
}

std::multiset<int> class_sizes(const Colouring& chi) {
  std::array<int, 5> n{};
  for (Colour c : chi.colours()) ++n[c];
  return {n.begin() + 1, n.end()};
}

}  // namespace

TEST_CASE("colouring counts match the chromatic polynomial") {
  const std::vector<std::pair<std::string, std::uint64_t>> expected{
      {"tetrahedron", 24}, {"prism3", 24}, {"cube", 96}, {"dodecahedron", 240}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    const auto p = fixture(name);
    CHECK(count_colourings(p) == count);
    CHECK(chromatic_at(p, 4) == static_cast<std::int64_t>(count));
  }
  // Oracle sanity on small graphs: P(K4, k) = k(k-1)(k-2)(k-3).
  CHECK(chromatic_at(fixture("tetrahedron"), 5) == 120);
  CHECK(chromatic_at(fixture("cube"), 3) == 6);
  CHECK(static_cast<std::int64_t>(count_colourings(fixture("prism5"))) ==
        chromatic_at(fixture("prism5"), 4));
  CHECK(static_cast<std::int64_t>(count_colourings(fixture("c24"))) == chromatic_at(fixture("c24"), 4));
}

TEST_CASE("enumeration is deterministic, proper and exhaustive") {
  const auto p = fixture("cube");
  const auto all = enumerate_colourings(p);
  CHECK(all.size() == 96);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.front().to_string() == "1,1,2,3,2,3");
  for (const auto& chi : all) CHECK(proper_by_hand(p, chi));
  for (const auto& chi : enumerate_colourings(fixture("dodecahedron")))
    CHECK(proper_by_hand(fixture("dodecahedron"), chi));

  std::uint64_t seen = 0;
  const auto visited = for_each_colouring(p, [&](const Colouring&) { return ++seen < 10; });
  CHECK(visited == 10);
}

TEST_CASE("colouring count is invariant under relabelling") {
  std::mt19937 rng(11);
  for (const char* name : {"cube", "prism5", "dodecahedron"}) {
    const auto p = fixture(name);
    CHECK(count_colourings(relabel(p, rng).polytope) == count_colourings(p));
  }
}

TEST_CASE("colouring text form") {
  const auto chi = Colouring::parse("1,2, 3,4\n");
  CHECK(chi.size() == 4);
  CHECK(chi.to_string() == "1,2,3,4");
  CHECK_THROWS_AS(Colouring::parse("1,5"), std::invalid_argument);
  CHECK_THROWS_AS(Colouring::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Colouring::parse("12"), std::invalid_argument);
  CHECK_THROWS_AS(Colouring::parse(""), std::invalid_argument);
}

TEST_CASE("strict S4 equivalence") {
  const auto p = fixture("dodecahedron");
  const auto all = enumerate_colourings(p);
  const ColourPermutation sigma0({3, 1, 4, 2});
  const auto chi = all[37];
  const auto m = colourings_equivalent(p, chi, p, apply(sigma0, chi), EquivalenceMode::strict_s4);
  REQUIRE(m.has_value());
  CHECK(m->sigma == sigma0);
  CHECK(m->phi == FacetBijection::identity(p.facet_count()));

  // Two colourings from different S4 classes.
  const auto other = *std::find_if(all.begin(), all.end(), [&](const Colouring& c) {
    return normalize_s4(c) != normalize_s4(chi);
  });
  CHECK_FALSE(colourings_equivalent(p, chi, p, other, EquivalenceMode::strict_s4));
  CHECK(canonical_colouring_code(p, chi, CodeMode::s4) !=
        canonical_colouring_code(p, other, CodeMode::s4));

  // Different class-size multisets (cube: three colours vs four).
  const auto cube = fixture("cube");
  const auto three = Colouring::parse("1,1,2,3,2,3");
  const auto four = Colouring::parse("1,1,2,3,2,4");
  REQUIRE(class_sizes(three) != class_sizes(four));
  CHECK_FALSE(colourings_equivalent(cube, three, cube, four, EquivalenceMode::strict_s4));

  CHECK_THROWS_AS(colourings_equivalent(p, chi, cube, three, EquivalenceMode::strict_s4),
                  std::invalid_argument);
}

TEST_CASE("strict S4 equivalence is an equivalence relation") {
  const auto p = fixture("cube");
  const auto all = enumerate_colourings(p);
  std::mt19937 rng(2);
  auto eq = [&](const Colouring& a, const Colouring& b) {
    return colourings_equivalent(p, a, p, b, EquivalenceMode::strict_s4).has_value();
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto c = apply(ColourPermutation::all()[rng() % 24], rng() & 1 ? a : b);
    CHECK(eq(a, a));
    CHECK(eq(a, b) == eq(b, a));
    if (eq(a, b) && eq(b, c)) CHECK(eq(a, c));
    if (auto m = colourings_equivalent(p, a, p, b, EquivalenceMode::strict_s4))
      CHECK(apply(m->sigma, a) == b);
  }
}

TEST_CASE("equivalence up to isomorphism follows relabellings") {
  std::mt19937 rng(8);
  for (const char* name : {"cube", "dodecahedron", "c24"}) {
    const auto p = fixture(name);
    const auto r = relabel(p, rng);
    std::optional<Colouring> chi;
    for_each_colouring(p, [&](const Colouring& c) {
      chi = c;
      return false;
    });
    // chi' = chi . rho^{-1} on the relabelled copy.
    const auto moved = pull_back(*chi, r.rho.inverse());
    const auto m = colourings_equivalent(p, *chi, r.polytope, moved, EquivalenceMode::up_to_iso);
    REQUIRE(m.has_value());
    for (FacetId f = 0; f < p.facet_count(); ++f) CHECK(moved[m->phi(f)] == m->sigma((*chi)[f]));
  }
}

TEST_CASE("canonical colouring codes") {
  const auto p = fixture("cube");
  const auto aut = isomorphisms(p, p);
  const auto all = enumerate_colourings(p);
  const auto chi = all[40];
  CHECK(canonical_colouring_code(p, chi, CodeMode::s4) ==
        canonical_colouring_code(p, apply(ColourPermutation({4, 3, 2, 1}), chi), CodeMode::s4));
  for (const auto& phi : aut)
    CHECK(canonical_colouring_code(p, chi, CodeMode::s4_x_aut) ==
          canonical_colouring_code(p, pull_back(chi, phi), CodeMode::s4_x_aut, &aut));

  // Equal codes exactly when the matching equivalence succeeds.
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const bool s4 = canonical_colouring_code(p, all[i], CodeMode::s4) ==
                      canonical_colouring_code(p, all[j], CodeMode::s4);
      CHECK(s4 == colourings_equivalent(p, all[i], p, all[j], EquivalenceMode::strict_s4).has_value());
      const bool full = canonical_colouring_code(p, all[i], CodeMode::s4_x_aut, &aut) ==
                        canonical_colouring_code(p, all[j], CodeMode::s4_x_aut, &aut);
      CHECK(full == colourings_equivalent(p, all[i], p, all[j], EquivalenceMode::up_to_iso).has_value());
    }
}

TEST_CASE("free S4 action gives count / 24 orbits") {
  for (const char* name : {"tetrahedron", "prism3", "dodecahedron"}) {
    CAPTURE(name);
    const auto p = fixture(name);
    const auto all = enumerate_colourings(p);
    std::set<Colouring> reps;
    for (const auto& chi : all) {
      REQUIRE(std::set<Colour>(chi.colours().begin(), chi.colours().end()).size() == 4);
      std::set<Colouring> orbit;
      for (const auto& s : ColourPermutation::all()) orbit.insert(apply(s, chi));
      CHECK(orbit.size() == 24);
      reps.insert(*orbit.begin());
    }
    CHECK(reps.size() * 24 == all.size());
  }
}

TEST_CASE("completeness") {
  const auto tet = fixture("tetrahedron");
  const auto r = is_complete(tet, Colouring::parse("1,2,3,4"));
  CHECK(r.complete);
  CHECK(r.missing.empty());

  for (const char* name : {"dodecahedron", "c24"})
    for_each_colouring(fixture(name), [&](const Colouring& chi) {
      CHECK(is_complete(fixture(name), chi).complete);
      return true;
    });

  const auto c60 = fixture("c60");
  const auto chi = find_colouring_avoiding(c60, {1, 2, 4});
  REQUIRE(chi.has_value());
  CHECK(proper_by_hand(c60, *chi));
  const auto res = is_complete(c60, *chi);
  CHECK_FALSE(res.complete);
  REQUIRE(res.missing.size() == 1);
  CHECK(res.missing[0] == ColourTriple{1, 2, 4});

  // Missing-triple order is ascending.
  const auto prism = fixture("prism3");
  const auto pr = is_complete(prism, Colouring::parse("4,4,1,2,3"));
  CHECK(pr.missing == std::vector<ColourTriple>{{1, 2, 3}});
  CHECK_FALSE(find_colouring_avoiding(fixture("tetrahedron"), {1, 2, 3}).has_value());
}
