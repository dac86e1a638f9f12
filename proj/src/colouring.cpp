#include "pogorelov/colouring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pogorelov {

std::string Colouring::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < colours_.size(); ++i) {
    if (i) s.push_back(',');
    s.push_back(static_cast<char>('0' + colours_[i]));
  }
  return s;
}

Colouring Colouring::parse(std::string_view line) {
  std::vector<Colour> out;
  bool expect_digit = true;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    if (expect_digit) {
      if (c < '1' || c > '4') throw std::invalid_argument("colour must be a digit 1..4");
      out.push_back(static_cast<Colour>(c - '0'));
      expect_digit = false;
    } else {
      if (c != ',') throw std::invalid_argument("colours must be comma-separated");
      expect_digit = true;
    }
  }
  if (out.empty() || expect_digit) throw std::invalid_argument("malformed colouring line");
  return Colouring(std::move(out));
}

ColourPermutation::ColourPermutation(std::array<Colour, 4> image) : image_(image) {
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Colour, 4>{1, 2, 3, 4})
    throw std::invalid_argument("not a permutation of 1..4");
}

ColourPermutation ColourPermutation::inverse() const {
  std::array<Colour, 4> inv{};
  for (int c = 0; c < 4; ++c) inv[image_[c] - 1] = static_cast<Colour>(c + 1);
  return ColourPermutation(inv);
}

std::vector<ColourPermutation> ColourPermutation::all() {
  std::array<Colour, 4> a{1, 2, 3, 4};
  std::vector<ColourPermutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

Colouring apply(const ColourPermutation& sigma, const Colouring& chi) {
  std::vector<Colour> out(chi.size());
  for (int f = 0; f < chi.size(); ++f) out[f] = sigma(chi[f]);
  return Colouring(std::move(out));
}

Colouring pull_back(const Colouring& chi_on_q, const FacetBijection& phi) {
  std::vector<Colour> out(phi.size());
  for (int f = 0; f < phi.size(); ++f) out[f] = chi_on_q[phi(f)];
  return Colouring(std::move(out));
}

bool is_proper(const Polytope& p, const Colouring& chi) {
  if (chi.size() != p.facet_count()) return false;
  for (FacetId f = 0; f < p.facet_count(); ++f) {
    if (chi[f] < 1 || chi[f] > 4) return false;
    for (FacetId g : p.facet_neighbours()[f])
      if (chi[f] == chi[g]) return false;
  }
  return true;
}

namespace {

// Backtracking over facets in index order. `vertex_ok` is consulted whenever
// the last facet of a vertex receives its colour.
class Enumerator {
 public:
  Enumerator(const Polytope& p, const std::function<bool(const Colouring&)>& visit,
             std::optional<ColourTriple> avoid)
      : p_(p), visit_(visit), avoid_(avoid), colours_(p.facet_count(), 0) {
    if (avoid_) {
      closing_.resize(p.facet_count());
      for (const auto& t : p.vertex_triples()) closing_[t[2]].push_back(t);
    }
  }

  std::uint64_t run() {
    recurse(0);
    return count_;
  }

 private:
  bool recurse(FacetId f) {
    if (f == p_.facet_count()) {
      ++count_;
      return visit_(Colouring(colours_));
    }
    for (Colour c = 1; c <= 4; ++c) {
      bool ok = true;
      for (FacetId g : p_.facet_neighbours()[f]) {
        if (g < f && colours_[g] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colours_[f] = c;
      if (avoid_ && !vertices_ok(f)) continue;
      if (!recurse(f + 1)) return false;
    }
    colours_[f] = 0;
    return true;
  }

  bool vertices_ok(FacetId f) const {
    for (const auto& t : closing_[f]) {
      ColourTriple c{colours_[t[0]], colours_[t[1]], colours_[t[2]]};
      std::sort(c.begin(), c.end());
      if (c == *avoid_) return false;
    }
    return true;
  }

  const Polytope& p_;
  const std::function<bool(const Colouring&)>& visit_;
  std::optional<ColourTriple> avoid_;
  std::vector<Colour> colours_;
  std::vector<std::vector<std::array<FacetId, 3>>> closing_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t for_each_colouring(const Polytope& p,
                                 const std::function<bool(const Colouring&)>& visit) {
  return Enumerator(p, visit, std::nullopt).run();
}

std::vector<Colouring> enumerate_colourings(const Polytope& p) {
  std::vector<Colouring> out;
  for_each_colouring(p, [&](const Colouring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::uint64_t count_colourings(const Polytope& p) {
  return for_each_colouring(p, [](const Colouring&) { return true; });
}

std::optional<Colouring> find_colouring_avoiding(const Polytope& p, ColourTriple avoid) {
  std::sort(avoid.begin(), avoid.end());
  std::optional<Colouring> found;
  std::function<bool(const Colouring&)> visit = [&](const Colouring& c) {
    found = c;
    return false;
  };
  Enumerator(p, visit, avoid).run();
  return found;
}

namespace {

// sigma with sigma(a[f]) = b[f] for all f, if the induced partial map is injective.
std::optional<ColourPermutation> match_colours(const Colouring& a, const Colouring& b) {
  std::array<Colour, 5> fwd{}, back{};
  for (int f = 0; f < a.size(); ++f) {
    const Colour x = a[f], y = b[f];
    if (fwd[x] == 0 && back[y] == 0) {
      fwd[x] = y;
      back[y] = x;
    } else if (fwd[x] != y || back[y] != x) {
      return std::nullopt;
    }
  }
  // Extend unused colours in ascending order.
  Colour next = 1;
  std::array<Colour, 4> image{};
  for (Colour x = 1; x <= 4; ++x) {
    if (fwd[x] == 0) {
      while (back[next] != 0) ++next;
      fwd[x] = next;
      back[next] = x;
    }
    image[x - 1] = fwd[x];
  }
  return ColourPermutation(image);
}

}  // namespace

std::optional<ColouringMatch> colourings_equivalent(const Polytope& p, const Colouring& chi1,
                                                    const Polytope& q, const Colouring& chi2,
                                                    EquivalenceMode mode,
                                                    bool include_reflections) {
  if (!is_proper(p, chi1) || !is_proper(q, chi2))
    throw std::invalid_argument("colourings must be proper on their polytopes");
  if (mode == EquivalenceMode::strict_s4) {
    if (!(p == q)) throw std::invalid_argument("strict_s4 compares colourings of one labelled polytope");
    if (auto sigma = match_colours(chi1, chi2))
      return ColouringMatch{FacetBijection::identity(p.facet_count()), *sigma};
    return std::nullopt;
  }
  for (auto& phi : isomorphisms(p, q, include_reflections)) {
    if (auto sigma = match_colours(chi1, pull_back(chi2, phi)))
      return ColouringMatch{std::move(phi), *sigma};
  }
  return std::nullopt;
}

Colouring normalize_s4(const Colouring& chi) {
  std::array<Colour, 5> relabel{};
  Colour next = 1;
  std::vector<Colour> out(chi.size());
  for (int f = 0; f < chi.size(); ++f) {
    auto& r = relabel[chi[f]];
    if (r == 0) r = next++;
    out[f] = r;
  }
  return Colouring(std::move(out));
}

CanonicalCode canonical_colouring_code(const Polytope& p, const Colouring& chi, CodeMode mode,
                                       const std::vector<FacetBijection>* automorphisms) {
  Colouring best = normalize_s4(chi);
  if (mode == CodeMode::s4_x_aut) {
    std::vector<FacetBijection> own;
    if (automorphisms == nullptr) {
      own = isomorphisms(p, p, true);
      automorphisms = &own;
    }
    for (const auto& phi : *automorphisms) {
      auto candidate = normalize_s4(pull_back(chi, phi));
      if (candidate < best) best = std::move(candidate);
    }
  }
  CanonicalCode code;
  code.bytes = best.colours();
  code.reflections_quotiented = mode == CodeMode::s4_x_aut;
  return code;
}

Completeness is_complete(const Polytope& p, const Colouring& chi) {
  std::array<bool, 4> seen{};  // indexed by the missing colour of the triple
  for (const auto& t : p.vertex_triples()) {
    int mask = (1 << chi[t[0]]) | (1 << chi[t[1]]) | (1 << chi[t[2]]);
    for (int c = 1; c <= 4; ++c)
      if (mask == (0b11110 & ~(1 << c))) seen[c - 1] = true;
  }
  Completeness out;
  // Triples in ascending order: {1,2,3}, {1,2,4}, {1,3,4}, {2,3,4}.
  for (int c = 4; c >= 1; --c) {
    if (seen[c - 1]) continue;
    ColourTriple t{};
    int i = 0;
    for (Colour x = 1; x <= 4; ++x)
      if (x != c) t[i++] = x;
    out.missing.push_back(t);
  }
  out.complete = out.missing.empty();
  return out;
}

}  // namespace pogorelov
