#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pogorelov/polytope.hpp"

namespace pogorelov {

Format detect_format(std::span<const std::uint8_t> bytes) {
  const auto& h = kPlanarCodeHeader;
  if (bytes.size() >= h.size() && std::equal(h.begin(), h.end(), bytes.begin()))
    return Format::planar_code;
  return Format::face_list;
}

std::vector<Polytope> parse_planar_code(std::span<const std::uint8_t> bytes) {
  const auto& h = kPlanarCodeHeader;
  if (detect_format(bytes) != Format::planar_code)
    throw FormatError("missing \">>planar_code<<\" header");
  std::size_t pos = h.size();
  std::vector<Polytope> out;
  while (pos < bytes.size()) {
    const int n = bytes[pos++];
    if (n == 0) throw FormatError("multi-byte planar_code (more than 255 vertices) is not supported");
    std::vector<std::array<VertexId, 3>> rotation(n);
    for (int v = 0; v < n; ++v) {
      std::vector<VertexId> nbrs;
      while (true) {
        if (pos >= bytes.size())
          throw FormatError("truncated planar_code at graph " + std::to_string(out.size() + 1));
        const int b = bytes[pos++];
        if (b == 0) break;
        if (b > n) throw FormatError("neighbour " + std::to_string(b) + " out of range");
        nbrs.push_back(b - 1);
      }
      if (nbrs.size() != 3)
        throw InvalidPolytope("vertex " + std::to_string(v + 1) + " has degree " +
                              std::to_string(nbrs.size()) + ", expected 3");
      rotation[v] = {nbrs[0], nbrs[1], nbrs[2]};
    }
    out.push_back(Polytope::from_rotation(std::move(rotation)));
  }
  return out;
}

Polytope parse_face_list(std::string_view text) {
  std::vector<std::vector<int>> faces;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> face;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      int value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc{} || ptr != line.data() + j || value < 0)
        throw FormatError("line " + std::to_string(line_no) + ": bad vertex id '" +
                          std::string(line.substr(i, j - i)) + "'");
      face.push_back(value);
      i = j;
    }
    if (!face.empty()) faces.push_back(std::move(face));
  }
  if (faces.empty()) throw FormatError("face_list contains no facets");
  return Polytope::from_faces(faces);
}

std::vector<Polytope> load_polytopes(std::span<const std::uint8_t> bytes, Format format) {
  if (format == Format::planar_code) return parse_planar_code(bytes);
  std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  std::vector<Polytope> out;
  out.push_back(parse_face_list(text));
  return out;
}

Polytope load_polytope(std::span<const std::uint8_t> bytes, Format format) {
  auto all = load_polytopes(bytes, format);
  if (all.size() != 1)
    throw FormatError("expected exactly one polytope, found " + std::to_string(all.size()));
  return std::move(all.front());
}

std::vector<std::uint8_t> to_planar_code(std::span<const Polytope> polytopes) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& p : polytopes) {
    if (p.vertex_count() > 255)
      throw FormatError("planar_code output is limited to 255 vertices");
    out.push_back(static_cast<std::uint8_t>(p.vertex_count()));
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      for (VertexId w : p.rotation(v)) out.push_back(static_cast<std::uint8_t>(w + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::string to_face_list(const Polytope& p) {
  std::ostringstream os;
  os << "# " << p.facet_count() << " facets, " << p.vertex_count() << " vertices\n";
  for (FacetId f = 0; f < p.facet_count(); ++f) {
    const auto verts = p.facet_vertices(f);
    for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? " " : "") << verts[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace pogorelov
