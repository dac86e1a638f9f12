#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "pogorelov/belts.hpp"
#include "pogorelov/charfun.hpp"
#include "pogorelov/cli.hpp"
#include "pogorelov/colouring.hpp"
#include "pogorelov/invariants.hpp"
#include "pogorelov/polytope.hpp"

namespace py = pybind11;
using namespace pogorelov;

namespace {

std::vector<std::uint8_t> as_bytes(const py::object& data) {
  if (py::isinstance<py::bytes>(data)) {
    const std::string s = data.cast<std::string>();
    return {s.begin(), s.end()};
  }
  const std::string s = data.cast<std::string>();
  return {s.begin(), s.end()};
}

Colouring to_colouring(const std::vector<int>& colours) {
  std::vector<Colour> c;
  for (int x : colours) {
    if (x < 1 || x > 4) throw py::value_error("colours must lie in 1..4");
    c.push_back(static_cast<Colour>(x));
  }
  return Colouring(std::move(c));
}

std::vector<int> from_colouring(const Colouring& chi) { return {chi.colours().begin(), chi.colours().end()}; }

CharFun to_charfun(const std::vector<Vec3>& values, const std::string& ring) {
  if (ring != "z" && ring != "f2") throw py::value_error("ring must be 'z' or 'f2'");
  return CharFun{ring == "z" ? Ring::z : Ring::f2, values};
}

py::object witness(const PogorelovVerdict& v) {
  if (std::holds_alternative<TetrahedronWitness>(v.witness)) return py::str("tetrahedron");
  if (const auto* b = std::get_if<Belt>(&v.witness)) return py::cast(b->facets);
  return py::none();
}

CodeMode code_mode(const std::string& mode) {
  if (mode == "s4") return CodeMode::s4;
  if (mode == "s4_x_aut") return CodeMode::s4_x_aut;
  throw py::value_error("mode must be 's4' or 's4_x_aut'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Right-angled polytopes, 4-colourings and characteristic functions";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidPolytope>(m, "InvalidPolytope", PyExc_ValueError);

  py::class_<Polytope>(m, "Polytope")
      .def_static("from_faces", &Polytope::from_faces, py::arg("faces"))
      .def_static("from_rotation", &Polytope::from_rotation, py::arg("rotation"))
      .def_property_readonly("vertex_count", &Polytope::vertex_count)
      .def_property_readonly("edge_count", &Polytope::edge_count)
      .def_property_readonly("facet_count", &Polytope::facet_count)
      .def("facet_vertices", &Polytope::facet_vertices, py::arg("facet"))
      .def("faces",
           [](const Polytope& p) {
             std::vector<std::vector<VertexId>> out;
             for (FacetId f = 0; f < p.facet_count(); ++f) out.push_back(p.facet_vertices(f));
             return out;
           })
      .def("adjacent", &Polytope::adjacent)
      .def("canonical_code", [](const Polytope& p, bool refl) { return canonical_code(p, refl).hex(); },
           py::arg("reflections") = true)
      .def("to_face_list", [](const Polytope& p) { return to_face_list(p); })
      .def("to_planar_code",
           [](const Polytope& p) {
             const auto b = to_planar_code(std::span<const Polytope>(&p, 1));
             return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
           })
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; })
      .def("__repr__", [](const Polytope& p) {
        return "<Polytope facets=" + std::to_string(p.facet_count()) +
               " vertices=" + std::to_string(p.vertex_count()) + ">";
      });

  m.def("load", [](const py::object& data) {
        const auto bytes = as_bytes(data);
        return load_polytopes(bytes, detect_format(bytes));
      },
      py::arg("data"), "Parse planar_code bytes or face_list text into polytopes.");
  m.def("load_file", [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw py::value_error("cannot read " + path);
        const std::vector<std::uint8_t> bytes(std::istreambuf_iterator<char>(in), {});
        return load_polytopes(bytes, detect_format(bytes));
      },
      py::arg("path"));

  m.def("is_pogorelov", [](const Polytope& p) {
        const auto v = is_pogorelov(p);
        return py::make_tuple(v.pogorelov, witness(v));
      },
      py::arg("polytope"), "(verdict, witness): witness is 'tetrahedron', a belt, or None.");
  m.def("find_belts", [](const Polytope& p, int k) {
        std::vector<std::vector<FacetId>> out;
        for (const auto& b : find_belts(p, k)) out.push_back(b.facets);
        return out;
      },
      py::arg("polytope"), py::arg("k"));
  m.def("fullerene_status", [](const Polytope& p) {
        const auto s = fullerene_status(p);
        return py::dict(py::arg("fullerene") = s.fullerene, py::arg("ipr") = s.ipr,
                        py::arg("adjacent_pentagon_pairs") = s.adjacent_pentagon_pairs);
      });

  m.def("count_colourings", &count_colourings, py::arg("polytope"));
  m.def("colourings", [](const Polytope& p) {
        std::vector<std::vector<int>> out;
        for_each_colouring(p, [&](const Colouring& c) {
          out.push_back(from_colouring(c));
          return true;
        });
        return out;
      },
      py::arg("polytope"));
  m.def("is_complete", [](const Polytope& p, const std::vector<int>& chi) {
        const auto c = is_complete(p, to_colouring(chi));
        std::vector<std::vector<int>> missing;
        for (const auto& t : c.missing) missing.push_back({t[0], t[1], t[2]});
        return py::make_tuple(c.complete, missing);
      },
      py::arg("polytope"), py::arg("colouring"));
  m.def("colourings_equivalent",
        [](const Polytope& p, const std::vector<int>& a, const Polytope& q, const std::vector<int>& b,
           bool up_to_iso, bool reflections) {
          return colourings_equivalent(p, to_colouring(a), q, to_colouring(b),
                                       up_to_iso ? EquivalenceMode::up_to_iso : EquivalenceMode::strict_s4,
                                       reflections)
              .has_value();
        },
        py::arg("p"), py::arg("a"), py::arg("q"), py::arg("b"), py::arg("up_to_iso") = false,
        py::arg("reflections") = true);

  m.def("lambda_chi",
        [](const Polytope& p, const std::vector<int>& chi, std::optional<std::int64_t> k, const std::string& ring) {
          const auto c = to_colouring(chi);
          auto lam = k ? lambda_chi_k(p, c, *k) : lambda_chi(p, c);
          if (ring != "z" && ring != "f2") throw py::value_error("ring must be 'z' or 'f2'");
          if (ring == "f2") lam = reduce_mod2(lam);
          return lam.values;
        },
        py::arg("polytope"), py::arg("colouring"), py::arg("k") = std::nullopt, py::arg("ring") = "z");
  m.def("validate_charfun",
        [](const Polytope& p, const std::vector<Vec3>& values, const std::string& ring) {
          return validate_charfun(p, to_charfun(values, ring)).ok;
        },
        py::arg("polytope"), py::arg("values"), py::arg("ring") = "z");
  m.def("charfuns_equivalent",
        [](const Polytope& p, const std::vector<Vec3>& a, const std::vector<Vec3>& b,
           const std::string& ring) -> std::optional<Mat3> {
          const auto t = charfuns_equivalent(p, to_charfun(a, ring), to_charfun(b, ring));
          if (!t) return std::nullopt;
          return t->g;
        },
        py::arg("polytope"), py::arg("a"), py::arg("b"), py::arg("ring") = "z",
        "The matrix g of an equivalence, or None.");
  m.def("is_orientable",
        [](const Polytope& p, const std::vector<Vec3>& values) {
          return is_orientable_small_cover(p, to_charfun(values, "f2")).orientable;
        },
        py::arg("polytope"), py::arg("values_f2"));
  m.def("betti",
        [](const Polytope& p, const std::string& kind) {
          if (kind != "small_cover" && kind != "quasitoric")
            throw py::value_error("kind must be 'small_cover' or 'quasitoric'");
          return betti_z2(p, kind == "quasitoric" ? ManifoldKind::quasitoric : ManifoldKind::small_cover);
        },
        py::arg("polytope"), py::arg("kind") = "small_cover");
  m.def("classify",
        [](const std::vector<Polytope>& ps, const std::string& mode) {
          const auto census = classify(ps, code_mode(mode));
          py::list out;
          for (const auto& e : census.types)
            out.append(py::dict(py::arg("code") = e.code.hex(), py::arg("multiplicity") = e.multiplicity,
                                py::arg("facets") = e.facet_count, py::arg("pogorelov") = e.verdict.pogorelov,
                                py::arg("automorphisms") = e.automorphisms, py::arg("colourings") = e.colourings,
                                py::arg("classes") = census.classes(e), py::arg("classes_s4") = e.classes_s4,
                                py::arg("classes_s4_x_aut") = e.classes_s4_x_aut,
                                py::arg("complete_colourings") = e.complete_colourings));
          return out;
        },
        py::arg("polytopes"), py::arg("mode") = "s4");

  m.def("run_cli",
        [](std::vector<std::string> args, const py::object& stdin_data) {
          args.insert(args.begin(), "pogorelov");
          const auto bytes = as_bytes(stdin_data);
          std::istringstream in(std::string(bytes.begin(), bytes.end()));
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = cli_run(args, in, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = py::str(""), "(exit code, stdout, stderr)");
}
