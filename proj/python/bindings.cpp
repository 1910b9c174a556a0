#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gentle/canonical.hpp"
#include "gentle/cartan.hpp"
#include "gentle/classification.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/io.hpp"
#include "gentle/mutation.hpp"
#include "gentle/normal_form.hpp"
#include "gentle/phi.hpp"
#include "gentle/report.hpp"

namespace py = pybind11;
using namespace gentle;

namespace {

ThreadConvention convention(std::string const& name) {
  if (name == "paper") return ThreadConvention::paper;
  if (name == "ag") return ThreadConvention::ag;
  throw std::invalid_argument("thread convention must be 'paper' or 'ag'");
}

}  // namespace

PYBIND11_MODULE(_gentle, m) {
  m.doc() = "Native core of gentle_quivers; structured results are JSON text.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<BoundQuiver>(m, "BoundQuiver")
      .def(py::init([](std::vector<std::string> vertices,
                       std::vector<std::tuple<std::string, std::string, std::string>> arrows,
                       std::vector<std::pair<std::string, std::string>> relations,
                       std::string name) {
             std::vector<Arrow> as;
             for (auto& [n, s, t] : arrows) as.push_back({n, s, t});
             std::vector<Relation> rs;
             for (auto& [a, b] : relations) rs.push_back({a, b});
             return BoundQuiver(std::move(vertices), std::move(as), std::move(rs),
                                std::move(name));
           }),
           py::arg("vertices"), py::arg("arrows"), py::arg("relations") = py::list(),
           py::arg("name") = "")
      .def_property_readonly("name", &BoundQuiver::name)
      .def_property_readonly("vertices", &BoundQuiver::vertex_names)
      .def_property_readonly("arrows",
                             [](BoundQuiver const& q) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (auto const& a : q.arrow_list())
                                 out.emplace_back(a.name, a.source, a.target);
                               return out;
                             })
      .def_property_readonly("relations",
                             [](BoundQuiver const& q) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (auto const& r : q.relation_list()) out.emplace_back(r.first, r.second);
                               return out;
                             })
      .def("serialize", &serialize)
      .def("digest", &digest)
      .def("canonical_digest", &canonical_digest)
      .def("to_json", [](BoundQuiver const& q) { return to_json(q).dump(); })
      .def("__repr__", [](BoundQuiver const& q) {
        return "<BoundQuiver '" + q.name() + "' " + std::to_string(q.vertex_count())
               + " vertices, " + std::to_string(q.arrow_count()) + " arrows, "
               + std::to_string(q.relation_count()) + " relations>";
      });

  m.def("parse_quiver", [](std::string const& text) { return parse_quiver(text); });
  m.def("read_quiver_file", &read_quiver_file);
  m.def("fixture", &fixture);
  m.def("fixture_names", &fixture_names);
  m.def("normal_form", [](unsigned mm, std::size_t r, std::size_t s) {
    return make_normal_form({mm, r, s});
  }, py::arg("m"), py::arg("r"), py::arg("s"));

  m.def("is_gentle", &is_gentle);
  m.def("validate_json", [](BoundQuiver const& q) { return to_json(validate_gentle(q)).dump(); });
  m.def("is_finite_dimensional", &is_finite_dimensional);
  m.def("is_connected", &is_connected);
  m.def("euler_characteristic", &euler_characteristic);
  m.def("is_m_branched", &is_m_branched);
  m.def("is_A_branched", &is_A_branched);
  m.def("invariant_pair", [](BoundQuiver const& q, unsigned mm) {
    auto p = invariant_pair(q, mm);
    return std::make_pair(p.r, p.s);
  });
  m.def("classify_json", [](BoundQuiver const& q, std::optional<unsigned> mm) {
    return to_json(classify(q, mm)).dump();
  }, py::arg("quiver"), py::arg("m") = py::none());
  m.def("isomorphic", &isomorphic);

  m.def("phi_json", [](BoundQuiver const& q, std::string const& conv) {
    return to_json(phi(q, convention(conv))).dump();
  }, py::arg("quiver"), py::arg("convention") = "paper");

  m.def("hh_dims", [](BoundQuiver const& q, std::size_t max_degree, std::uint64_t p) {
    return hh_dims(q, max_degree, FieldSpec::with_characteristic(p)).dims;
  }, py::arg("quiver"), py::arg("max_degree"), py::arg("characteristic") = 0);

  m.def("cartan_matrix", [](BoundQuiver const& q) { return cartan_matrix(q).entries; });
  m.def("cartan_json", [](BoundQuiver const& q) {
    auto c = cartan_matrix(q);
    auto mat = to_int_matrix(c.entries);
    Json j = to_json(c);
    j["determinant"] = to_json(determinant(mat));
    j["smith_normal_form"] = to_json(smith_normal_form(mat));
    return j.dump();
  });

  m.def("admissible_vertices", [](BoundQuiver const& q) {
    std::vector<std::string> out;
    for (VertexId v : admissible_vertices(q)) out.push_back(q.vertex_name(v));
    return out;
  });
  m.def("mutate", [](BoundQuiver const& q, std::string const& v, bool co) {
    auto [r, step] = co ? comutate(q, v) : mutate(q, v);
    return std::make_pair(r, to_json(step).dump());
  }, py::arg("quiver"), py::arg("vertex"), py::arg("co") = false);
  m.def("reduce_json", [](BoundQuiver const& q, unsigned mm, std::size_t budget) {
    auto r = reduce_to_A_branched(q, mm, budget);
    return Json{{"complete", r.complete},
                {"quiver", to_json(r.result)},
                {"log", to_json(r.log)},
                {"macro_steps", r.macro_steps},
                {"searched_states", r.searched_states}}
        .dump();
  }, py::arg("quiver"), py::arg("m"), py::arg("budget") = default_search_budget);
  m.def("replay_json", [](std::string const& log) {
    return replay(mutation_log_from_json(Json::parse(log)));
  });
  m.def("equivalent_json", [](BoundQuiver const& a, BoundQuiver const& b, unsigned mm) {
    return to_json(derived_equivalent(a, b, mm)).dump();
  });
}
