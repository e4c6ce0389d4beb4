#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ford/config.hpp"
#include "ford/errors.hpp"
#include "ford/pipeline.hpp"
#include "ford/svg.hpp"
#include "ford/tunnel.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Ford domains of rank-two cusped quotient groups: certification, "
      "core-tunnel lengths, filling-slope arithmetic";

  py::register_exception<ford::Error>(m, "FordError");

  py::class_<ford::MoebiusMap>(m, "Moebius")
      .def_static("make", &ford::MoebiusMap::make, "a"_a, "b"_a, "c"_a, "d"_a)
      .def_static("identity", &ford::MoebiusMap::identity)
      .def_static("translation", &ford::MoebiusMap::translation, "t"_a)
      .def_readonly("a", &ford::MoebiusMap::a)
      .def_readonly("b", &ford::MoebiusMap::b)
      .def_readonly("c", &ford::MoebiusMap::c)
      .def_readonly("d", &ford::MoebiusMap::d)
      .def("det", &ford::MoebiusMap::det)
      .def("inverse",
           [](const ford::MoebiusMap& self) { return ford::inverse(self); })
      .def("__mul__",
           [](const ford::MoebiusMap& self, const ford::MoebiusMap& other) {
             return ford::compose(self, other);
           })
      .def(
          "apply",
          [](const ford::MoebiusMap& self,
             ford::complexd z) -> std::optional<ford::complexd> {
            const auto p = ford::apply(self, z);
            if (p.at_infinity) return std::nullopt;
            return p.z;
          },
          "z"_a, "image of a boundary point; None means infinity")
      .def("isometric_sphere",
           [](const ford::MoebiusMap& self) {
             const auto s = ford::isometric_sphere(self);
             return py::make_tuple(s.center, s.radius);
           })
      .def("__repr__", [](const ford::MoebiusMap& self) {
        auto c = [](ford::complexd z) {
          return "(" + ford::format_double(std::real(z)) + (std::imag(z) < 0 ? "-" : "+") +
                 ford::format_double(std::abs(std::imag(z))) + "j)";
        };
        return "Moebius[" + c(self.a) + ", " + c(self.b) + "; " + c(self.c) +
               ", " + c(self.d) + "]";
      });

  m.def("epsilon_for_target", &ford::epsilon_for_target, "R"_a, "safety"_a);
  m.def(
      "family_generator",
      [](double eps) { return ford::family_generator(eps); },
      "eps"_a);
  m.def(
      "analyze_json",
      [](const std::string& config_json) {
        return ford::report_json(
            ford::run_analysis(ford::parse_config(config_json)));
      },
      "config_json"_a);
  m.def(
      "sweep_json",
      [](const std::string& config_json) {
        const auto cfg = ford::parse_config(config_json);
        return ford::sweep_json(ford::run_sweep(cfg), cfg);
      },
      "config_json"_a);
  m.def(
      "render_svg_json",
      [](const std::string& config_json) {
        return ford::render_svg(
            ford::run_analysis(ford::parse_config(config_json)));
      },
      "config_json"_a);
  m.def("homology_json", &ford::homology_json, "input_json"_a);
}
