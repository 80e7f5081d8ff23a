#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cosetal/cli.hpp"
#include "cosetal/text_format.hpp"

namespace py = pybind11;
using namespace cosetal;

namespace {

py::dict check_extension(const Workspace& ws, const std::string& name) {
  const KernelDiagram d = ws.kernel_diagram(name);
  py::dict out;
  const bool cokernel = is_cokernel(d);
  const bool cosetal = is_cosetal(d).holds;
  out["extension"] = cokernel;
  out["cosetal"] = cosetal;
  out["special_schreier"] = cokernel && is_special_schreier(d);
  out["eq_weakly_schreier"] = is_weakly_schreier(kernel_equivalence_split_extension(d).split).holds;
  out["total"] = describe_monoid(d.total());
  return out;
}

py::dict group_summary(const CohomologyGroup& g) {
  py::dict out;
  out["order"] = g.order();
  out["invariant_factors"] = g.invariant_factors();
  out["factor_sets"] = g.factor_sets().size();
  py::list carriers;
  for (const ClassRepresentative& rep : classify(g)) carriers.append(describe_monoid(rep.extension.total()));
  out["carriers"] = carriers;
  return out;
}

}  // namespace

PYBIND11_MODULE(_cosetal, m) {
  m.doc() = "Cosetal monoid extensions and their second cohomology";

  static py::exception<Error> error_type(m, "CosetalError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("witness") = std::vector<Index>(e.witness().begin(), e.witness().end());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command in process; returns (exit code, stdout, stderr).");

  m.def(
      "describe_monoid",
      [](const std::vector<std::vector<Index>>& rows, Index identity) {
        return describe_monoid(validate_monoid(rows, identity));
      },
      py::arg("rows"), py::arg("identity") = 0);

  py::class_<Workspace>(m, "Workspace")
      .def_static(
          "parse", [](const std::string& text) { return parse_workspace(text); }, py::arg("text"))
      .def_static("load", &load_workspace, py::arg("paths"))
      .def("monoids",
           [](const Workspace& ws) {
             std::vector<std::string> names;
             for (const auto& [name, _] : ws.monoids()) names.push_back(name);
             return names;
           })
      .def("extensions",
           [](const Workspace& ws) {
             std::vector<std::string> names;
             for (const auto& [name, _] : ws.extensions()) names.push_back(name);
             return names;
           })
      .def("check", &check_extension, py::arg("extension"))
      .def(
          "cohomology",
          [](const Workspace& ws, const std::string& kernel, const std::string& quotient) {
            const FiniteAbelianGroup n = ws.group(kernel);
            const FiniteMonoid& h = ws.monoid(quotient);
            return group_summary(cohomology_group(
                validate_data(n, h, PairPartition::discrete(n.size(), h.size()),
                              ActionTable::trivial(h.size(), n.size()))));
          },
          py::arg("kernel"), py::arg("quotient"),
          "H^2 for the discrete relation and trivial action.")
      .def(
          "cohomology_of",
          [](const Workspace& ws, const std::string& extension) {
            const ZetaWithGroup z = zeta(ws.kernel_diagram(extension));
            py::dict out = group_summary(z.group);
            out["class"] = z.result.class_id;
            return out;
          },
          py::arg("extension"), "H^2 of the extension's own data and the extension's class in it.");
}
