#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modtwist/reports.hpp"
#include "modtwist/structure_file.hpp"

namespace py = pybind11;
using namespace modtwist;

namespace {

using Body = report::Outcome (*)(const StructureFile&);

/// (report JSON, structure file JSON or None)
std::pair<std::string, std::optional<std::string>> on_text(const std::string& command, Body body,
                                                           const std::string& text) {
  report::Outcome o;
  {
    py::gil_scoped_release release;
    o = report::guarded(command, [&] { return body(parse_structure(text)); });
  }
  std::optional<std::string> file;
  if (o.file) file = serialize_structure(*o.file);
  return {o.report.dump(), file};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact modular classes of twisted triangular r-matrices";
  for (const auto& [name, body] : std::vector<std::pair<const char*, Body>>{{"verify", report::verify},
                                                                            {"modular", report::modular},
                                                                            {"frobenius", report::frobenius},
                                                                            {"relations", report::relations},
                                                                            {"linearize", report::linearize}}) {
    const std::string command = name;
    const Body fn = body;
    m.def(
        name, [command, fn](const std::string& text) { return on_text(command, fn, text); }, py::arg("structure"));
  }
  m.def(
      "catalog",
      [](const std::string& name, int n, bool check) {
        report::Outcome o;
        {
          py::gil_scoped_release release;
          o = report::guarded("catalog", [&] { return report::catalog(name, n, check); });
        }
        std::optional<std::string> file;
        if (o.file) file = serialize_structure(*o.file);
        return std::pair{o.report.dump(), file};
      },
      py::arg("name"), py::arg("n") = 3, py::arg("check") = false);
  m.def(
      "render_text", [](const std::string& report) { return report::render_text(report::Json::parse(report)); },
      py::arg("report"));
}
