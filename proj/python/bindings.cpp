#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "terngrid/cli.hpp"
#include "terngrid/fit.hpp"
#include "terngrid/io.hpp"
#include "terngrid/pareto.hpp"
#include "terngrid/render.hpp"
#include "terngrid/verify.hpp"

namespace py = pybind11;
using namespace terngrid;

namespace {

GridDrawing drawing_from_text(const std::string& text) {
  const ParsedDrawing pd = drawing_from_json(Json::parse(text));
  if (!pd.drawing) throw std::invalid_argument("drawing has non-integral coordinates");
  return *pd.drawing;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planar orthogonal grid drawings of ternary trees";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("complete_tree_size", &complete_tree_size, py::arg("h"));
  m.def("algorithms", &algorithm_names);

  m.def(
      "frontier",
      [](int h) { return frontier(h).dimensions(); },
      py::arg("h"), "Pareto-optimal (width, height) pairs of 1-2 drawings of T_h.");
  m.def(
      "min_area",
      [](int h) {
        const MinArea a = min_area(h);
        return py::make_tuple(a.area, py::make_tuple(a.pair.width, a.pair.height));
      },
      py::arg("h"));

  m.def(
      "draw_json",
      [](const std::string& tree_spec, const std::string& algo) {
        py::gil_scoped_release release;
        return drawing_to_json(build_drawing(parse_tree_spec(tree_spec), algo)).dump();
      },
      py::arg("tree_spec"), py::arg("algo") = "general");
  m.def(
      "verify_json",
      [](const std::string& drawing) { return report_to_json(verify(drawing_from_text(drawing))).dump(); },
      py::arg("drawing"));
  m.def(
      "render_svg",
      [](const std::string& drawing, int cell_size, int node_radius, int margin) {
        return render_svg(drawing_from_text(drawing), RenderSpec{cell_size, node_radius, margin});
      },
      py::arg("drawing"), py::arg("cell_size") = 16, py::arg("node_radius") = 4, py::arg("margin") = 8);

  m.def(
      "fit_power_law",
      [](const std::vector<std::pair<double, double>>& points) {
        const PowerLawFit f = fit_power_law(points);
        return py::make_tuple(f.a, f.b, f.c, f.sse);
      },
      py::arg("points"), "Returns (a, b, c, sse) for area ~ a * n^b + c.");
  m.def("reference_area_table", [] {
    std::vector<std::tuple<int, std::int64_t, std::int64_t>> rows;
    for (const AreaRow& r : reference_area_table()) rows.emplace_back(r.h, r.n, r.area);
    return rows;
  });
}
