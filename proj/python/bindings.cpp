#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kato/hk_audit.hpp"
#include "kato/kato_inversion.hpp"
#include "kato/lebedev.hpp"
#include "kato/local_scaling.hpp"
#include "kato/report_io.hpp"
#include "kato/spec_io.hpp"

namespace py = pybind11;

namespace {

using Point = std::array<double, 3>;

kato::DensityModel model_of(const std::string& spec) {
  return kato::parse_density_spec_text(spec).model;
}

std::vector<double> evaluate(const std::string& spec, const std::vector<Point>& points) {
  const auto model = model_of(spec);
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(kato::evaluate(model, kato::Vec3(p[0], p[1], p[2])));
  return out;
}

std::string invert(const std::string& spec, int seeds, int lebedev_order, bool snap) {
  const auto model = model_of(spec);
  kato::InversionOptions opt;
  opt.topology.seeds_per_axis = seeds;
  opt.topology.radial.lebedev_order = lebedev_order;
  opt.snap_charges = snap;
  return kato::to_json(kato::reconstruct_potential(model, kato::SearchBox::around(model), opt)).dump();
}

std::string verify_cusp(const std::string& spec, double tol) {
  const auto model = model_of(spec);
  if (!model.frame()) throw kato::InvalidModel("verify_cusp needs a declared frame");
  return kato::to_json(kato::verify_cusp_conditions(model, *model.frame(), tol)).dump();
}

std::string audit_hydrogenic(double z1, double z2, double offset1, double offset2, double tol) {
  return kato::to_json(kato::audit_pair(kato::OneElectronSystem::hydrogenic(z1, offset1),
                                        kato::OneElectronSystem::hydrogenic(z2, offset2), tol))
      .dump();
}

std::string scaling_map(const std::string& source, const std::string& target, double r_min,
                        double r_max, int points) {
  const auto map = kato::solve_scaling_map(kato::RadialDensity::from_model(model_of(source)),
                                           kato::RadialDensity::from_model(model_of(target)),
                                           kato::ScalingGrid{r_min, r_max, points});
  return kato::to_json(map).dump();
}

py::tuple potential_from_hydrogenic(double z, const std::vector<double>& radii) {
  const auto orbital = kato::RadialOrbital::hydrogenic(z);
  const auto sampled = kato::potential_from_wavefunction(orbital, -0.5 * z * z);
  std::vector<double> values;
  for (double r : radii) values.push_back(sampled(r));
  return py::make_tuple(sampled.radii, sampled.values, values);
}

py::tuple lebedev(int order) {
  std::vector<Point> dirs;
  std::vector<double> weights;
  for (const auto& p : kato::lebedev_grid(order)) {
    dirs.push_back({p.direction.x(), p.direction.y(), p.direction.z()});
    weights.push_back(p.weight);
  }
  return py::make_tuple(dirs, weights);
}

}  // namespace

PYBIND11_MODULE(_kato, m) {
  m.doc() = "Kato-cusp density inversion, Hohenberg-Kohn audit and local-scaling maps.";
  m.attr("__version__") = KATO_VERSION;

  auto& base = py::register_exception<kato::Error>(m, "KatoError", PyExc_RuntimeError);
  py::register_exception<kato::NoCuspsFound>(m, "NoCuspsFound", base);
  py::register_exception<kato::MassMismatch>(m, "MassMismatch", base);

  m.def("normalized_spec", [](const std::string& spec) {
    const auto parsed = kato::parse_density_spec_text(spec);
    return kato::to_json(parsed.model, parsed.potential_offset).dump();
  });
  m.def("evaluate", &evaluate, py::arg("spec"), py::arg("points"));
  m.def("invert", &invert, py::arg("spec"), py::arg("seeds") = 8, py::arg("lebedev_order") = 110,
        py::arg("snap") = false);
  m.def("verify_cusp", &verify_cusp, py::arg("spec"), py::arg("tol") = 1e-3);
  m.def("audit_hydrogenic", &audit_hydrogenic, py::arg("z1"), py::arg("z2"),
        py::arg("offset1") = 0.0, py::arg("offset2") = 0.0, py::arg("tol") = 1e-10);
  m.def("scaling_map", &scaling_map, py::arg("source"), py::arg("target"), py::arg("r_min") = 1e-3,
        py::arg("r_max") = 20.0, py::arg("points") = 256);
  m.def("potential_from_hydrogenic", &potential_from_hydrogenic, py::arg("z"),
        py::arg("radii") = std::vector<double>{});
  m.def("lebedev_grid", &lebedev, py::arg("order"));
}
