#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uniton/canonical/canonical.hpp"
#include "uniton/deform/deform.hpp"
#include "uniton/errors.hpp"
#include "uniton/unitary/unitary.hpp"

namespace py = pybind11;
using namespace uniton;

namespace {

// JSON crosses the boundary as text; the Python package wraps it in json.loads.
using Json = nlohmann::json;

grassmann::PlaneFamily plane(const std::string& text) { return grassmann::plane_family_from_json(Json::parse(text)); }

canonical::CanonicalPotential potential(const std::vector<int>& type, const std::string& b1) {
  canonical::UnitonType t(type);
  auto res = canonical::solve_canonical(t, canonical::B1_from_json(t, Json::parse(b1)));
  if (auto* obs = std::get_if<canonical::CanonicalObstruction>(&res)) throw InputError(obs->message());
  return std::get<canonical::CanonicalPotential>(res);
}

py::tuple integrate(const std::string& f) {
  auto res = exactalg::integrate(exactalg::parse_rational_function(f));
  if (auto* g = std::get_if<exactalg::RationalFunction>(&res)) return py::make_tuple(true, g->str());
  return py::make_tuple(false, std::get<exactalg::IntegrationObstruction>(res).remainder.str());
}

std::string model_plane(const std::vector<int>& type, const std::string& b1) {
  auto pot = potential(type, b1);
  loopalg::LoopProduct H(pot.type.n(), {loopalg::make_diag(pot.type.v())});
  if (!pot.full().is_zero()) H.append(loopalg::make_exp(pot.full()));
  return grassmann::to_json(grassmann::model_from_loop(H, pot.type)).dump();
}

std::string cpn_plane(const std::vector<std::string>& f, int i) {
  std::vector<exactalg::RationalFunction> fs;
  for (const auto& s : f) fs.push_back(exactalg::parse_rational_function(s));
  return grassmann::to_json(grassmann::plane_from_frame(canonical::cpn_frame(fs, i))).dump();
}

unitary::Mat eells_wood(const std::vector<std::string>& f, int i, unitary::cplx z) {
  std::vector<exactalg::RationalFunction> fs;
  for (const auto& s : f) fs.push_back(exactalg::parse_rational_function(s));
  return unitary::eells_wood(fs, i, z);
}

std::string harmonic_residual(const std::string& w, unitary::cplx center, double h, int half_width) {
  auto W = plane(w);
  auto s = unitary::sample_harmonic([&](unitary::cplx z) { return unitary::phi_from_plane(W, z); }, center, h, half_width);
  return unitary::to_json(unitary::harmonic_residual(s)).dump();
}

std::string deform_path(const std::string& alpha, const std::string& beta, const std::string& delta, int m) {
  auto d = deform::NormalForm::from_alpha_beta(exactalg::parse_rational_function(alpha),
                                               exactalg::parse_rational_function(beta),
                                               exactalg::parse_rational_function(delta));
  return deform::to_json(deform::verify_path(deform::lowering_path(d, m))).dump();
}

}  // namespace

PYBIND11_MODULE(_uniton, m) {
  m.doc() = "Exact canonical unitons, Grassmannian models and their unitary factorization";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("normalize", [](const std::string& f) { return exactalg::parse_rational_function(f).str(); }, py::arg("f"));
  m.def("integrate", &integrate, py::arg("f"),
        "(True, antiderivative) or (False, Hermite remainder) for a rational function of z.");

  m.def("types", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& t : canonical::enumerate_types(n)) out.push_back(t.v());
    return out;
  }, py::arg("n"));
  m.def("solve_canonical", [](const std::vector<int>& type, const std::string& b1) {
    return canonical::to_json(potential(type, b1)).dump();
  }, py::arg("type"), py::arg("b1"));
  m.def("model_plane", &model_plane, py::arg("type"), py::arg("b1"));
  m.def("cpn_plane", &cpn_plane, py::arg("f"), py::arg("i"));

  m.def("pluecker_degree", [](const std::string& w) { return grassmann::pluecker_degree(plane(w)); }, py::arg("plane"));
  m.def("uniton_width", [](const std::string& w) { return grassmann::uniton_width(plane(w)); }, py::arg("plane"));
  m.def("check_ces", [](const std::string& w) { return grassmann::check_ces(plane(w)).accepted; }, py::arg("plane"));

  m.def("phi", [](const std::string& w, unitary::cplx z) { return unitary::phi_from_plane(plane(w), z); },
        py::arg("plane"), py::arg("z"));
  m.def("eells_wood", &eells_wood, py::arg("f"), py::arg("i"), py::arg("z"));
  m.def("harmonic_residual", &harmonic_residual, py::arg("plane"), py::arg("center"), py::arg("h"),
        py::arg("half_width"));

  m.def("deform", &deform_path, py::arg("alpha"), py::arg("beta"), py::arg("delta"), py::arg("m") = 10);

  m.def("bound_table", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : canonical::bound_table()) out.emplace_back(r.group, r.bound);
    return out;
  });
  m.def("uniton_bound", &canonical::uniton_bound, py::arg("label"));
}
