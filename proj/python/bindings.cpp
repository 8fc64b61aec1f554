#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "menos/json_io.hpp"

namespace py = pybind11;

namespace {

menos::Povm povm_from_arrays(const std::vector<menos::CMatrix>& elements) {
  std::vector<menos::HermitianMatrix> ops;
  ops.reserve(elements.size());
  for (const auto& e : elements) ops.emplace_back(e);
  return menos::Povm(std::move(ops));
}

std::vector<menos::CMatrix> povm_to_arrays(const menos::Povm& m) {
  std::vector<menos::CMatrix> out;
  out.reserve(m.size());
  for (const auto& e : m.elements()) out.push_back(e.mat());
  return out;
}

menos::ModelAtPoint make_model(double theta, const menos::CMatrix& rho,
                               const menos::CMatrix& drho,
                               std::optional<double> qfi_known) {
  return menos::ModelAtPoint(theta, menos::HermitianMatrix(rho),
                             menos::HermitianMatrix(drho), qfi_known);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fisher information, noise susceptibility and QCRB tooling";

  py::register_exception<menos::Error>(m, "MenosError", PyExc_ValueError);

  py::class_<menos::Povm>(m, "Povm")
      .def(py::init(&povm_from_arrays), py::arg("elements"))
      .def_property_readonly("dim", &menos::Povm::dim)
      .def("__len__", &menos::Povm::size)
      .def_property_readonly("elements", &povm_to_arrays);

  py::class_<menos::ModelAtPoint>(m, "ModelAtPoint")
      .def(py::init(&make_model), py::arg("theta"), py::arg("rho"),
           py::arg("drho"), py::arg("qfi_known") = std::nullopt)
      .def_readonly("theta", &menos::ModelAtPoint::theta)
      .def_property_readonly(
          "rho", [](const menos::ModelAtPoint& mdl) { return mdl.rho.mat(); })
      .def_property_readonly(
          "drho", [](const menos::ModelAtPoint& mdl) { return mdl.drho.mat(); })
      .def_readonly("qfi_known", &menos::ModelAtPoint::qfi_known);

  py::class_<menos::OutcomeRecord>(m, "OutcomeRecord")
      .def_readonly("p", &menos::OutcomeRecord::p)
      .def_readonly("dp", &menos::OutcomeRecord::dp)
      .def_readonly("l", &menos::OutcomeRecord::l)
      .def_readonly("informative", &menos::OutcomeRecord::informative);

  py::class_<menos::OutcomeStats>(m, "OutcomeStats")
      .def_readonly("outcomes", &menos::OutcomeStats::outcomes)
      .def_readonly("cfi", &menos::OutcomeStats::cfi);

  py::class_<menos::MenosReport>(m, "MenosReport")
      .def_readonly("chi", &menos::MenosReport::chi)
      .def_readonly("l_min", &menos::MenosReport::l_min)
      .def_readonly("l_max", &menos::MenosReport::l_max)
      .def_readonly("g_max", &menos::MenosReport::g_max)
      .def_readonly("cfi", &menos::MenosReport::cfi)
      .def_readonly("min_index", &menos::MenosReport::min_index)
      .def_readonly("max_index", &menos::MenosReport::max_index)
      .def_readonly("worst_noise", &menos::MenosReport::worst_noise);

  py::class_<menos::SaturationReport>(m, "SaturationReport")
      .def_readonly("saturates", &menos::SaturationReport::saturates)
      .def_readonly("max_condition1_residual",
                    &menos::SaturationReport::max_condition1_residual)
      .def_readonly("max_condition2_residual",
                    &menos::SaturationReport::max_condition2_residual)
      .def_readonly("cfi_gap", &menos::SaturationReport::cfi_gap)
      .def_readonly("cfi", &menos::SaturationReport::cfi)
      .def_readonly("qfi", &menos::SaturationReport::qfi);

  py::class_<menos::ChiQResult>(m, "ChiQResult")
      .def_readonly("phi_s", &menos::ChiQResult::phi_s)
      .def_readonly("phi_a", &menos::ChiQResult::phi_a)
      .def_readonly("chi_q", &menos::ChiQResult::chi_q)
      .def_readonly("cfi_at_optimum", &menos::ChiQResult::cfi_at_optimum)
      .def_readonly("evaluations", &menos::ChiQResult::evaluations);

  py::class_<menos::SuperresConstants>(m, "SuperresConstants")
      .def_readonly("sigma", &menos::SuperresConstants::sigma)
      .def_readonly("theta", &menos::SuperresConstants::theta)
      .def_readonly("delta", &menos::SuperresConstants::delta)
      .def_readonly("gamma", &menos::SuperresConstants::gamma)
      .def_readonly("c3", &menos::SuperresConstants::c3)
      .def_readonly("c4", &menos::SuperresConstants::c4)
      .def_readonly("alpha", &menos::SuperresConstants::alpha)
      .def_readonly("beta_s", &menos::SuperresConstants::beta_s)
      .def_readonly("beta_a", &menos::SuperresConstants::beta_a);

  m.def("eig_hermitian", [](const menos::CMatrix& h) {
    const auto ed = menos::eig_hermitian(menos::HermitianMatrix(h));
    return py::make_tuple(ed.eigenvalues, ed.eigenvectors);
  });
  m.def("trace_norm",
        [](const menos::CMatrix& h) { return menos::trace_norm(menos::HermitianMatrix(h)); });
  m.def("psd_sqrt", [](const menos::CMatrix& p) {
    return menos::psd_sqrt(menos::HermitianMatrix(p)).mat();
  });
  m.def("sld", [](const menos::CMatrix& rho, const menos::CMatrix& drho) {
    return menos::sld(menos::HermitianMatrix(rho), menos::HermitianMatrix(drho)).mat();
  });
  m.def("qfi", [](const menos::CMatrix& rho, const menos::CMatrix& drho) {
    return menos::qfi(menos::HermitianMatrix(rho), menos::HermitianMatrix(drho));
  });

  m.def("validate", [](const menos::Povm& p) {
    const auto report = menos::validate(p);
    py::dict d;
    d["passed"] = report.passed;
    d["min_eigenvalues"] = report.min_eigenvalues;
    d["completeness_residual"] = report.completeness_residual;
    return d;
  });
  m.def("projective_from_states", [](const std::vector<menos::CVector>& states) {
    return menos::projective_from_states(states);
  });
  m.def("equator_projective_povm", &menos::equator_projective_povm, py::arg("phi"));
  m.def("mix", &menos::mix, py::arg("m"), py::arg("n"), py::arg("eps"));
  m.def("coarse_grain", [](const menos::Povm& p, const Eigen::MatrixXd& t) {
    return menos::coarse_grain(p, menos::StochasticMap(t));
  });
  m.def("pad_with_zero_elements", &menos::pad_with_zero_elements, py::arg("m"),
        py::arg("target_outcomes"));
  m.def("random_povm", &menos::random_povm, py::arg("dim"), py::arg("outcomes"),
        py::arg("seed"));
  m.def("random_equator_povm", &menos::random_equator_povm, py::arg("outcomes"),
        py::arg("seed"));

  m.def("pure_canonicalize", [](const menos::CVector& psi, const menos::CVector& dpsi,
                                double theta) {
    return menos::pure_canonicalize(psi, dpsi, theta);
  }, py::arg("psi"), py::arg("dpsi"), py::arg("theta") = 0.0);
  m.def("interferometer_stats", [](double theta, double phi, double v) {
    const auto a = menos::interferometer_stats(theta, phi, v);
    std::vector<std::pair<double, double>> probs;
    for (const auto& o : a.probs) probs.emplace_back(o.p, o.dp);
    return probs;
  }, py::arg("theta"), py::arg("phi"), py::arg("visibility"));
  m.def("interferometer_model", &menos::interferometer_model, py::arg("theta"),
        py::arg("phi"));
  m.def("superres_constants", &menos::superres_constants, py::arg("theta"),
        py::arg("sigma"));
  m.def("superres_model", &menos::superres_model, py::arg("theta"), py::arg("sigma"));
  m.def("hg_mode_stats", [](double theta, double sigma, int modes) {
    const auto a = menos::hg_mode_stats(theta, sigma, modes);
    std::vector<std::pair<double, double>> probs;
    for (const auto& o : a.probs) probs.emplace_back(o.p, o.dp);
    return probs;
  }, py::arg("theta"), py::arg("sigma"), py::arg("modes"));

  m.def("outcome_stats", &menos::outcome_stats, py::arg("model"), py::arg("povm"));
  m.def("stats_from_analytic", [](const std::vector<std::pair<double, double>>& probs,
                                  const std::string& description) {
    std::vector<menos::AnalyticOutcomeModel::Outcome> outcomes;
    outcomes.reserve(probs.size());
    for (const auto& [p, dp] : probs) outcomes.push_back({p, dp});
    return menos::stats_from_analytic(
        menos::AnalyticOutcomeModel(std::move(outcomes), description));
  }, py::arg("probs"), py::arg("description") = "analytic");
  m.def("crb", &menos::crb, py::arg("cfi"), py::arg("n"));
  m.def("g_functional", &menos::g_functional, py::arg("model"), py::arg("stats"),
        py::arg("noise"));
  m.def("chi_pair", &menos::chi_pair, py::arg("model"), py::arg("stats_m"),
        py::arg("m"), py::arg("noise"));
  m.def("chi_menos", &menos::chi_menos, py::arg("model"), py::arg("stats"));
  m.def("chi_bruteforce", &menos::chi_bruteforce, py::arg("model"), py::arg("stats"),
        py::arg("m"), py::arg("trials"), py::arg("seed"));

  m.def("check_saturation", &menos::check_saturation, py::arg("model"),
        py::arg("povm"), py::arg("tol") = menos::tol::saturation);
  m.def("is_equator_povm", &menos::is_equator_povm, py::arg("povm"),
        py::arg("tol") = 1e-9);
  m.def("superres_family_povm", &menos::superres_family_povm, py::arg("phi_s"),
        py::arg("phi_a"));
  m.def("minimize_chi_q_superres", &menos::minimize_chi_q_superres,
        py::arg("theta"), py::arg("sigma"), py::arg("grid_n") = 48,
        py::arg("refine_iters") = 3);

  m.def("povm_to_json",
        [](const menos::Povm& p) { return menos::povm_to_json(p).dump(); });
  m.def("povm_from_json", [](const std::string& text) {
    return menos::povm_from_json(nlohmann::json::parse(text));
  });
  m.def("model_to_json", [](const menos::ModelAtPoint& model) {
    return menos::model_to_json(model).dump();
  });
  m.def("model_from_json", [](const std::string& text) {
    return menos::model_from_json(nlohmann::json::parse(text));
  });
}
