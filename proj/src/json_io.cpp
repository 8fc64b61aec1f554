#include "menos/json_io.hpp"

#include <cmath>

namespace menos {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
  return j.get<double>();
}

}  // namespace

json matrix_to_json(const HermitianMatrix& h) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < h.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < h.dim(); ++j) {
      row.push_back({h.mat()(i, j).real(), h.mat()(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HermitianMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix: expected a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InvalidInput("matrix: rows must all have the matrix dimension");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const json& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2) {
        throw InvalidInput("matrix: entries must be [re, im] pairs");
      }
      m(r, c) = Complex(require_number(entry[0], "matrix entry"),
                        require_number(entry[1], "matrix entry"));
    }
  }
  return HermitianMatrix(m);
}

json povm_to_json(const Povm& m) {
  json elements = json::array();
  for (const auto& e : m.elements()) elements.push_back(matrix_to_json(e));
  return json{{"dim", m.dim()}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("elements")) {
    throw InvalidInput("povm: expected {\"dim\", \"elements\"}");
  }
  const auto dim = static_cast<Eigen::Index>(require_number(j["dim"], "dim"));
  if (!j["elements"].is_array() || j["elements"].empty()) {
    throw InvalidInput("povm: elements must be a non-empty array");
  }
  std::vector<HermitianMatrix> elements;
  elements.reserve(j["elements"].size());
  for (const auto& e : j["elements"]) {
    elements.push_back(matrix_from_json(e));
    if (elements.back().dim() != dim) {
      throw InvalidInput("povm: element dimension does not match dim");
    }
  }
  return Povm(std::move(elements));
}

json model_to_json(const ModelAtPoint& model) {
  json j{{"theta", model.theta},
         {"rho", matrix_to_json(model.rho)},
         {"drho", matrix_to_json(model.drho)}};
  if (model.qfi_known) j["qfi"] = *model.qfi_known;
  return j;
}

ModelAtPoint model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("rho") ||
      !j.contains("drho")) {
    throw InvalidInput("model: expected {\"theta\", \"rho\", \"drho\"}");
  }
  std::optional<double> qfi_known;
  if (j.contains("qfi") && !j["qfi"].is_null()) {
    qfi_known = require_number(j["qfi"], "qfi");
  }
  return ModelAtPoint(require_number(j["theta"], "theta"),
                      matrix_from_json(j["rho"]), matrix_from_json(j["drho"]),
                      qfi_known);
}

json encode_real(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0.0 ? "inf" : "-inf";
}

json menos_report_to_json(const MenosReport& report) {
  return json{{"chi", encode_real(report.chi)},
              {"l_min", encode_real(report.l_min)},
              {"l_max", encode_real(report.l_max)},
              {"g_max", encode_real(report.g_max)},
              {"cfi", encode_real(report.cfi)},
              {"min_index", report.min_index},
              {"max_index", report.max_index},
              {"worst_noise", povm_to_json(report.worst_noise)}};
}

json saturation_report_to_json(const SaturationReport& report) {
  return json{{"saturates", report.saturates},
              {"max_condition1_residual", report.max_condition1_residual},
              {"max_condition2_residual", report.max_condition2_residual},
              {"cfi_gap", encode_real(report.cfi_gap)},
              {"cfi", encode_real(report.cfi)},
              {"qfi", report.qfi}};
}

json chi_q_result_to_json(const ChiQResult& result, double theta, double sigma) {
  return json{{"theta", theta},
              {"sigma", sigma},
              {"phi_s", result.phi_s},
              {"phi_a", result.phi_a},
              {"chi_q", encode_real(result.chi_q)},
              {"cfi", result.cfi_at_optimum}};
}

}  // namespace menos
