#pragma once

#include <json.hpp>

#include "menos/qcrb.hpp"

namespace menos {

/// Matrix encoding: row-major list of rows, each entry a two-element
/// [re, im] array. Doubles round-trip bit-exactly (shortest decimal form).
nlohmann::json matrix_to_json(const HermitianMatrix& h);
HermitianMatrix matrix_from_json(const nlohmann::json& j);

/// {"dim": n, "elements": [matrix, ...]}
nlohmann::json povm_to_json(const Povm& m);
Povm povm_from_json(const nlohmann::json& j);

/// {"theta": t, "rho": matrix, "drho": matrix, "qfi": number?}
nlohmann::json model_to_json(const ModelAtPoint& model);
ModelAtPoint model_from_json(const nlohmann::json& j);

/// Non-finite values are encoded as the strings "inf"/"-inf".
nlohmann::json encode_real(double x);

nlohmann::json menos_report_to_json(const MenosReport& report);
nlohmann::json saturation_report_to_json(const SaturationReport& report);
nlohmann::json chi_q_result_to_json(const ChiQResult& result, double theta,
                                    double sigma);

}  // namespace menos
