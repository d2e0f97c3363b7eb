#pragma once

#include <json.hpp>

#include "loewner/criteria.hpp"
#include "loewner/hermitian.hpp"
#include "loewner/inversion.hpp"
#include "loewner/representations.hpp"

namespace loewner {

/// {"dim": n, "re": [[...]], "im": [[...]]}; "im" omitted when zero.
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);

/// {"kind": ..., "nodes": [...], "weights": [...], "atom0": m0, "atom1_or_inf": m1}
nlohmann::json measure_to_json(const RepresentingMeasure& mu);
RepresentingMeasure measure_from_json(const nlohmann::json& j);

/// measure fields plus {"alpha": ..., "beta": ...}, kind "pick"
nlohmann::json pick_to_json(const PickRepresentation& rep);
PickRepresentation pick_from_json(const nlohmann::json& j);

nlohmann::json fit_report_to_json(const FitReport& report);

}  // namespace loewner
