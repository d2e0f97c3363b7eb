#include "loewner/json_io.hpp"

namespace loewner {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    json re = json::array(), im = json::array();
    bool any_imag = false;
    for (int i = 0; i < n; ++i) {
        json rrow = json::array(), irow = json::array();
        for (int j = 0; j < static_cast<int>(m.cols()); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
            if (m(i, j).imag() != 0.0) any_imag = true;
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    json out{{"dim", n}, {"re", std::move(re)}};
    if (any_imag) out["im"] = std::move(im);
    return out;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("re"))
        throw std::invalid_argument("matrix json: need 'dim' and 're'");
    const int n = j["dim"].get<int>();
    const auto& re = j["re"];
    Eigen::MatrixXcd m(n, n);
    const bool has_im = j.contains("im");
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            m(i, k) = Complex(re.at(i).at(k).get<double>(),
                              has_im ? j["im"].at(i).at(k).get<double>() : 0.0);
    return m;
}

json certificate_to_json(const Certificate& cert) {
    json out;
    out["verdict"] = cert.passed() ? "pass" : "fail";
    switch (cert.mode) {
        case CheckMode::Monotone: out["mode"] = "monotone"; break;
        case CheckMode::Convex: out["mode"] = "convex"; break;
        case CheckMode::Concave: out["mode"] = "concave"; break;
    }
    out["n"] = cert.order;
    out["trials"] = cert.trials_run;
    out["trials_requested"] = cert.trials_requested;
    out["min_eig"] = cert.min_eigenvalue_seen;
    out["tol"] = cert.tol;
    out["seed"] = cert.seed;
    out["function"] = cert.function_name;
    out["interval"] = cert.interval;
    if (cert.witness) {
        json w;
        w["grid"] = cert.witness->grid.nodes;
        w["eigenvalue"] = cert.witness->eigenvalue;
        std::vector<double> v(cert.witness->eigenvector.data(),
                              cert.witness->eigenvector.data() + cert.witness->eigenvector.size());
        w["eigenvector"] = v;
        if (cert.witness->kraus_index >= 0) w["kraus_index"] = cert.witness->kraus_index;
        out["witness"] = std::move(w);
    }
    return out;
}

json measure_to_json(const RepresentingMeasure& mu) {
    return json{{"kind", to_string(mu.kind)},
                {"nodes", mu.nodes},
                {"weights", mu.weights},
                {"atom0", mu.atom_at_zero},
                {"atom1_or_inf", mu.atom_at_one_or_infinity}};
}

RepresentingMeasure measure_from_json(const json& j) {
    return make_measure(measure_kind_from_string(j.at("kind").get<std::string>()),
                        j.value("nodes", std::vector<double>{}),
                        j.value("weights", std::vector<double>{}), j.value("atom0", 0.0),
                        j.value("atom1_or_inf", 0.0));
}

json pick_to_json(const PickRepresentation& rep) {
    json out = measure_to_json(rep.nu);
    out["kind"] = "pick";
    out["alpha"] = rep.alpha;
    out["beta"] = rep.beta;
    return out;
}

PickRepresentation pick_from_json(const json& j) {
    PickRepresentation rep;
    rep.alpha = j.at("alpha").get<double>();
    rep.beta = j.at("beta").get<double>();
    json nu = j;
    nu.erase("alpha");
    nu.erase("beta");
    nu["kind"] = "pick";
    rep.nu = measure_from_json(nu);
    return rep;
}

json fit_report_to_json(const FitReport& report) {
    return json{{"rms_residual", report.rms_residual},
                {"max_residual", report.max_residual},
                {"relative_rms", report.relative_rms},
                {"warning", report.warning},
                {"candidate_atoms", report.candidate_atoms}};
}

}  // namespace loewner
