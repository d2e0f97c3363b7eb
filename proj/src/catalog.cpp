#include "loewner/catalog.hpp"

#include <cmath>
#include <sstream>

#include "loewner/transforms.hpp"

namespace loewner {

namespace {

using nlohmann::json;

double need_number(const json& params, const std::string& key, const std::string& fn) {
    if (!params.contains(key) || !params[key].is_number())
        throw std::invalid_argument("catalog: '" + fn + "' requires numeric parameter '" + key + "'");
    return params[key].get<double>();
}

std::string num_str(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

ScalarFunction make_constant(double c) {
    ScalarFunction f;
    f.domain = Interval::real_line();
    f.eval = [c](double) { return c; };
    f.derivative1 = [](double) { return 0.0; };
    f.derivative2 = [](double) { return 0.0; };
    f.complex_eval = [c](Complex) { return Complex(c); };
    f.name = "const(" + num_str(c) + ")";
    return f;
}

ScalarFunction make_identity() {
    ScalarFunction f;
    f.domain = Interval::real_line();
    f.eval = [](double t) { return t; };
    f.derivative1 = [](double) { return 1.0; };
    f.derivative2 = [](double) { return 0.0; };
    f.complex_eval = [](Complex z) { return z; };
    f.name = "id";
    return f;
}

ScalarFunction make_affine(double a, double b) {
    ScalarFunction f;
    f.domain = Interval::real_line();
    f.eval = [a, b](double t) { return a * t + b; };
    f.derivative1 = [a](double) { return a; };
    f.derivative2 = [](double) { return 0.0; };
    f.complex_eval = [a, b](Complex z) { return a * z + b; };
    f.name = "affine(" + num_str(a) + "," + num_str(b) + ")";
    return f;
}

ScalarFunction make_power(double p, const std::string& name) {
    ScalarFunction f;
    f.domain = Interval::positive_halfline();
    f.eval = [p](double t) { return std::pow(t, p); };
    f.derivative1 = [p](double t) { return p * std::pow(t, p - 1.0); };
    f.derivative2 = [p](double t) { return p * (p - 1.0) * std::pow(t, p - 2.0); };
    f.complex_eval = [p](Complex z) { return std::pow(z, p); };  // principal branch
    f.name = name;
    return f;
}

ScalarFunction make_log() {
    ScalarFunction f;
    f.domain = Interval::positive_halfline();
    f.eval = [](double t) { return std::log(t); };
    f.derivative1 = [](double t) { return 1.0 / t; };
    f.derivative2 = [](double t) { return -1.0 / (t * t); };
    f.complex_eval = [](Complex z) { return std::log(z); };
    f.name = "log";
    return f;
}

ScalarFunction make_log1p() {
    ScalarFunction f;
    f.domain = Interval(-1.0, std::numeric_limits<double>::infinity());
    f.eval = [](double t) { return std::log1p(t); };
    f.derivative1 = [](double t) { return 1.0 / (1.0 + t); };
    f.derivative2 = [](double t) { return -1.0 / ((1.0 + t) * (1.0 + t)); };
    f.complex_eval = [](Complex z) { return std::log(1.0 + z); };
    f.name = "log1p";
    return f;
}

ScalarFunction make_monomial(int k, const std::string& name) {
    ScalarFunction f;
    f.domain = Interval::real_line();
    f.eval = [k](double t) { return std::pow(t, k); };
    f.derivative1 = [k](double t) { return k * std::pow(t, k - 1); };
    f.derivative2 = [k](double t) { return k * (k - 1) * std::pow(t, k - 2); };
    f.complex_eval = [k](Complex z) { return std::pow(z, k); };
    f.name = name;
    return f;
}

ScalarFunction make_exp() {
    ScalarFunction f;
    // cap where double overflows; e^t is not evaluable past ~709.78
    f.domain = Interval(-709.0, 709.0);
    f.eval = [](double t) { return std::exp(t); };
    f.derivative1 = [](double t) { return std::exp(t); };
    f.derivative2 = [](double t) { return std::exp(t); };
    f.complex_eval = [](Complex z) { return std::exp(z); };
    f.name = "exp";
    return f;
}

ScalarFunction make_mobius(bool inverse) {
    ScalarFunction f;
    if (!inverse) {
        f.domain = Interval::positive_halfline();
        f.eval = [](double t) { return t / (t + 1.0); };
        f.derivative1 = [](double t) { return 1.0 / ((t + 1.0) * (t + 1.0)); };
        f.derivative2 = [](double t) { return -2.0 / std::pow(t + 1.0, 3); };
        f.complex_eval = [](Complex z) { return z / (z + 1.0); };
        f.name = "mobius";
    } else {
        f.domain = Interval::unit();
        f.eval = [](double u) { return u / (1.0 - u); };
        f.derivative1 = [](double u) { return 1.0 / ((1.0 - u) * (1.0 - u)); };
        f.derivative2 = [](double u) { return 2.0 / std::pow(1.0 - u, 3); };
        f.complex_eval = [](Complex z) { return z / (1.0 - z); };
        f.name = "mobius_inv";
    }
    return f;
}

ScalarFunction make_poly(const std::vector<double>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("catalog: 'poly' needs nonempty coeffs");
    ScalarFunction f;
    f.domain = Interval::real_line();
    f.eval = [coeffs](double t) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
        return acc;
    };
    f.derivative1 = [coeffs](double t) {
        double acc = 0.0;
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k)
            acc = acc * t + k * coeffs[k];
        return acc;
    };
    f.derivative2 = [coeffs](double t) {
        double acc = 0.0;
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 2; --k)
            acc = acc * t + k * (k - 1) * coeffs[k];
        return acc;
    };
    f.complex_eval = [coeffs](Complex z) {
        Complex acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    std::ostringstream os;
    os << "poly(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
    os << ")";
    f.name = os.str();
    return f;
}

}  // namespace

ScalarFunction catalog_lookup(const std::string& name, const nlohmann::json& params) {
    if (name == "const") {
        const double c = params.contains("c") ? params["c"].get<double>() : 1.0;
        return make_constant(c);
    }
    if (name == "id") return make_identity();
    if (name == "affine") {
        const double a = params.contains("a") ? params["a"].get<double>() : 1.0;
        const double b = params.contains("b") ? params["b"].get<double>() : 0.0;
        return make_affine(a, b);
    }
    if (name == "power") {
        const double p = need_number(params, "p", name);
        if (p == 1.0) return make_identity();
        return make_power(p, "power(" + num_str(p) + ")");
    }
    if (name == "sqrt") return make_power(0.5, "sqrt");
    if (name == "log") return make_log();
    if (name == "log1p") return make_log1p();
    if (name == "square") return make_monomial(2, "square");
    if (name == "cube") return make_monomial(3, "cube");
    if (name == "exp") return make_exp();
    if (name == "extreme" || name == "mobius_lambda") {
        const double l = need_number(params, "lambda", name);
        return extreme_function(l);
    }
    if (name == "mobius") {
        const bool inv = params.contains("inverse") && params["inverse"].get<bool>();
        return make_mobius(inv);
    }
    if (name == "poly") {
        if (!params.contains("coeffs") || !params["coeffs"].is_array())
            throw std::invalid_argument("catalog: 'poly' requires array parameter 'coeffs'");
        return make_poly(params["coeffs"].get<std::vector<double>>());
    }
    if (name == "compose") {
        if (!params.contains("of") || !params["of"].is_array())
            throw std::invalid_argument("catalog: 'compose' requires array parameter 'of'");
        nlohmann::json spec;
        spec["compose"] = params["of"];
        return function_from_spec(spec);
    }
    throw std::invalid_argument("catalog: unknown function '" + name + "'");
}

ScalarFunction function_from_spec(const nlohmann::json& spec) {
    if (spec.is_string()) return catalog_lookup(spec.get<std::string>());
    if (!spec.is_object()) throw std::invalid_argument("function spec must be an object or name");
    if (spec.contains("fn")) return catalog_lookup(spec["fn"].get<std::string>(), spec);
    if (spec.contains("compose")) {
        const auto& parts = spec["compose"];
        if (!parts.is_array() || parts.empty())
            throw std::invalid_argument("'compose' must be a nonempty array of specs");
        ScalarFunction f = function_from_spec(parts.back());
        for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i)
            f = compose(function_from_spec(parts[i]), f);
        return f;
    }
    if (spec.contains("affine")) {
        if (!spec.contains("of"))
            throw std::invalid_argument("'affine' spec needs an 'of' operand");
        const double a = spec["affine"].value("a", 1.0);
        const double b = spec["affine"].value("b", 0.0);
        ScalarFunction f = function_from_spec(spec["of"]);
        return shift(scale(a, f), b)
            .with_name(num_str(a) + "*" + f.name + "+" + num_str(b));
    }
    throw std::invalid_argument("unrecognized function spec: " + spec.dump());
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"const", "constant c (param c, default 1)"},
        {"id", "identity t"},
        {"affine", "a*t + b (params a, b)"},
        {"power", "t^p on (0,inf), principal branch (param p)"},
        {"sqrt", "t^(1/2) on (0,inf)"},
        {"log", "log t on (0,inf), principal branch"},
        {"log1p", "log(1+t) on (-1,inf)"},
        {"square", "t^2"},
        {"cube", "t^3"},
        {"exp", "e^t"},
        {"extreme", "t/(lambda + (1-lambda)t) on (0,inf) (param lambda in [0,1])"},
        {"mobius", "t/(t+1), or its inverse t/(1-t) with {\"inverse\": true}"},
        {"poly", "polynomial with coefficients c0..cd (param coeffs)"},
        {"compose", "composition F1(F2(...)) (param of: [specs])"},
    };
}

}  // namespace loewner
