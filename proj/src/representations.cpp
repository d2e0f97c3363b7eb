#include "loewner/representations.hpp"

#include <cmath>
#include <sstream>

namespace loewner {

const char* to_string(MeasureKind k) {
    switch (k) {
        case MeasureKind::UnitInterval: return "unit-interval";
        case MeasureKind::HalfLine: return "half-line";
        case MeasureKind::Pick: return "pick";
    }
    return "?";
}

MeasureKind measure_kind_from_string(const std::string& s) {
    if (s == "unit-interval") return MeasureKind::UnitInterval;
    if (s == "half-line") return MeasureKind::HalfLine;
    if (s == "pick") return MeasureKind::Pick;
    throw std::invalid_argument("unknown measure kind '" + s + "'");
}

void validate_measure(const RepresentingMeasure& mu) {
    if (mu.nodes.size() != mu.weights.size())
        throw std::invalid_argument("measure: nodes/weights size mismatch");
    if (mu.atom_at_zero < 0.0 || mu.atom_at_one_or_infinity < 0.0)
        throw std::invalid_argument("measure: atoms must be nonnegative");
    if (mu.kind == MeasureKind::Pick && mu.atom_at_one_or_infinity != 0.0)
        throw std::invalid_argument("measure: pick kind has no endpoint atom (alpha holds the slope)");
    for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
        if (!(mu.weights[i] >= 0.0))
            throw std::invalid_argument("measure: negative weight at index " + std::to_string(i));
        const double x = mu.nodes[i];
        const bool inside = mu.kind == MeasureKind::UnitInterval ? (x > 0.0 && x < 1.0)
                                                                 : (x > 0.0 && std::isfinite(x));
        if (!inside) {
            std::ostringstream os;
            os << "measure: node " << x << " not strictly inside the open support of "
               << to_string(mu.kind);
            throw std::invalid_argument(os.str());
        }
    }
}

RepresentingMeasure make_measure(MeasureKind kind, std::vector<double> nodes,
                                 std::vector<double> weights, double atom_at_zero,
                                 double atom_at_one_or_infinity) {
    RepresentingMeasure mu{kind, std::move(nodes), std::move(weights), atom_at_zero,
                           atom_at_one_or_infinity};
    validate_measure(mu);
    return mu;
}

double total_mass(const RepresentingMeasure& mu) {
    double m = mu.atom_at_zero + mu.atom_at_one_or_infinity;
    for (double w : mu.weights) m += w;
    return m;
}

double measure_kernel(MeasureKind kind, double t, double lambda) {
    if (kind == MeasureKind::UnitInterval) return t / (lambda + (1.0 - lambda) * t);
    return t * (1.0 + lambda) / (t + lambda);
}

double eval_measure(const RepresentingMeasure& mu, double t) {
    if (!(t > 0.0)) throw std::domain_error("eval_measure: t must be > 0");
    if (mu.kind == MeasureKind::Pick)
        throw std::invalid_argument("eval_measure: pick-kind measures evaluate through eval_pick");
    double acc = mu.atom_at_zero + mu.atom_at_one_or_infinity * t;
    for (std::size_t i = 0; i < mu.nodes.size(); ++i)
        acc += mu.weights[i] * measure_kernel(mu.kind, t, mu.nodes[i]);
    return acc;
}

RepresentingMeasure convert_measure(const RepresentingMeasure& mu, MeasureKind target) {
    const bool u2h = mu.kind == MeasureKind::UnitInterval && target == MeasureKind::HalfLine;
    const bool h2u = mu.kind == MeasureKind::HalfLine && target == MeasureKind::UnitInterval;
    if (!u2h && !h2u)
        throw std::invalid_argument("convert_measure: only unit-interval <-> half-line supported");
    RepresentingMeasure out = mu;
    out.kind = target;
    for (double& x : out.nodes) x = u2h ? x / (1.0 - x) : x / (1.0 + x);
    validate_measure(out);
    return out;
}

ScalarFunction measure_function(const RepresentingMeasure& mu, const std::string& name) {
    validate_measure(mu);
    if (mu.kind == MeasureKind::Pick)
        throw std::invalid_argument("measure_function: use pick_function for pick-kind measures");
    ScalarFunction f;
    f.domain = Interval::positive_halfline();
    f.eval = [mu](double t) { return eval_measure(mu, t); };
    const bool unit = mu.kind == MeasureKind::UnitInterval;
    f.derivative1 = [mu, unit](double t) {
        double acc = mu.atom_at_one_or_infinity;
        for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
            const double l = mu.nodes[i];
            if (unit) {
                const double d = l + (1.0 - l) * t;
                acc += mu.weights[i] * l / (d * d);
            } else {
                const double d = t + l;
                acc += mu.weights[i] * (1.0 + l) * l / (d * d);
            }
        }
        return acc;
    };
    f.derivative2 = [mu, unit](double t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
            const double l = mu.nodes[i];
            if (unit) {
                const double d = l + (1.0 - l) * t;
                acc += mu.weights[i] * (-2.0) * l * (1.0 - l) / (d * d * d);
            } else {
                const double d = t + l;
                acc += mu.weights[i] * (-2.0) * (1.0 + l) * l / (d * d * d);
            }
        }
        return acc;
    };
    f.complex_eval = [mu, unit](Complex z) {
        Complex acc = mu.atom_at_zero + mu.atom_at_one_or_infinity * z;
        for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
            const double l = mu.nodes[i];
            acc += unit ? mu.weights[i] * z / (l + (1.0 - l) * z)
                        : mu.weights[i] * z * (1.0 + l) / (z + l);
        }
        return acc;
    };
    f.name = name;
    return f;
}

PickRepresentation to_pick(double f1, double fp1, const RepresentingMeasure& mu) {
    validate_measure(mu);
    if (mu.kind != MeasureKind::HalfLine)
        throw std::invalid_argument("to_pick: measure must be of half-line kind");
    if (std::abs(total_mass(mu) - 1.0) > 1e-9)
        throw std::invalid_argument("to_pick: measure must be a probability measure, mass = " +
                                    std::to_string(total_mass(mu)));
    PickRepresentation rep;
    rep.alpha = fp1 * mu.atom_at_one_or_infinity;
    rep.nu.kind = MeasureKind::Pick;
    rep.nu.atom_at_zero = fp1 * mu.atom_at_zero;
    double beta_integral = mu.atom_at_zero;  // (1-l^2)/(1+l^2) = 1 at l = 0
    rep.nu.nodes = mu.nodes;
    rep.nu.weights.resize(mu.nodes.size());
    for (std::size_t i = 0; i < mu.nodes.size(); ++i) {
        const double l = mu.nodes[i];
        rep.nu.weights[i] = fp1 * (1.0 + l) * (1.0 + l) * mu.weights[i];
        beta_integral += mu.weights[i] * (1.0 - l * l) / (1.0 + l * l);
    }
    rep.beta = f1 - fp1 * mu.atom_at_one_or_infinity + fp1 * beta_integral;
    validate_measure(rep.nu);
    return rep;
}

Complex eval_pick(const PickRepresentation& rep, Complex z) {
    if (z.imag() < 0.0)
        throw std::invalid_argument("eval_pick: lower half-plane evaluation not supported");
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("eval_pick: z on the closed negative real axis (branch cut)");
    Complex acc = rep.alpha * z + rep.beta;
    if (rep.nu.atom_at_zero != 0.0) acc += rep.nu.atom_at_zero * (-1.0 / z);
    for (std::size_t i = 0; i < rep.nu.nodes.size(); ++i) {
        const double l = rep.nu.nodes[i];
        acc += rep.nu.weights[i] * (l / (1.0 + l * l) - 1.0 / (z + l));
    }
    return acc;
}

ScalarFunction pick_function(const PickRepresentation& rep, const std::string& name) {
    ScalarFunction f;
    f.domain = Interval::positive_halfline();
    f.eval = [rep](double t) { return eval_pick(rep, Complex(t, 0.0)).real(); };
    f.derivative1 = [rep](double t) {
        double acc = rep.alpha + rep.nu.atom_at_zero / (t * t);
        for (std::size_t i = 0; i < rep.nu.nodes.size(); ++i) {
            const double d = t + rep.nu.nodes[i];
            acc += rep.nu.weights[i] / (d * d);
        }
        return acc;
    };
    f.derivative2 = [rep](double t) {
        double acc = -2.0 * rep.nu.atom_at_zero / (t * t * t);
        for (std::size_t i = 0; i < rep.nu.nodes.size(); ++i) {
            const double d = t + rep.nu.nodes[i];
            acc += rep.nu.weights[i] * (-2.0) / (d * d * d);
        }
        return acc;
    };
    f.complex_eval = [rep](Complex z) { return eval_pick(rep, z); };
    f.name = name;
    return f;
}

}  // namespace loewner
