#include "loewner/scalar_function.hpp"

#include <limits>

#include "loewner/rng.hpp"

namespace loewner {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kFd1Step = std::cbrt(kEps);        // ~6.1e-6
const double kFd2Step = std::pow(kEps, 0.25);   // ~1.2e-4
}  // namespace

double checked_eval(const ScalarFunction& f, double t) {
    const double v = f.eval(t);
    if (!std::isfinite(v))
        throw std::domain_error("evaluation of '" + f.name + "' is not finite at t=" +
                                std::to_string(t));
    return v;
}

double derivative1(const ScalarFunction& f, double t) {
    if (f.has_derivative1()) return f.derivative1(t);
    const double h = kFd1Step * std::max(1.0, std::abs(t));
    const double d = (checked_eval(f, t + h) - checked_eval(f, t - h)) / (2.0 * h);
    if (!std::isfinite(d))
        throw std::domain_error("numeric derivative of '" + f.name + "' failed at t=" +
                                std::to_string(t));
    return d;
}

double derivative2(const ScalarFunction& f, double t) {
    if (f.has_derivative2()) return f.derivative2(t);
    if (f.has_derivative1()) {
        const double h = kFd1Step * std::max(1.0, std::abs(t));
        return (f.derivative1(t + h) - f.derivative1(t - h)) / (2.0 * h);
    }
    const double h = kFd2Step * std::max(1.0, std::abs(t));
    const double d =
        (checked_eval(f, t + h) - 2.0 * checked_eval(f, t) + checked_eval(f, t - h)) / (h * h);
    if (!std::isfinite(d))
        throw std::domain_error("numeric second derivative of '" + f.name + "' failed at t=" +
                                std::to_string(t));
    return d;
}

double stencil_derivative1(const ScalarFunction& f, double t, double step) {
    if (f.has_derivative1()) return f.derivative1(t);
    const double h = step * std::max(1.0, std::abs(t));
    return (-checked_eval(f, t + 2 * h) + 8 * checked_eval(f, t + h) - 8 * checked_eval(f, t - h) +
            checked_eval(f, t - 2 * h)) /
           (12.0 * h);
}

double stencil_derivative2(const ScalarFunction& f, double t, double step) {
    if (f.has_derivative2()) return f.derivative2(t);
    if (f.has_derivative1()) {
        const double h = step * std::max(1.0, std::abs(t));
        return (-f.derivative1(t + 2 * h) + 8 * f.derivative1(t + h) - 8 * f.derivative1(t - h) +
                f.derivative1(t - 2 * h)) /
               (12.0 * h);
    }
    const double h = step * std::max(1.0, std::abs(t));
    return (-checked_eval(f, t + 2 * h) + 16 * checked_eval(f, t + h) - 30 * checked_eval(f, t) +
            16 * checked_eval(f, t - h) - checked_eval(f, t - 2 * h)) /
           (12.0 * h * h);
}

ScalarFunction linear_combination(double a, const ScalarFunction& f, double b,
                                  const ScalarFunction& g) {
    ScalarFunction r;
    r.domain = f.domain.intersect(g.domain);
    auto fe = f.eval, ge = g.eval;
    r.eval = [a, b, fe, ge](double t) { return a * fe(t) + b * ge(t); };
    if (f.has_derivative1() && g.has_derivative1()) {
        auto fd = f.derivative1, gd = g.derivative1;
        r.derivative1 = [a, b, fd, gd](double t) { return a * fd(t) + b * gd(t); };
    }
    if (f.has_derivative2() && g.has_derivative2()) {
        auto fd = f.derivative2, gd = g.derivative2;
        r.derivative2 = [a, b, fd, gd](double t) { return a * fd(t) + b * gd(t); };
    }
    if (f.has_complex_eval() && g.has_complex_eval()) {
        auto fc = f.complex_eval, gc = g.complex_eval;
        r.complex_eval = [a, b, fc, gc](Complex z) { return a * fc(z) + b * gc(z); };
    }
    r.name = std::to_string(a) + "*" + f.name + "+" + std::to_string(b) + "*" + g.name;
    return r;
}

ScalarFunction scale(double a, const ScalarFunction& f) {
    ScalarFunction r = f;
    auto fe = f.eval;
    r.eval = [a, fe](double t) { return a * fe(t); };
    if (f.has_derivative1()) {
        auto fd = f.derivative1;
        r.derivative1 = [a, fd](double t) { return a * fd(t); };
    }
    if (f.has_derivative2()) {
        auto fd = f.derivative2;
        r.derivative2 = [a, fd](double t) { return a * fd(t); };
    }
    if (f.has_complex_eval()) {
        auto fc = f.complex_eval;
        r.complex_eval = [a, fc](Complex z) { return a * fc(z); };
    }
    r.name = std::to_string(a) + "*" + f.name;
    return r;
}

ScalarFunction shift(const ScalarFunction& f, double b) {
    ScalarFunction r = f;
    auto fe = f.eval;
    r.eval = [b, fe](double t) { return fe(t) + b; };
    if (f.has_complex_eval()) {
        auto fc = f.complex_eval;
        r.complex_eval = [b, fc](Complex z) { return fc(z) + b; };
    }
    r.name = f.name + "+" + std::to_string(b);
    return r;
}

ScalarFunction negate(const ScalarFunction& f) { return scale(-1.0, f).with_name("-" + f.name); }

ScalarFunction compose(const ScalarFunction& f, const ScalarFunction& g) {
    ScalarFunction r;
    r.domain = g.domain;
    auto fe = f.eval, ge = g.eval;
    r.eval = [fe, ge](double t) { return fe(ge(t)); };
    if (f.has_derivative1() && g.has_derivative1()) {
        auto fd = f.derivative1, gd = g.derivative1;
        r.derivative1 = [fd, ge, gd](double t) { return fd(ge(t)) * gd(t); };
        if (f.has_derivative2() && g.has_derivative2()) {
            auto fdd = f.derivative2, gdd = g.derivative2;
            r.derivative2 = [fd, fdd, ge, gd, gdd](double t) {
                const double u = ge(t), du = gd(t);
                return fdd(u) * du * du + fd(u) * gdd(t);
            };
        }
    }
    if (f.has_complex_eval() && g.has_complex_eval()) {
        auto fc = f.complex_eval, gc = g.complex_eval;
        r.complex_eval = [fc, gc](Complex z) { return fc(gc(z)); };
    }
    r.name = f.name + "(" + g.name + ")";
    return r;
}

std::pair<double, double> sampling_box(const Interval& iv) {
    const double kSpan = 1e3;
    if (!iv.lower_infinite() && !iv.upper_infinite()) {
        const double pad = 1e-6 * iv.length();
        return {iv.lower + pad, iv.upper - pad};
    }
    if (iv.lower_infinite() && iv.upper_infinite()) return {-kSpan, kSpan};
    if (iv.upper_infinite()) {
        const double unit = std::max(1.0, std::abs(iv.lower));
        return {iv.lower + 1e-3 * unit, iv.lower + kSpan * unit};
    }
    const double unit = std::max(1.0, std::abs(iv.upper));
    return {iv.upper - kSpan * unit, iv.upper - 1e-3 * unit};
}

ValidationReport validate(const ScalarFunction& f, int samples, std::uint64_t seed) {
    ValidationReport rep;
    auto rng = make_rng(seed, "scalar_function.validate");
    auto [lo, hi] = sampling_box(f.domain);
    std::uniform_real_distribution<double> unif(lo, hi);
    for (int i = 0; i < samples; ++i) {
        const double t = unif(rng);
        const double v = f.eval(t);
        if (!std::isfinite(v)) {
            rep.eval_finite = false;
            rep.offending_point = t;
            return rep;
        }
        if (f.has_derivative1()) {
            const double h = 1e-5 * std::max(1.0, std::abs(t));
            if (t - h <= f.domain.lower || t + h >= f.domain.upper) continue;
            const double fd = (f.eval(t + h) - f.eval(t - h)) / (2.0 * h);
            const double an = f.derivative1(t);
            const double rel = std::abs(fd - an) / std::max(1.0, std::abs(an));
            if (rel > rep.worst_derivative_mismatch) {
                rep.worst_derivative_mismatch = rel;
                rep.offending_point = t;
            }
            if (rel > 1e-4) rep.derivative1_consistent = false;
        }
    }
    return rep;
}

}  // namespace loewner
