#include "loewner/transforms.hpp"

#include <cmath>

#include "loewner/divided_differences.hpp"
#include "loewner/rng.hpp"

namespace loewner {

namespace {

constexpr double kRatioWindow = 1e-6;  // |t-1| below this: Taylor instead of 0/0 ratio

struct At1 {
    double f1, fp1, fpp1;
};

At1 derivatives_at_1(const ScalarFunction& f) {
    return {checked_eval(f, 1.0), stencil_derivative1(f, 1.0), stencil_derivative2(f, 1.0)};
}

}  // namespace

ScalarFunction sharp(const ScalarFunction& f) {
    ScalarFunction r;
    r.domain = f.domain;
    auto fe = f.eval;
    auto name = f.name;
    r.eval = [fe, name](double t) {
        const double v = fe(t);
        if (v == 0.0)
            throw std::domain_error("sharp: '" + name + "' vanishes at t=" + std::to_string(t));
        return t / v;
    };
    if (f.has_derivative1()) {
        auto fd = f.derivative1;
        r.derivative1 = [fe, fd](double t) {
            const double v = fe(t);
            return (v - t * fd(t)) / (v * v);
        };
        if (f.has_derivative2()) {
            auto fdd = f.derivative2;
            r.derivative2 = [fe, fd, fdd](double t) {
                const double v = fe(t), d = fd(t);
                return (2.0 * t * d * d - 2.0 * v * d - t * v * fdd(t)) / (v * v * v);
            };
        }
    }
    if (f.has_complex_eval()) {
        auto fc = f.complex_eval;
        r.complex_eval = [fc](Complex z) { return z / fc(z); };
    }
    r.name = f.name + "#";
    return r;
}

ScalarFunction star(const ScalarFunction& f) {
    ScalarFunction r;
    r.domain = Interval::positive_halfline();
    auto fe = f.eval;
    r.eval = [fe](double t) { return t * fe(1.0 / t); };
    if (f.has_derivative1()) {
        auto fd = f.derivative1;
        r.derivative1 = [fe, fd](double t) { return fe(1.0 / t) - fd(1.0 / t) / t; };
        if (f.has_derivative2()) {
            auto fdd = f.derivative2;
            r.derivative2 = [fdd](double t) { return fdd(1.0 / t) / (t * t * t); };
        }
    }
    if (f.has_complex_eval()) {
        auto fc = f.complex_eval;
        r.complex_eval = [fc](Complex z) { return z * fc(1.0 / z); };
    }
    r.name = f.name + "*";
    return r;
}

namespace {

// shared skeleton of T and Lambda: t * (f(t)-f(1))/(t-1) with a second-order
// Taylor patch across the removable singularity at 1, scaled by 1/fp1 for T
ScalarFunction ratio_transform(const ScalarFunction& f, double inv_scale, std::string name) {
    const At1 a = derivatives_at_1(f);
    ScalarFunction r;
    r.domain = f.domain;
    auto fe = f.eval;
    const double f1 = a.f1, fp1 = a.fp1, fpp1 = a.fpp1;
    r.eval = [fe, f1, fp1, fpp1, inv_scale](double t) {
        if (std::abs(t - 1.0) <= kRatioWindow)
            return inv_scale * t * (fp1 + 0.5 * (t - 1.0) * fpp1);
        return inv_scale * t * (fe(t) - f1) / (t - 1.0);
    };
    // d/dt [t [t,1]_f] = [t,1]_f + t [t,t,1]_f
    r.derivative1 = [f, inv_scale](double t) {
        return inv_scale * (divdiff1(f, t, 1.0) + t * divdiff2(f, t, t, 1.0));
    };
    if (f.has_complex_eval()) {
        auto fc = f.complex_eval;
        r.complex_eval = [fc, f1, fp1, fpp1, inv_scale](Complex z) {
            if (std::abs(z - 1.0) <= kRatioWindow)
                return inv_scale * z * (fp1 + 0.5 * (z - 1.0) * fpp1);
            return inv_scale * z * (fc(z) - f1) / (z - 1.0);
        };
    }
    r.name = std::move(name);
    return r;
}

}  // namespace

ScalarFunction t_transform(const ScalarFunction& f) {
    const double fp1 = stencil_derivative1(f, 1.0);
    if (std::abs(fp1) < 1e-12)
        throw std::domain_error("t_transform: f'(1) ~ 0, '" + f.name +
                                "' is constant (T is undefined)");
    return ratio_transform(f, 1.0 / fp1, "T(" + f.name + ")");
}

ScalarFunction lambda_map(const ScalarFunction& f) {
    return ratio_transform(f, 1.0, "L(" + f.name + ")");
}

ScalarFunction poly_lambda(const std::vector<double>& coeffs, const ScalarFunction& f) {
    if (coeffs.empty()) throw std::invalid_argument("poly_lambda: empty coefficient list");
    ScalarFunction r = scale(coeffs.back(), f);
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k)
        r = linear_combination(1.0, lambda_map(r), coeffs[k], f);
    return r.with_name("p(L)(" + f.name + ")");
}

ScalarFunction extreme_function(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("extreme_function: lambda must lie in [0,1]");
    ScalarFunction r;
    r.domain = Interval::positive_halfline();
    r.eval = [lambda](double t) { return t / (lambda + (1.0 - lambda) * t); };
    r.derivative1 = [lambda](double t) {
        const double d = lambda + (1.0 - lambda) * t;
        return lambda / (d * d);
    };
    r.derivative2 = [lambda](double t) {
        const double d = lambda + (1.0 - lambda) * t;
        return -2.0 * lambda * (1.0 - lambda) / (d * d * d);
    };
    r.complex_eval = [lambda](Complex z) { return z / (lambda + (1.0 - lambda) * z); };
    r.name = "extreme(" + std::to_string(lambda) + ")";
    return r;
}

double decomposition_check(const ScalarFunction& f, const std::vector<double>& sample_ts) {
    const double lambda = stencil_derivative1(f, 1.0);
    const ScalarFunction tf = t_transform(f);
    const ScalarFunction t_of_star = star(t_transform(star(f)));
    double worst = 0.0;
    for (double t : sample_ts) {
        const double lhs = lambda * tf.eval(t) + (1.0 - lambda) * t_of_star.eval(t);
        worst = std::max(worst, std::abs(lhs - checked_eval(f, t)));
    }
    return worst;
}

double derivative_sum_check(const ScalarFunction& f) {
    return stencil_derivative1(f, 1.0) + stencil_derivative1(star(f), 1.0);
}

ScalarFunction mobius_transport(const ScalarFunction& f, MobiusDirection direction) {
    if (direction == MobiusDirection::ToHalfline) {
        if (!(f.domain.lower == 0.0 && f.domain.upper == 1.0))
            throw std::invalid_argument("mobius_transport: to-halfline needs a (0,1) source, got " +
                                        f.domain.str());
        ScalarFunction h;
        h.domain = Interval::positive_halfline();
        h.eval = [](double t) { return t / (t + 1.0); };
        h.derivative1 = [](double t) { return 1.0 / ((t + 1.0) * (t + 1.0)); };
        h.derivative2 = [](double t) { return -2.0 / std::pow(t + 1.0, 3); };
        h.complex_eval = [](Complex z) { return z / (z + 1.0); };
        h.name = "mobius";
        return compose(f, h).with_name(f.name + "@halfline");
    }
    if (!(f.domain.lower == 0.0 && f.domain.upper_infinite()))
        throw std::invalid_argument("mobius_transport: to-unit-interval needs a (0,inf) source, got " +
                                    f.domain.str());
    ScalarFunction hinv;
    hinv.domain = Interval::unit();
    hinv.eval = [](double u) { return u / (1.0 - u); };
    hinv.derivative1 = [](double u) { return 1.0 / ((1.0 - u) * (1.0 - u)); };
    hinv.derivative2 = [](double u) { return 2.0 / std::pow(1.0 - u, 3); };
    hinv.complex_eval = [](Complex z) { return z / (1.0 - z); };
    hinv.name = "mobius_inv";
    return compose(f, hinv).with_name(f.name + "@unit");
}

NormalizedFunction normalized(const ScalarFunction& f) {
    NormalizedFunction n;
    n.fn = f;
    n.value_at_1 = checked_eval(f, 1.0);
    n.derivative_at_1 = stencil_derivative1(f, 1.0);
    n.positive_on_samples = p0_check(f).positive;
    return n;
}

P0Report p0_check(const ScalarFunction& f, int samples, std::uint64_t seed) {
    P0Report rep;
    rep.normalized = std::abs(checked_eval(f, 1.0) - 1.0) < 1e-12;
    auto rng = make_rng(seed, "p0_check");
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        // log-uniform over (1e-4, 100], the bound-sensitive part is t <= 100
        const double t = std::pow(10.0, -4.0 + 6.0 * u01(rng));
        const double v = checked_eval(f, t);
        if (!(v > 0.0)) rep.positive = false;
        const double excess = v - (t + 1.0);
        if (excess > rep.worst_bound_excess) rep.worst_bound_excess = excess;
        if (excess > 1e-9) rep.bounded = false;
    }
    return rep;
}

}  // namespace loewner
