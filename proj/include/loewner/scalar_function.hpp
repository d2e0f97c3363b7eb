#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "loewner/interval.hpp"

namespace loewner {

using Complex = std::complex<double>;

/// A real function on an interval, the object every criterion and transform
/// acts on.  Analytic derivatives and a complex-plane evaluator are optional;
/// numeric fallbacks are used where they are absent.
struct ScalarFunction {
    Interval domain;
    std::function<double(double)> eval;
    std::function<double(double)> derivative1;                // optional (empty if absent)
    std::function<double(double)> derivative2;                // optional
    std::function<Complex(Complex)> complex_eval;             // optional
    std::string name = "f";

    double operator()(double t) const { return eval(t); }
    bool has_derivative1() const { return static_cast<bool>(derivative1); }
    bool has_derivative2() const { return static_cast<bool>(derivative2); }
    bool has_complex_eval() const { return static_cast<bool>(complex_eval); }

    ScalarFunction with_name(std::string n) const {
        ScalarFunction g = *this;
        g.name = std::move(n);
        return g;
    }
};

/// Evaluate and insist on a finite value.
double checked_eval(const ScalarFunction& f, double t);

/// First derivative: analytic when present, otherwise central difference at
/// step cbrt(eps)*max(1,|t|).
double derivative1(const ScalarFunction& f, double t);

/// Second derivative: analytic, else central difference of derivative1, else
/// a three-point second difference at step eps^(1/4)*max(1,|t|).
double derivative2(const ScalarFunction& f, double t);

/// Five-point central stencils at a fixed relative step (default 1e-4); used
/// where a particularly reliable derivative at a single point is needed.
double stencil_derivative1(const ScalarFunction& f, double t, double step = 1e-4);
double stencil_derivative2(const ScalarFunction& f, double t, double step = 1e-3);

/// a*f + b*g on the intersected domain; derivative and complex evaluators
/// propagate when both operands carry them.
ScalarFunction linear_combination(double a, const ScalarFunction& f, double b,
                                  const ScalarFunction& g);
ScalarFunction scale(double a, const ScalarFunction& f);
ScalarFunction shift(const ScalarFunction& f, double b);
ScalarFunction negate(const ScalarFunction& f);

/// f(g(t)) on g's domain; chain-rule derivatives propagate.
ScalarFunction compose(const ScalarFunction& f, const ScalarFunction& g);

struct ValidationReport {
    bool eval_finite = true;
    bool derivative1_consistent = true;
    double worst_derivative_mismatch = 0.0;
    double offending_point = 0.0;
    bool ok() const { return eval_finite && derivative1_consistent; }
};

/// Sample the domain and check the declared invariants: finite evaluation,
/// and (if present) derivative1 agreeing with a central finite difference at
/// step 1e-5*max(1,|t|) within 1e-4 relative.
ValidationReport validate(const ScalarFunction& f, int samples = 64, std::uint64_t seed = 1);

/// Finite window inside an interval used by all desk-scale samplers.  Finite
/// intervals shrink by a hair at each end; infinite ends are cut off three
/// decades away from the finite reference point.
std::pair<double, double> sampling_box(const Interval& iv);

}  // namespace loewner
