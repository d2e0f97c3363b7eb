#pragma once

#include <vector>

#include "loewner/scalar_function.hpp"

namespace loewner {

/// f#(t) = t / f(t).  Involution on positive operator monotone functions.
ScalarFunction sharp(const ScalarFunction& f);

/// f*(t) = t f(1/t).  Involution; maps P0 into itself.
ScalarFunction star(const ScalarFunction& f);

/// (Tf)(t) = (t / f'(1)) (f(t) - f(1))/(t - 1), with (Tf)(1) = 1.  Maps
/// non-constant members of P0 into P0 and satisfies the reconstruction
/// f(t) = f(1) + f'(1) (t-1)/t (Tf)(t).  Rejects functions with f'(1) ~ 0.
ScalarFunction t_transform(const ScalarFunction& f);

/// Lambda(f)(t) = t (f(t) - f(1))/(t - 1), Lambda(f)(1) = f'(1).  Linear in f,
/// with Lambda(e_l) = l e_l on the extreme functions.  Unlike T it is not
/// normalized: Lambda does not map P0 into itself.
ScalarFunction lambda_map(const ScalarFunction& f);

/// p(Lambda) applied to f, p given by coefficients (c0 + c1 x + ... + cd x^d),
/// evaluated by Horner over repeated application of lambda_map.
ScalarFunction poly_lambda(const std::vector<double>& coeffs, const ScalarFunction& f);

/// e_lambda(t) = t / (lambda + (1-lambda) t); the extreme points of P0.
/// e_0 is the constant 1, e_1 the identity.
ScalarFunction extreme_function(double lambda);

/// Max |lambda Tf + (1-lambda) (Tf*)* - f| over the sample points,
/// lambda = f'(1).  Requires f in P0, non-constant, not the identity.
double decomposition_check(const ScalarFunction& f, const std::vector<double>& sample_ts);

/// f'(1) + (f*)'(1); equals 1 for f in P0.
double derivative_sum_check(const ScalarFunction& f);

enum class MobiusDirection { ToUnitInterval, ToHalfline };

/// Transport along h(t) = t/(t+1): compose with h (halfline <- unit source) or
/// h^{-1}(u) = u/(1-u) (unit <- halfline source).  Operator monotonicity is
/// preserved in both directions.
ScalarFunction mobius_transport(const ScalarFunction& f, MobiusDirection direction);

/// A positive operator monotone candidate normalized at 1, with the values
/// the transform algebra keeps reaching for cached.
struct NormalizedFunction {
    ScalarFunction fn;
    double value_at_1 = 0.0;
    double derivative_at_1 = 0.0;
    bool positive_on_samples = false;
};

NormalizedFunction normalized(const ScalarFunction& f);

struct P0Report {
    bool positive = true;
    bool normalized = true;       // |f(1) - 1| < 1e-12
    bool bounded = true;          // f(t) <= t + 1 + 1e-9 on samples
    double worst_bound_excess = 0.0;
    bool member() const { return positive && normalized && bounded; }
};

/// Sampled membership test for P0 (positivity, normalization, the t+1 bound)
/// over t in (0, 100].
P0Report p0_check(const ScalarFunction& f, int samples = 200, std::uint64_t seed = 3);

}  // namespace loewner
