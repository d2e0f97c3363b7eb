#pragma once

#include <functional>
#include <vector>

#include "loewner/representations.hpp"

namespace loewner {

/// Discrete input to measure recovery: (t, f(t)) pairs with t > 0 and
/// optional per-point weights.
struct SampleSet {
    std::vector<double> ts;
    std::vector<double> values;
    std::vector<double> point_weights;  // empty = unweighted

    int size() const { return static_cast<int>(ts.size()); }
};

SampleSet make_samples(std::vector<double> ts, std::vector<double> values,
                       std::vector<double> point_weights = {});

struct FitReport {
    double rms_residual = 0.0;
    double max_residual = 0.0;
    double relative_rms = 0.0;  // rms / rms of sample values
    bool warning = false;       // residual above threshold; input may not be operator monotone
    std::vector<std::size_t> candidate_atoms;  // node indices whose weight dwarfs its neighbors
};

struct FitResult {
    RepresentingMeasure measure;
    FitReport report;
};

struct FitOptions {
    double ridge = 0.0;            // optional Tikhonov weight for ill-conditioned grids
    double warn_relative_rms = 1e-4;
};

/// Nonnegative least squares over the kernel design matrix built from the
/// node grid; endpoint atoms are appended automatically as two extra columns.
FitResult fit_measure(const SampleSet& samples, const std::vector<double>& nodes, MeasureKind kind,
                      const FitOptions& options = {});

/// A continuous, bounded, integrable test function g on [0, inf) together
/// with its support, which the Stieltjes integrals use for truncation.
struct TestFunction {
    std::function<double(double)> eval;
    double support_lo = 0.0;
    double support_hi = 1.0;
};

/// Smooth bump of unit height centered at `center` (support radius `radius`).
TestFunction bump_test_function(double center, double radius);

/// Smoothed indicator of [a,b] with C^1 ramps of half-width `ramp`; its
/// integral is exactly b - a.
TestFunction smoothed_indicator(double a, double b, double ramp);

/// (1/pi) int_0^inf Im f(-t + i eps) g(t) dt; as eps -> 0 this recovers
/// g(0)/2 nu({0}) + int g dnu for the Pick measure nu of f.  `features` are
/// abscissae (measure atoms) whose eps-wide Poisson spikes the quadrature
/// must not step over.
double stieltjes_functional(const std::function<Complex(Complex)>& f, const TestFunction& g,
                            double eps, const std::vector<double>& features = {});
double stieltjes_functional(const ScalarFunction& f, const TestFunction& g, double eps);
double stieltjes_functional(const PickRepresentation& rep, const TestFunction& g, double eps);

/// Pointwise density read-out: (1/pi) Im f(-lambda_i + i eps) over the grid.
std::vector<double> density_scan(const std::function<Complex(Complex)>& f,
                                 const std::vector<double>& t_grid, double eps);
std::vector<double> density_scan(const ScalarFunction& f, const std::vector<double>& t_grid,
                                 double eps);
std::vector<double> density_scan(const PickRepresentation& rep, const std::vector<double>& t_grid,
                                 double eps);

/// p(Lambda)(f) evaluated at the probe points; for f with representing
/// measure mu this equals the kernel integral of p(lambda) dmu(lambda).
std::vector<double> moment_probe(const ScalarFunction& f, const std::vector<double>& poly_coeffs,
                                 const std::vector<double>& t_probe);

}  // namespace loewner
