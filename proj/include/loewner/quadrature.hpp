#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace loewner {

/// Adaptive Gauss-Kronrod 15(7) quadrature.  The rule is open (no endpoint
/// evaluations), which matters for integrands with removable endpoint
/// singularities such as mollifier bumps.
namespace quad {

// QUADPACK qk15 abscissae/weights, positive half.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss7_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod;
    double gauss;
    double error() const { return std::abs(kronrod - gauss); }
};

template <typename F>
PanelEstimate gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double x = kronrod_nodes[i];
        const double fsum = f(c - h * x) + f(c + h * x);
        resk += kronrod_weights[i] * fsum;
        if (i % 2 == 1) resg += gauss7_weights[i / 2] * fsum;
    }
    const double fc = f(c);
    resk += kronrod_weights[7] * fc;
    resg += gauss7_weights[3] * fc;
    return {resk * h, resg * h};
}

}  // namespace quad

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 48;
};

/// Integrate f over [a,b] adaptively.  Throws if the error estimate cannot be
/// brought under tolerance within the depth budget on some panel.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

/// Integrate over [breaks[0], breaks.back()], treating each consecutive pair
/// as an independent adaptive panel.  Breakpoints let callers pin known
/// features (spikes, support edges) the global rule would otherwise miss.
double integrate_segmented(const std::function<double(double)>& f,
                           const std::vector<double>& breaks,
                           const QuadratureOptions& opt = {});

}  // namespace loewner
