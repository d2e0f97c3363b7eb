#include "loewner/quadrature.hpp"

#include <cmath>

namespace loewner {

namespace {

double adapt(const std::function<double(double)>& f, double a, double b, double abs_tol,
             double rel_tol, int depth) {
    const auto est = quad::gk15(f, a, b);
    const double err = est.error();
    if (err <= abs_tol || err <= rel_tol * std::abs(est.kronrod) || depth <= 0) {
        if (depth <= 0 && err > 64.0 * std::max(abs_tol, rel_tol * std::abs(est.kronrod)))
            throw std::runtime_error("integrate: adaptive quadrature failed to converge");
        return est.kronrod;
    }
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * abs_tol, rel_tol, depth - 1) +
           adapt(f, m, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        return -integrate(f, b, a, opt);
    }
    return adapt(f, a, b, opt.abs_tol, opt.rel_tol, opt.max_depth);
}

double integrate_segmented(const std::function<double(double)>& f,
                           const std::vector<double>& breaks, const QuadratureOptions& opt) {
    if (breaks.size() < 2) throw std::invalid_argument("integrate_segmented: need >= 2 breakpoints");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        total += integrate(f, breaks[i], breaks[i + 1], opt);
    return total;
}

}  // namespace loewner
