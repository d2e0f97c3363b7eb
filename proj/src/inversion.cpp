#include "loewner/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "loewner/nnls.hpp"
#include "loewner/quadrature.hpp"
#include "loewner/transforms.hpp"

namespace loewner {

SampleSet make_samples(std::vector<double> ts, std::vector<double> values,
                       std::vector<double> point_weights) {
    if (ts.size() != values.size())
        throw std::invalid_argument("SampleSet: ts/values size mismatch");
    if (!point_weights.empty() && point_weights.size() != ts.size())
        throw std::invalid_argument("SampleSet: weights size mismatch");
    std::set<double> seen;
    for (double t : ts) {
        if (!(t > 0.0)) throw std::invalid_argument("SampleSet: sample points must be > 0");
        if (!seen.insert(t).second)
            throw std::invalid_argument("SampleSet: duplicate sample point t=" + std::to_string(t));
    }
    return {std::move(ts), std::move(values), std::move(point_weights)};
}

FitResult fit_measure(const SampleSet& samples, const std::vector<double>& nodes, MeasureKind kind,
                      const FitOptions& options) {
    if (kind != MeasureKind::UnitInterval && kind != MeasureKind::HalfLine)
        throw std::invalid_argument("fit_measure: kind must be unit-interval or half-line");
    const int m = samples.size();
    if (m < 2) throw std::invalid_argument("fit_measure: need at least 2 samples");
    const int n = static_cast<int>(nodes.size());
    for (double l : nodes) {
        const bool ok = kind == MeasureKind::UnitInterval ? (l > 0.0 && l < 1.0) : (l > 0.0);
        if (!ok) throw std::invalid_argument("fit_measure: node outside open support");
    }

    // columns: kernel at each node, then the two endpoint atoms (1 and t)
    const int cols = n + 2;
    const int extra = options.ridge > 0.0 ? cols : 0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + extra, cols);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m + extra);
    for (int i = 0; i < m; ++i) {
        const double t = samples.ts[i];
        const double sw =
            samples.point_weights.empty() ? 1.0 : std::sqrt(samples.point_weights[i]);
        for (int j = 0; j < n; ++j) a(i, j) = sw * measure_kernel(kind, t, nodes[j]);
        a(i, n) = sw * 1.0;
        a(i, n + 1) = sw * t;
        b[i] = sw * samples.values[i];
    }
    if (extra > 0)
        for (int j = 0; j < cols; ++j) a(m + j, j) = std::sqrt(options.ridge);

    const NnlsResult sol = nnls(a, b);

    FitResult out;
    out.measure.kind = kind;
    out.measure.nodes = nodes;
    out.measure.weights.assign(sol.x.data(), sol.x.data() + n);
    out.measure.atom_at_zero = sol.x[n];
    out.measure.atom_at_one_or_infinity = sol.x[n + 1];
    validate_measure(out.measure);

    double ss = 0.0, smax = 0.0, vv = 0.0;
    for (int i = 0; i < m; ++i) {
        const double r = eval_measure(out.measure, samples.ts[i]) - samples.values[i];
        ss += r * r;
        vv += samples.values[i] * samples.values[i];
        smax = std::max(smax, std::abs(r));
    }
    out.report.rms_residual = std::sqrt(ss / m);
    out.report.max_residual = smax;
    out.report.relative_rms = out.report.rms_residual / std::max(1e-300, std::sqrt(vv / m));
    out.report.warning = out.report.relative_rms > options.warn_relative_rms;

    // atom candidates: weight >= 10x the average of its grid neighbors
    for (int j = 0; j < n; ++j) {
        const double w = out.measure.weights[j];
        if (w <= 0.0) continue;
        double nb = 0.0;
        int cnt = 0;
        if (j > 0) nb += out.measure.weights[j - 1], ++cnt;
        if (j + 1 < n) nb += out.measure.weights[j + 1], ++cnt;
        if (cnt > 0 && w >= 10.0 * (nb / cnt) && w > 1e-12 * total_mass(out.measure))
            out.report.candidate_atoms.push_back(static_cast<std::size_t>(j));
    }
    return out;
}

TestFunction bump_test_function(double center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("bump_test_function: radius must be > 0");
    TestFunction g;
    g.support_lo = std::max(0.0, center - radius);
    g.support_hi = center + radius;
    g.eval = [center, radius](double t) {
        const double u = (t - center) / radius;
        const double d = 1.0 - u * u;
        if (d <= 0.0) return 0.0;
        return std::exp(1.0 - 1.0 / d);  // height 1 at the center
    };
    return g;
}

TestFunction smoothed_indicator(double a, double b, double ramp) {
    if (!(a < b) || !(ramp > 0.0) || ramp > 0.5 * (b - a))
        throw std::invalid_argument("smoothed_indicator: need a < b and 0 < ramp <= (b-a)/2");
    TestFunction g;
    g.support_lo = std::max(0.0, a - ramp);
    g.support_hi = b + ramp;
    auto smoothstep = [](double u) {  // C^1 ramp on [0,1], odd-symmetric about 1/2
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return u * u * (3.0 - 2.0 * u);
    };
    g.eval = [a, b, ramp, smoothstep](double t) {
        const double up = smoothstep((t - (a - ramp)) / (2.0 * ramp));
        const double down = smoothstep(((b + ramp) - t) / (2.0 * ramp));
        return std::min(up, down);
    };
    return g;
}

double stieltjes_functional(const std::function<Complex(Complex)>& f, const TestFunction& g,
                            double eps, const std::vector<double>& features) {
    if (!(eps > 0.0)) throw std::invalid_argument("stieltjes_functional: eps must be > 0");
    const double lo = std::max(0.0, g.support_lo);
    double hi = g.support_hi;
    if (!std::isfinite(hi)) hi = std::max(100.0, 100.0 * lo);
    if (!(hi > lo)) return 0.0;

    auto integrand = [&](double t) {
        return f(Complex(-t, eps)).imag() * g.eval(t) / M_PI;
    };

    // panel breakpoints: support edges, eps-brackets around every known
    // feature, and a coarse scan so spikes cannot hide between panel nodes
    std::set<double> brk = {lo, hi};
    auto add = [&](double x) {
        if (x > lo && x < hi) brk.insert(x);
    };
    for (double x : features)
        for (double d : {0.0, 5 * eps, 50 * eps, 500 * eps, -5 * eps, -50 * eps, -500 * eps})
            add(x + d);
    const int scan_n = 512;
    std::vector<double> scan(scan_n);
    double peak = 0.0;
    for (int i = 0; i < scan_n; ++i) {
        const double t = lo + (hi - lo) * (i + 0.5) / scan_n;
        scan[i] = std::abs(integrand(t));
        peak = std::max(peak, scan[i]);
    }
    for (int i = 1; i + 1 < scan_n; ++i)
        if (scan[i] > 1e-9 * peak && scan[i] >= scan[i - 1] && scan[i] >= scan[i + 1]) {
            const double t = lo + (hi - lo) * (i + 0.5) / scan_n;
            add(t - 5 * eps);
            add(t + 5 * eps);
        }

    QuadratureOptions opt;
    opt.abs_tol = 1e-10 * std::max(1.0, peak * (hi - lo));
    opt.rel_tol = 1e-9;
    return integrate_segmented(integrand, std::vector<double>(brk.begin(), brk.end()), opt);
}

double stieltjes_functional(const ScalarFunction& f, const TestFunction& g, double eps) {
    if (!f.has_complex_eval())
        throw std::invalid_argument("stieltjes_functional: '" + f.name +
                                    "' lacks a complex evaluator");
    return stieltjes_functional(f.complex_eval, g, eps);
}

double stieltjes_functional(const PickRepresentation& rep, const TestFunction& g, double eps) {
    std::vector<double> features = rep.nu.nodes;
    if (rep.nu.atom_at_zero > 0.0) features.push_back(0.0);
    return stieltjes_functional([&rep](Complex z) { return eval_pick(rep, z); }, g, eps, features);
}

std::vector<double> density_scan(const std::function<Complex(Complex)>& f,
                                 const std::vector<double>& t_grid, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("density_scan: eps must be > 0");
    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back(f(Complex(-t, eps)).imag() / M_PI);
    return out;
}

std::vector<double> density_scan(const ScalarFunction& f, const std::vector<double>& t_grid,
                                 double eps) {
    if (!f.has_complex_eval())
        throw std::invalid_argument("density_scan: '" + f.name + "' lacks a complex evaluator");
    return density_scan(f.complex_eval, t_grid, eps);
}

std::vector<double> density_scan(const PickRepresentation& rep, const std::vector<double>& t_grid,
                                 double eps) {
    return density_scan([&rep](Complex z) { return eval_pick(rep, z); }, t_grid, eps);
}

std::vector<double> moment_probe(const ScalarFunction& f, const std::vector<double>& poly_coeffs,
                                 const std::vector<double>& t_probe) {
    const ScalarFunction pf = poly_lambda(poly_coeffs, f);
    std::vector<double> out;
    out.reserve(t_probe.size());
    for (double t : t_probe) out.push_back(pf.eval(t));
    return out;
}

}  // namespace loewner
