#include "loewner/criteria.hpp"

#include <cmath>

#include "loewner/quadrature.hpp"
#include "loewner/rng.hpp"

namespace loewner {

Grid sample_grid(const Interval& interval, int n, GridLayout layout, std::mt19937_64& rng) {
    const auto [lo, hi] = sampling_box(interval);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Grid g;
    g.nodes.resize(n);
    auto log_uniform = [&] { return lo + (hi - lo) * std::pow(10.0, -6.0 * u01(rng)); };
    switch (layout) {
        case GridLayout::Uniform:
            for (double& t : g.nodes) t = lo + (hi - lo) * u01(rng);
            break;
        case GridLayout::LogUniform:
            for (double& t : g.nodes) t = log_uniform();
            break;
        case GridLayout::NearConfluent: {
            const int base = (n + 1) / 2;
            for (int i = 0; i < base; ++i) g.nodes[i] = log_uniform();
            for (int i = base; i < n; ++i) {
                const double anchor = g.nodes[i - base];
                double t = anchor + 1e-6 * std::max(1.0, std::abs(anchor));
                if (t >= hi) t = anchor - 1e-6 * std::max(1.0, std::abs(anchor));
                g.nodes[i] = t;
            }
            break;
        }
    }
    return g;
}

namespace {

Certificate run_psd_check(const ScalarFunction& f, const Interval& interval, int n, int trials,
                          std::uint64_t seed, double tol, CheckMode mode) {
    if (n < 1) throw std::invalid_argument("check: order n must be >= 1");
    if (trials < 1) throw std::invalid_argument("check: trials must be >= 1");
    const Interval iv = interval.intersect(f.domain);

    Certificate cert;
    cert.mode = mode;
    cert.order = n;
    cert.trials_requested = trials;
    cert.tol = tol;
    cert.seed = seed;
    cert.function_name = f.name;
    cert.interval = iv.str();
    cert.min_eigenvalue_seen = std::numeric_limits<double>::infinity();

    const char* tag = mode == CheckMode::Monotone ? "check_monotone" : "check_convex";
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(seed, tag, static_cast<std::uint64_t>(trial));
        const Grid grid = sample_grid(iv, n, static_cast<GridLayout>(trial % 3), rng);
        cert.trials_run = trial + 1;

        auto consider = [&](const Eigen::MatrixXd& m, int kraus_index) {
            const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
            const double lam = min_eigenvalue(m);
            cert.min_eigenvalue_seen = std::min(cert.min_eigenvalue_seen, lam / scale);
            if (lam < -tol * scale) {
                auto [ev, vec] = min_eigenpair(m);
                cert.verdict = Verdict::Fail;
                cert.witness = GridWitness{grid, ev, vec, kraus_index};
                return true;
            }
            return false;
        };

        if (mode == CheckMode::Monotone) {
            if (consider(loewner_matrix(f, grid).entries, -1)) return cert;
        } else {
            const ScalarFunction& probe = f;
            KrausMatrixSet hs = kraus_matrices(probe, grid);
            for (int p = 0; p < grid.size(); ++p) {
                Eigen::MatrixXd m =
                    mode == CheckMode::Concave ? Eigen::MatrixXd(-hs.matrices[p]) : hs.matrices[p];
                if (consider(m, p)) return cert;
            }
        }
    }
    cert.verdict = Verdict::Pass;
    return cert;
}

}  // namespace

Certificate check_monotone(const ScalarFunction& f, const Interval& interval, int n, int trials,
                           std::uint64_t seed, double tol) {
    return run_psd_check(f, interval, n, trials, seed, tol, CheckMode::Monotone);
}

Certificate check_convex(const ScalarFunction& f, const Interval& interval, int n, int trials,
                         std::uint64_t seed, bool concave_flag, double tol) {
    return run_psd_check(f, interval, n, trials, seed, tol,
                         concave_flag ? CheckMode::Concave : CheckMode::Convex);
}

std::optional<CounterexamplePair> counterexample_pair(const ScalarFunction& f,
                                                      const Interval& interval, int n, int budget,
                                                      std::uint64_t seed, double tol) {
    if (budget < 1) throw std::invalid_argument("counterexample_pair: budget must be >= 1");
    const Interval iv = interval.intersect(f.domain);

    auto violation = [&](const HermitianMatrix& x,
                         const HermitianMatrix& y) -> std::optional<CounterexamplePair> {
        const HermitianMatrix fx = apply_function(f, x);
        const HermitianMatrix fy = apply_function(f, y);
        Eigen::MatrixXcd d = fy.m - fx.m;
        d = 0.5 * (d + d.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d, Eigen::EigenvaluesOnly);
        const double lam = es.eigenvalues().minCoeff();
        if (lam < -tol) return CounterexamplePair{x, y, lam};
        return std::nullopt;
    };

    // phase 1: random ordered pairs
    const int phase1 = (budget + 1) / 2;
    for (int k = 0; k < phase1; ++k) {
        auto [x, y] = sample_ordered_pair(iv, n, derive_seed(seed, "cx.pair", k));
        if (auto hit = violation(x, y)) return hit;
    }

    // phase 2: the classical rank-one bump family y = x + p p*
    const auto box = sampling_box(iv);
    const double len = box.second - box.first;
    for (int k = phase1; k < budget; ++k) {
        auto rng = make_rng(seed, "cx.rank1", k);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const double rho_lo = std::min(1e-3, len / 40.0);
        const double rho = rho_lo * std::pow(len / (4.0 * rho_lo), u01(rng));
        HermitianMatrix x = random_hermitian_in({box.first, box.second - rho}, n, rng);
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::VectorXcd p(n);
        for (int i = 0; i < n; ++i) p[i] = Complex(gauss(rng), gauss(rng));
        Eigen::MatrixXcd bump = p * p.adjoint();
        bump *= rho / std::max(bump.cwiseAbs().maxCoeff(), 1e-300);
        Eigen::MatrixXcd ym = x.m + 0.5 * (bump + bump.adjoint().eval());
        HermitianMatrix y{0.5 * (ym + ym.adjoint().eval())};
        const auto sy = eigen_decompose(y);
        if (!iv.contains(sy.eigenvalues.minCoeff()) || !iv.contains(sy.eigenvalues.maxCoeff()))
            continue;
        if (auto hit = violation(x, y)) return hit;
    }
    return std::nullopt;
}

namespace {

double bump_raw(double s) {
    const double d = 1.0 - s * s;
    if (d <= 0.0) return 0.0;
    return std::exp(-1.0 / d);
}

double bump_normalization() {
    static const double c = integrate([](double s) { return bump_raw(s); }, -1.0, 1.0,
                                      {1e-15, 1e-14, 48});
    return c;
}

double mollifier(double s) { return bump_raw(s) / bump_normalization(); }

// phi'(s) = phi(s) * psi'(s), psi(s) = -1/(1-s^2)
double mollifier_d1(double s) {
    const double d = 1.0 - s * s;
    if (d <= 0.0) return 0.0;
    return mollifier(s) * (-2.0 * s / (d * d));
}

double mollifier_d2(double s) {
    const double d = 1.0 - s * s;
    if (d <= 0.0) return 0.0;
    const double psi1 = -2.0 * s / (d * d);
    const double psi2 = -2.0 * (1.0 + 3.0 * s * s) / (d * d * d);
    return mollifier(s) * (psi1 * psi1 + psi2);
}

}  // namespace

ScalarFunction mollify(const ScalarFunction& f, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("mollify: epsilon must be > 0");
    if (!f.domain.lower_infinite() && !f.domain.upper_infinite() &&
        2.0 * epsilon >= f.domain.length())
        throw std::invalid_argument("mollify: epsilon exceeds half the domain length");

    ScalarFunction r;
    r.domain = Interval(f.domain.lower_infinite() ? f.domain.lower : f.domain.lower + epsilon,
                        f.domain.upper_infinite() ? f.domain.upper : f.domain.upper - epsilon);
    auto fe = f.eval;
    const QuadratureOptions opt{1e-14, 1e-13, 48};
    r.eval = [fe, epsilon, opt](double t) {
        return integrate([&](double s) { return mollifier(s) * fe(t - epsilon * s); }, -1.0, 1.0,
                         opt);
    };
    r.derivative1 = [fe, epsilon, opt](double t) {
        return integrate([&](double s) { return mollifier_d1(s) * fe(t - epsilon * s); }, -1.0,
                         1.0, opt) /
               epsilon;
    };
    r.derivative2 = [fe, epsilon, opt](double t) {
        return integrate([&](double s) { return mollifier_d2(s) * fe(t - epsilon * s); }, -1.0,
                         1.0, opt) /
               (epsilon * epsilon);
    };
    r.name = "mollify(" + f.name + "," + std::to_string(epsilon) + ")";
    return r;
}

ScalarFunction slope_function(const ScalarFunction& f, double t0) {
    if (!f.domain.contains(t0))
        throw std::invalid_argument("slope_function: t0 outside domain " + f.domain.str());
    const double fp0 = derivative1(f, t0);  // throws when underivable at t0
    const double f0 = checked_eval(f, t0);

    ScalarFunction r;
    r.domain = f.domain;
    r.eval = [f, t0](double t) { return divdiff1(f, t, t0); };
    r.derivative1 = [f, t0](double t) { return divdiff2(f, t, t, t0); };
    if (f.has_complex_eval()) {
        auto fc = f.complex_eval;
        r.complex_eval = [fc, f0, fp0, t0](Complex z) {
            if (std::abs(z - t0) <= 1e-9 * std::max(1.0, std::abs(t0))) return Complex(fp0);
            return (fc(z) - f0) / (z - t0);
        };
    }
    r.name = "slope(" + f.name + "," + std::to_string(t0) + ")";
    return r;
}

}  // namespace loewner
