// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] (optional) is the path to the CLI binary for the determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "loewner/catalog.hpp"
#include "loewner/criteria.hpp"
#include "loewner/inversion.hpp"
#include "loewner/json_io.hpp"
#include "loewner/quadrature.hpp"
#include "loewner/rng.hpp"
#include "loewner/transforms.hpp"

using namespace loewner;

namespace {

struct Criterion {
    bool ok = true;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

struct Harness {
    int failures = 0;

    void run(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
        Criterion c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", number,
                    title.c_str(), secs, c.ok ? "" : " -- ", c.first_failure.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
};

std::vector<double> log_spaced(int n, double a, double b) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(a * std::pow(b / a, double(i) / (n - 1)));
    return out;
}

std::vector<std::pair<std::string, ScalarFunction>> monotone_catalog() {
    std::vector<std::pair<std::string, ScalarFunction>> fns;
    fns.emplace_back("sqrt", catalog_lookup("sqrt"));
    fns.emplace_back("t^0.3", catalog_lookup("power", {{"p", 0.3}}));
    fns.emplace_back("log1p", catalog_lookup("log1p"));
    fns.emplace_back("t/(t+1)", catalog_lookup("mobius"));
    fns.emplace_back("1-1/t", function_from_spec(nlohmann::json{
                                  {"affine", {{"a", -1.0}, {"b", 1.0}}},
                                  {"of", {{"fn", "power"}, {"p", -1.0}}}}));
    for (double l : {0.0, 0.25, 0.5, 0.75, 1.0})
        fns.emplace_back("e_" + std::to_string(l), extreme_function(l));
    return fns;
}

const Interval kHalf = Interval::positive_halfline();

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    Harness h;

    h.run(1, "Loewner criterion pass suite, n=2..6, 500 trials", [&](Criterion& c) {
        for (const auto& [name, f] : monotone_catalog())
            for (int n = 2; n <= 6; ++n) {
                const auto cert = check_monotone(f, kHalf, n, 500, 7);
                c.require(cert.passed(), name + " failed at n=" + std::to_string(n));
                c.require(cert.min_eigenvalue_seen >= -1e-8,
                          name + " min relative eigenvalue " +
                              std::to_string(cert.min_eigenvalue_seen) + " below -1e-8");
            }
    });

    h.run(2, "Loewner criterion fail suite with re-verifiable witnesses", [&](Criterion& c) {
        for (const char* name : {"square", "cube", "exp"}) {
            const ScalarFunction f = catalog_lookup(name);
            const auto cert = check_monotone(f, kHalf, 2, 100, 7);
            c.require(!cert.passed(), std::string(name) + " not refuted within 100 trials");
            if (cert.witness) {
                const auto l = loewner_matrix(f, cert.witness->grid);
                const double scale = std::max(1.0, l.entries.cwiseAbs().maxCoeff());
                c.require(min_eigenvalue(l.entries) < -cert.tol * scale,
                          std::string(name) + " witness does not re-verify");
            } else {
                c.require(false, std::string(name) + " missing witness");
            }
            const auto pair = counterexample_pair(f, kHalf, 2, 200, 7);
            c.require(pair.has_value(), std::string(name) + " counterexample not found");
            if (pair) {
                c.require(loewner_leq(pair->x, pair->y, 1e-12),
                          std::string(name) + " pair not ordered");
                c.require(pair->min_eigenvalue < -1e-6,
                          std::string(name) + " violation too small");
            }
        }
    });

    h.run(3, "Kraus suite: convexity certificates and refutations", [&](Criterion& c) {
        for (int n : {2, 3}) {
            c.require(check_convex(catalog_lookup("square"), kHalf, n, 300, 7).passed(),
                      "t^2 not certified convex at n=" + std::to_string(n));
            c.require(
                check_convex(catalog_lookup("power", {{"p", -1.0}}), kHalf, n, 300, 7).passed(),
                "1/t not certified convex at n=" + std::to_string(n));
            for (const auto& [name, f] : monotone_catalog())
                c.require(check_convex(f, kHalf, n, 300, 7, true).passed(),
                          name + " not certified concave at n=" + std::to_string(n));
        }
        const auto cert = check_convex(catalog_lookup("cube"), kHalf, 2, 300, 7);
        c.require(!cert.passed() && cert.witness.has_value(), "t^3 not refuted at n=2");
        const auto ks = kraus_matrices(catalog_lookup("cube"), Grid{{1.0, 2.0}});
        c.require(min_eigenvalue(ks.matrices[0]) < -1e-6, "grid (1,2) Kraus matrix not indefinite");
    });

    h.run(4, "derivative lemmas vs finite differences, 50 instances at n=4", [&](Criterion& c) {
        auto rng = make_rng(99, "acc.lemma");
        std::normal_distribution<double> gauss;
        std::uniform_real_distribution<double> unif(0.5, 6.0);
        const std::vector<ScalarFunction> fns = {
            catalog_lookup("sqrt"), catalog_lookup("log1p"), extreme_function(0.3),
            catalog_lookup("square"), catalog_lookup("exp")};
        const int n = 4;
        for (int rep = 0; rep < 50; ++rep) {
            const ScalarFunction& f = fns[rep % fns.size()];
            Grid grid;
            for (int i = 0; i < n; ++i) grid.nodes.push_back(unif(rng));
            Eigen::MatrixXcd hm(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) hm(i, j) = Complex(gauss(rng), gauss(rng));
            hm = (0.5 * (hm + hm.adjoint().eval())).eval();
            Eigen::VectorXcd xi(n);
            for (int i = 0; i < n; ++i) xi[i] = Complex(gauss(rng), gauss(rng));

            Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
            for (int i = 0; i < n; ++i) x(i, i) = grid.nodes[i];
            auto qform = [&](double t) {
                return (xi.adjoint() * apply_function(f, HermitianMatrix(x + t * hm)).m * xi)(0, 0)
                    .real();
            };

            const auto l = loewner_matrix(f, grid);
            const double formula1 =
                (xi.adjoint() * hm.cwiseProduct(l.entries.cast<Complex>()) * xi)(0, 0).real();
            const double fd1 = (qform(1e-5) - qform(-1e-5)) / 2e-5;
            c.require(std::abs(fd1 - formula1) <=
                          1e-4 * std::max({1.0, std::abs(fd1), std::abs(formula1)}),
                      f.name + " first-derivative identity off at rep " + std::to_string(rep));

            const auto ks = kraus_matrices(f, grid);
            double formula2 = 0.0;
            for (int p = 0; p < n; ++p) {
                Eigen::VectorXcd eta(n);
                for (int i = 0; i < n; ++i) eta[i] = xi[i] * hm(p, i);
                formula2 += (eta.adjoint() * ks.matrices[p].cast<Complex>() * eta)(0, 0).real();
            }
            const double fd2 = (qform(1e-4) - 2 * qform(0.0) + qform(-1e-4)) / 1e-8;
            c.require(std::abs(fd2 - formula2) <=
                          1e-3 * std::max({1.0, std::abs(fd2), std::abs(formula2)}),
                      f.name + " second-derivative identity off at rep " + std::to_string(rep));
        }
    });

    h.run(5, "transform identities at stated tolerances", [&](Criterion& c) {
        const std::vector<double> pts = log_spaced(20, 0.05, 20.0);
        const ScalarFunction half_sum =
            linear_combination(0.5, catalog_lookup("id"), 0.5, catalog_lookup("sqrt"));
        const std::vector<ScalarFunction> p0 = {catalog_lookup("sqrt"),
                                                catalog_lookup("power", {{"p", 0.3}}),
                                                extreme_function(0.25), extreme_function(0.75),
                                                half_sum};
        for (const auto& f : p0) {
            const ScalarFunction ss = sharp(sharp(f)), tt = star(star(f));
            const ScalarFunction tf = t_transform(f);
            const double f1 = f.eval(1.0), fp1 = stencil_derivative1(f, 1.0);
            for (double t : pts) {
                c.require(std::abs(ss.eval(t) - f.eval(t)) < 1e-12 * std::max(1.0, f.eval(t)),
                          f.name + " sharp involution residual at t=" + std::to_string(t));
                c.require(std::abs(tt.eval(t) - f.eval(t)) < 1e-12 * std::max(1.0, f.eval(t)),
                          f.name + " star involution residual at t=" + std::to_string(t));
                const double rec = f1 + fp1 * ((t - 1.0) / t) * tf.eval(t);
                c.require(std::abs(rec - f.eval(t)) < 1e-12 * std::max(1.0, std::abs(f.eval(t))),
                          f.name + " T-reconstruction residual at t=" + std::to_string(t));
            }
            c.require(decomposition_check(f, pts) < 1e-10, f.name + " decomposition residual");
            c.require(std::abs(derivative_sum_check(f) - 1.0) < 1e-6,
                      f.name + " derivative sum != 1");
        }
        for (int k = 0; k < 10; ++k) {
            const double l = k / 9.0;
            const ScalarFunction le = lambda_map(extreme_function(l));
            for (double t : pts)
                c.require(std::abs(le.eval(t) - l * extreme_function(l).eval(t)) < 1e-10,
                          "Lambda eigenrelation residual at lambda=" + std::to_string(l));
        }
        for (double l : {0.1, 0.4, 0.8}) {
            const ScalarFunction se = star(extreme_function(l));
            for (double t : pts)
                c.require(std::abs(se.eval(t) - extreme_function(1.0 - l).eval(t)) < 1e-12,
                          "star(e_lambda) mismatch at lambda=" + std::to_string(l));
        }
    });

    h.run(6, "representation round trip for sqrt", [&](Criterion& c) {
        const ScalarFunction f = catalog_lookup("sqrt");
        const auto ts = log_spaced(100, 0.05, 20.0);
        std::vector<double> vs;
        for (double t : ts) vs.push_back(f.eval(t));
        // light ridge selects the smooth representative among the many measures
        // fitting the samples; bare NNLS returns a sparse atomic one
        FitOptions opt;
        opt.ridge = 1e-7;
        const auto res = fit_measure(make_samples(ts, vs), log_spaced(200, 1e-4, 1e4),
                                     MeasureKind::HalfLine, opt);
        c.require(std::abs(total_mass(res.measure) - 1.0) <= 1e-3,
                  "total mass " + std::to_string(total_mass(res.measure)));
        for (double t : log_spaced(50, 0.06, 18.0)) {
            const double rel = std::abs(eval_measure(res.measure, t) - f.eval(t)) / f.eval(t);
            c.require(rel <= 1e-3, "held-out relative error " + std::to_string(rel) + " at t=" +
                                       std::to_string(t));
        }
        const auto unit = convert_measure(res.measure, MeasureKind::UnitInterval);
        for (double t : log_spaced(50, 1e-3, 1e3))
            c.require(std::abs(eval_measure(unit, t) - eval_measure(res.measure, t)) <=
                          1e-12 * std::max(1.0, eval_measure(res.measure, t)),
                      "conversion disagrees at t=" + std::to_string(t));
        // coarse-bin masses against the classical density, by quadrature; node
        // weights stand for their geometric quadrature cells, prorated over bins
        const auto density = [](double l) { return std::pow(l, -0.5) / ((1.0 + l) * M_PI); };
        const auto edges = log_spaced(11, 5e-2, 20.0);
        const auto& nodes = res.measure.nodes;
        auto bin_mass = [&](double lo, double hi) {
            double acc = 0.0;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                const double l = std::log(nodes[j]);
                const double cl = j == 0 ? l : 0.5 * (std::log(nodes[j - 1]) + l);
                const double cr = j + 1 == nodes.size() ? l : 0.5 * (l + std::log(nodes[j + 1]));
                if (cr <= cl) continue;
                const double ov =
                    std::max(0.0, std::min(cr, std::log(hi)) - std::max(cl, std::log(lo)));
                acc += res.measure.weights[j] * ov / (cr - cl);
            }
            return acc;
        };
        for (int b = 0; b < 10; ++b) {
            const double fitted = bin_mass(edges[b], edges[b + 1]);
            const double oracle = integrate(density, edges[b], edges[b + 1], {1e-12, 1e-12, 40});
            c.require(std::abs(fitted - oracle) <= 0.05 * oracle,
                      "bin " + std::to_string(b) + " mass " + std::to_string(fitted) + " vs " +
                          std::to_string(oracle));
        }
    });

    h.run(7, "Pick form checks", [&](Criterion& c) {
        // T(t/(t+1)) = e_1/2 whose half-line measure is the unit mass at 1
        const auto rep = to_pick(0.5, 0.25, make_measure(MeasureKind::HalfLine, {1.0}, {1.0}));
        c.require(std::abs(rep.alpha) <= 1e-8, "alpha");
        c.require(std::abs(rep.beta - 0.5) <= 1e-8, "beta");
        c.require(rep.nu.nodes.size() == 1 && std::abs(rep.nu.nodes[0] - 1.0) <= 1e-8 &&
                      std::abs(rep.nu.weights[0] - 1.0) <= 1e-8,
                  "nu is not delta_1");
        c.require(std::abs(eval_pick(rep, Complex(0, 1)) - Complex(0.5, 0.5)) <= 1e-12,
                  "value at i");

        std::vector<PickRepresentation> reps = {rep};
        reps.push_back(to_pick(1.0, 1.0, make_measure(MeasureKind::HalfLine, {}, {}, 0.0, 1.0)));
        for (double l : {0.25, 0.75}) {
            // e_l = t/(l+(1-l)t): T e_l = e_l, half-line measure = delta at l/(1-l)
            const double node = l / (1.0 - l);
            reps.push_back(to_pick(1.0, l, make_measure(MeasureKind::HalfLine, {node}, {1.0})));
        }
        {
            // fitted T(sqrt) measure, normalized to unit mass
            const ScalarFunction tf = t_transform(catalog_lookup("sqrt"));
            const auto ts = log_spaced(100, 0.05, 20.0);
            std::vector<double> vs;
            for (double t : ts) vs.push_back(tf.eval(t));
            auto fitres = fit_measure(make_samples(ts, vs), log_spaced(200, 1e-4, 1e4),
                                      MeasureKind::HalfLine);
            const double mass = total_mass(fitres.measure);
            c.require(std::abs(mass - 1.0) < 1e-3, "T(sqrt) fitted mass");
            for (double& w : fitres.measure.weights) w /= mass;
            fitres.measure.atom_at_zero /= mass;
            fitres.measure.atom_at_one_or_infinity /= mass;
            reps.push_back(to_pick(1.0, 0.5, fitres.measure));
        }
        for (std::size_t k = 0; k < reps.size(); ++k)
            for (int i = 0; i < 20; ++i)
                for (int j = 0; j < 10; ++j) {
                    const Complex z(-60.0 + 120.0 * i / 19.0,
                                    std::pow(10.0, -3.0 + 6.0 * j / 9.0));
                    c.require(eval_pick(reps[k], z).imag() >= -1e-12,
                              "negative imaginary part on rep " + std::to_string(k));
                }
    });

    h.run(8, "Stieltjes inversion limits", [&](Criterion& c) {
        const double eps = 1e-3;
        const auto dens = density_scan(catalog_lookup("log"), log_spaced(40, 0.5, 50.0), eps);
        for (double d : dens)
            c.require(std::abs(d - 1.0) <= 0.02, "log density " + std::to_string(d));

        const auto rep = to_pick(0.5, 0.25, make_measure(MeasureKind::HalfLine, {1.0}, {1.0}));
        const double captured = stieltjes_functional(rep, bump_test_function(1.0, 0.5), eps);
        c.require(std::abs(captured - 1.0) <= 0.02, "delta_1 capture " + std::to_string(captured));

        PickRepresentation atom0;
        atom0.nu.kind = MeasureKind::Pick;
        atom0.nu.atom_at_zero = 1.0;
        atom0.beta = 0.25;
        const double half = stieltjes_functional(atom0, bump_test_function(0.0, 1.0), eps);
        c.require(std::abs(half - 0.5) <= 0.02, "atom-at-zero " + std::to_string(half));

        const TestFunction g = smoothed_indicator(0.5, 2.5, 0.25);
        const double sliver = stieltjes_functional(catalog_lookup("id"), g, eps);
        c.require(std::abs(sliver) <= eps / M_PI * 2.0 * 1.05,
                  "identity sliver " + std::to_string(sliver));
    });

    h.run(9, "mollifier: affine exactness and derivative convergence", [&](Criterion& c) {
        const ScalarFunction aff = catalog_lookup("affine", {{"a", 3.0}, {"b", -2.0}});
        const ScalarFunction ae = mollify(aff, 0.3);
        for (double t : {-0.5, 0.0, 1.0, 4.0})
            c.require(std::abs(ae.eval(t) - aff.eval(t)) < 1e-10,
                      "affine residual at t=" + std::to_string(t));
        double prev = 1e100;
        for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
            const double err = std::abs(mollify(catalog_lookup("sqrt"), eps).derivative1(1.0) - 0.5);
            c.require(err < prev, "derivative error not decreasing at eps=" + std::to_string(eps));
            prev = err;
        }
    });

    h.run(10, "Bendat-Sherman slope criterion", [&](Criterion& c) {
        for (double t0 : {0.5, 1.0, 2.0}) {
            const auto cert =
                check_monotone(slope_function(catalog_lookup("square"), t0), kHalf, 3, 300, 7);
            c.require(cert.passed(), "slope of t^2 at t0=" + std::to_string(t0) + " not monotone");
        }
        const auto cert =
            check_monotone(slope_function(catalog_lookup("cube"), 1.0), kHalf, 2, 100, 7);
        c.require(!cert.passed(), "slope of t^3 at 1 wrongly certified");
    });

    h.run(11, "CLI determinism and exit codes", [&](Criterion& c) {
        if (cli.empty()) {
            c.require(false, "no CLI path given");
            return;
        }
        const std::string dir = "acceptance_tmp";
        std::system(("mkdir -p " + dir).c_str());
        auto run = [&](const std::string& args, const std::string& out) {
            const std::string cmd = cli + " " + args + " --out " + out + " >/dev/null 2>&1";
            return std::system(cmd.c_str());
        };
        const std::string check_args = "check --fn sqrt --n 3 --trials 100 --seed 7 --no-timestamp";
        const int rc1 = run(check_args, dir + "/cert_a.json");
        const int rc2 = run(check_args, dir + "/cert_b.json");
        c.require(rc1 == 0 && rc2 == 0, "check exit codes");
        c.require(!slurp(dir + "/cert_a.json").empty() &&
                      slurp(dir + "/cert_a.json") == slurp(dir + "/cert_b.json"),
                  "certificates differ between identical runs");

        const std::string fit_args =
            "fit --fn sqrt --samples log:60:0.05:20 --nodes log:120:1e-4:1e4 --kind half-line "
            "--seed 7 --no-timestamp";
        const int rf1 = run(fit_args, dir + "/fit_a.json");
        const int rf2 = run(fit_args, dir + "/fit_b.json");
        c.require(rf1 == 0 && rf2 == 0, "fit exit codes");
        c.require(!slurp(dir + "/fit_a.json").empty() &&
                      slurp(dir + "/fit_a.json") == slurp(dir + "/fit_b.json"),
                  "fitted measures differ between identical runs");

        const int fail_rc =
            std::system((cli + " check --fn square --n 2 --trials 50 --seed 7 --no-timestamp "
                               ">/dev/null 2>&1")
                            .c_str());
        c.require(WIFEXITED(fail_rc) && WEXITSTATUS(fail_rc) == 1,
                  "fail verdict should exit 1, got " + std::to_string(WEXITSTATUS(fail_rc)));
    });

    std::printf("%s: %d/11 criteria passed\n", h.failures == 0 ? "OK" : "FAILURES",
                11 - h.failures);
    return h.failures == 0 ? 0 : 1;
}
