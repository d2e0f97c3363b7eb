#include <doctest.h>

#include "loewner/catalog.hpp"
#include "loewner/criteria.hpp"
#include "loewner/rng.hpp"

using namespace loewner;

namespace {
const Interval kHalf = Interval::positive_halfline();
}

TEST_CASE("check_monotone") {
    SUBCASE("sqrt passes at order 4") {
        const auto cert = check_monotone(catalog_lookup("sqrt"), kHalf, 4, 200, 7);
        CHECK(cert.passed());
        CHECK(cert.min_eigenvalue_seen >= -1e-8);
        CHECK(cert.trials_run == 200);
        CHECK_FALSE(cert.witness.has_value());
    }
    SUBCASE("square fails at order 2 with a re-verifiable witness") {
        const ScalarFunction f = catalog_lookup("square");
        const auto cert = check_monotone(f, kHalf, 2, 100, 7);
        REQUIRE_FALSE(cert.passed());
        REQUIRE(cert.witness.has_value());
        const auto relitigated = loewner_matrix(f, cert.witness->grid);
        const double scale = std::max(1.0, relitigated.entries.cwiseAbs().maxCoeff());
        CHECK(min_eigenvalue(relitigated.entries) < -cert.tol * scale);
        // witness eigenvector reproduces the negative eigenvalue
        const Eigen::VectorXd& v = cert.witness->eigenvector;
        CHECK(v.dot(relitigated.entries * v) / v.squaredNorm() ==
              doctest::Approx(cert.witness->eigenvalue).epsilon(1e-9));
    }
    SUBCASE("constant passes at any order (L = 0)") {
        CHECK(check_monotone(catalog_lookup("const"), kHalf, 3, 60, 5).passed());
    }
    SUBCASE("verdicts and witnesses reproduce under the stored seed") {
        const ScalarFunction f = catalog_lookup("exp");
        const auto a = check_monotone(f, kHalf, 2, 100, 321);
        const auto b = check_monotone(f, kHalf, 2, 100, a.seed);
        REQUIRE_FALSE(a.passed());
        REQUIRE(b.witness.has_value());
        CHECK(a.trials_run == b.trials_run);
        CHECK(a.witness->grid.nodes == b.witness->grid.nodes);
        CHECK(a.min_eigenvalue_seen == b.min_eigenvalue_seen);
    }
}

TEST_CASE("check_convex") {
    SUBCASE("square is operator convex") {
        CHECK(check_convex(catalog_lookup("square"), kHalf, 3, 150, 7).passed());
    }
    SUBCASE("sqrt is operator concave") {
        const auto cert = check_convex(catalog_lookup("sqrt"), kHalf, 3, 150, 7, true);
        CHECK(cert.passed());
        CHECK(cert.mode == CheckMode::Concave);
    }
    SUBCASE("cube is not operator convex; witness re-verifies") {
        const ScalarFunction f = catalog_lookup("cube");
        const auto cert = check_convex(f, kHalf, 2, 100, 7);
        REQUIRE_FALSE(cert.passed());
        REQUIRE(cert.witness.has_value());
        REQUIRE(cert.witness->kraus_index >= 0);
        const auto ks = kraus_matrices(f, cert.witness->grid);
        const auto& h = ks.matrices[cert.witness->kraus_index];
        CHECK(min_eigenvalue(h) < -cert.tol * std::max(1.0, h.cwiseAbs().maxCoeff()));
    }
    SUBCASE("1/t is operator convex") {
        const ScalarFunction inv = catalog_lookup("power", {{"p", -1.0}});
        CHECK(check_convex(inv, kHalf, 3, 150, 7).passed());
    }
}

TEST_CASE("counterexample_pair") {
    SUBCASE("square violates the order at n=2 within 100 samples") {
        const ScalarFunction f = catalog_lookup("square");
        const auto hit = counterexample_pair(f, kHalf, 2, 100, 7);
        REQUIRE(hit.has_value());
        CHECK(loewner_leq(hit->x, hit->y, 1e-12));
        // re-verify the violation from scratch
        const auto fx = apply_function(f, hit->x);
        const auto fy = apply_function(f, hit->y);
        Eigen::MatrixXcd d = fy.m - fx.m;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint().eval()),
                                                           Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() < -1e-6);
        CHECK(hit->min_eigenvalue == doctest::Approx(es.eigenvalues().minCoeff()));
    }
    SUBCASE("sqrt yields none") {
        CHECK_FALSE(counterexample_pair(catalog_lookup("sqrt"), kHalf, 2, 300, 7).has_value());
    }
    SUBCASE("identity yields none") {
        CHECK_FALSE(counterexample_pair(catalog_lookup("id"), kHalf, 2, 100, 7).has_value());
    }
    SUBCASE("the classical bump example verifies") {
        // x = [[1,1],[1,1]] + dI, y = [[2,1],[1,1]] + dI
        const double d = 0.01;
        Eigen::MatrixXcd xm(2, 2), ym(2, 2);
        xm << 1 + d, 1, 1, 1 + d;
        ym << 2 + d, 1, 1, 1 + d;
        const HermitianMatrix x(xm), y(ym);
        CHECK(loewner_leq(x, y, 0.0));
        const ScalarFunction f = catalog_lookup("square");
        Eigen::MatrixXcd diff = apply_function(f, y).m - apply_function(f, x).m;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (diff + diff.adjoint().eval()),
                                                           Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() < -1e-3);
    }
}

TEST_CASE("mollify") {
    SUBCASE("reproduces affine functions exactly") {
        const ScalarFunction f = catalog_lookup("affine", {{"a", 3.0}, {"b", 2.0}});
        const ScalarFunction fe = mollify(f, 0.25);
        for (double t : {-1.0, 0.0, 0.7, 5.0})
            CHECK(fe.eval(t) == doctest::Approx(3.0 * t + 2.0).epsilon(1e-12));
    }
    SUBCASE("domain shrinks by epsilon") {
        const ScalarFunction fe = mollify(catalog_lookup("sqrt"), 0.5);
        CHECK(fe.domain.lower == doctest::Approx(0.5));
        CHECK(fe.domain.upper_infinite());
        CHECK_THROWS_AS(mollify(catalog_lookup("mobius", {{"inverse", true}}), 0.6),
                        std::invalid_argument);
    }
    SUBCASE("uniform convergence on compacts: errors shrink monotonically") {
        const ScalarFunction f = catalog_lookup("sqrt");
        double prev = 1e9;
        for (double eps : {0.1, 0.01, 0.001}) {
            const double err = std::abs(mollify(f, eps).eval(1.0) - 1.0);
            CHECK(err < prev);
            prev = err;
        }
    }
    SUBCASE("derivative converges: |f_eps'(1) - f'(1)| decreasing") {
        const ScalarFunction f = catalog_lookup("sqrt");
        double prev = 1e9;
        for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
            const double err = std::abs(mollify(f, eps).derivative1(1.0) - 0.5);
            CHECK(err < prev + 1e-6);
            prev = err;
        }
        CHECK(prev < 1e-8);
    }
    SUBCASE("mollification preserves a monotone verdict") {
        const ScalarFunction fe = mollify(catalog_lookup("sqrt"), 0.05);
        const auto cert = check_monotone(fe, fe.domain, 3, 60, 7);
        CHECK(cert.passed());
    }
}

TEST_CASE("slope_function") {
    SUBCASE("square at t0=2 gives t+2, operator monotone at order 3") {
        const ScalarFunction g = slope_function(catalog_lookup("square"), 2.0);
        CHECK(g.eval(5.0) == doctest::Approx(7.0));
        CHECK(g.eval(2.0) == doctest::Approx(4.0));  // f'(2)
        CHECK(check_monotone(g, kHalf, 3, 100, 7).passed());
    }
    SUBCASE("affine slope is constant") {
        const ScalarFunction g = slope_function(catalog_lookup("affine", {{"a", 4.0}}), 1.0);
        CHECK(g.eval(0.3) == doctest::Approx(4.0));
        CHECK(g.eval(9.0) == doctest::Approx(4.0));
    }
    SUBCASE("cube at t0=1 gives t^2+t+1, which fails at order 2") {
        const ScalarFunction g = slope_function(catalog_lookup("cube"), 1.0);
        CHECK(g.eval(2.0) == doctest::Approx(7.0));
        CHECK_FALSE(check_monotone(g, kHalf, 2, 100, 7).passed());
    }
    SUBCASE("t0 outside the domain is rejected") {
        CHECK_THROWS_AS(slope_function(catalog_lookup("sqrt"), -1.0), std::invalid_argument);
    }
}

TEST_CASE("monotone/concave cross-checks") {
    // 2n-monotone implies n-concave on (0,inf)
    for (const char* name : {"sqrt", "log1p"}) {
        const ScalarFunction f = catalog_lookup(name);
        const auto mono = check_monotone(f, kHalf, 4, 120, 11);
        const auto conc = check_convex(f, kHalf, 2, 120, 11, true);
        CHECK(mono.passed());
        CHECK(conc.passed());
    }
    // nonnegative n-concave implies n-monotone
    {
        const ScalarFunction f = catalog_lookup("sqrt");  // positive and concave
        CHECK(check_convex(f, kHalf, 3, 120, 13, true).passed());
        CHECK(check_monotone(f, kHalf, 3, 120, 13).passed());
    }
}

TEST_CASE("evaluation failures surface as errors, not fail verdicts") {
    ScalarFunction broken;  // claims (0,inf) but is only finite past 5
    broken.domain = Interval::positive_halfline();
    broken.eval = [](double t) { return std::sqrt(t - 5.0); };
    broken.name = "broken";
    CHECK_THROWS_AS(check_monotone(broken, kHalf, 2, 50, 7), std::domain_error);
    CHECK_THROWS_AS(check_convex(broken, kHalf, 2, 50, 7), std::domain_error);
}

TEST_CASE("zero-derivative rigidity inequality") {
    // PSD 2x2 Loewner matrices force f'(t) f'(s) >= [t,s]^2
    auto rng = make_rng(5, "test.rigidity");
    std::uniform_real_distribution<double> unif(0.05, 50.0);
    for (const char* name : {"sqrt", "log1p", "mobius"}) {
        const ScalarFunction f = catalog_lookup(name);
        for (int k = 0; k < 50; ++k) {
            const double t = unif(rng), s = unif(rng);
            const double dd = divdiff1(f, t, s);
            CHECK(f.derivative1(t) * f.derivative1(s) >= dd * dd - 1e-9);
        }
    }
}
