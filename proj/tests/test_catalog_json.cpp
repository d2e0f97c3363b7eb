#include <doctest.h>

#include "loewner/catalog.hpp"
#include "loewner/json_io.hpp"

using namespace loewner;
using nlohmann::json;

TEST_CASE("catalog_lookup") {
    SUBCASE("extreme(0.5) is the harmonic-mean form") {
        const ScalarFunction f = catalog_lookup("extreme", {{"lambda", 0.5}});
        for (double t : {0.3, 1.0, 4.0})
            CHECK(f.eval(t) == doctest::Approx(2 * t / (1 + t)).epsilon(1e-14));
    }
    SUBCASE("power p=1 collapses to the identity") {
        const ScalarFunction f = catalog_lookup("power", {{"p", 1.0}});
        CHECK(f.eval(3.7) == doctest::Approx(3.7));
        CHECK(f.name == "id");
    }
    SUBCASE("compose(mobius, id) is t/(t+1)") {
        const ScalarFunction f =
            catalog_lookup("compose", {{"of", {json{{"fn", "mobius"}}, json{{"fn", "id"}}}}});
        for (double t : {0.5, 2.0}) CHECK(f.eval(t) == doctest::Approx(t / (t + 1)));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(catalog_lookup("frobnicate"), std::invalid_argument);
        CHECK_THROWS_AS(catalog_lookup("power"), std::invalid_argument);
        CHECK_THROWS_AS(catalog_lookup("extreme", {{"lambda", 2.0}}), std::invalid_argument);
    }
    SUBCASE("every entry resolves and validates") {
        for (const auto& [name, synopsis] : catalog_entries()) {
            json params = json::object();
            if (name == "power") params["p"] = 0.3;
            if (name == "extreme") params["lambda"] = 0.25;
            if (name == "poly") params["coeffs"] = {1.0, 2.0, 0.5};
            if (name == "compose") params["of"] = {json{{"fn", "sqrt"}}};
            const ScalarFunction f = catalog_lookup(name, params);
            CHECK(validate(f, 40).ok());
            CHECK_FALSE(synopsis.empty());
        }
    }
}

TEST_CASE("function_from_spec") {
    SUBCASE("affine-of builds 1 - 1/t") {
        const json spec = {{"affine", {{"a", -1.0}, {"b", 1.0}}},
                           {"of", {{"fn", "power"}, {"p", -1.0}}}};
        const ScalarFunction f = function_from_spec(spec);
        for (double t : {0.5, 1.0, 4.0}) CHECK(f.eval(t) == doctest::Approx(1.0 - 1.0 / t));
        CHECK(f.derivative1(2.0) == doctest::Approx(0.25));
    }
    SUBCASE("compose chains right to left") {
        const json spec = {{"compose", {json{{"fn", "log1p"}}, json{{"fn", "square"}}}}};
        const ScalarFunction f = function_from_spec(spec);
        CHECK(f.eval(3.0) == doctest::Approx(std::log(10.0)));
    }
    SUBCASE("bare names resolve") {
        CHECK(function_from_spec(json("sqrt")).eval(4.0) == doctest::Approx(2.0));
    }
    SUBCASE("garbage specs are rejected") {
        CHECK_THROWS_AS(function_from_spec(json{{"nope", 1}}), std::invalid_argument);
    }
}

TEST_CASE("matrix json round trip") {
    SUBCASE("complex entries keep the im block") {
        Eigen::MatrixXcd m(2, 2);
        m << Complex(1, 0), Complex(0.5, 0.25), Complex(0.5, -0.25), Complex(2, 0);
        const json j = matrix_to_json(m);
        CHECK(j.contains("im"));
        CHECK((matrix_from_json(j) - m).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("real matrices omit im and read back as zero") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
        m(0, 0) = 3.0;
        m(1, 0) = m(0, 1) = 1.0;
        const json j = matrix_to_json(m);
        CHECK_FALSE(j.contains("im"));
        CHECK((matrix_from_json(j) - m).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("measure and pick json") {
    const auto mu = make_measure(MeasureKind::HalfLine, {0.5, 2.0}, {0.25, 0.5}, 0.125, 0.125);
    const json j = measure_to_json(mu);
    CHECK(j["kind"] == "half-line");
    const auto back = measure_from_json(j);
    CHECK(back.nodes == mu.nodes);
    CHECK(back.weights == mu.weights);
    CHECK(back.atom_at_zero == mu.atom_at_zero);

    const auto rep = to_pick(0.5, 0.25, make_measure(MeasureKind::HalfLine, {1.0}, {1.0}));
    const json pj = pick_to_json(rep);
    CHECK(pj["alpha"] == 0.0);
    const auto rback = pick_from_json(pj);
    CHECK(rback.beta == doctest::Approx(rep.beta));
    CHECK(rback.nu.nodes == rep.nu.nodes);
}

TEST_CASE("certificate json carries the witness") {
    Certificate cert;
    cert.verdict = Verdict::Fail;
    cert.mode = CheckMode::Convex;
    cert.order = 2;
    cert.trials_requested = 10;
    cert.trials_run = 3;
    cert.min_eigenvalue_seen = -0.5;
    cert.seed = 42;
    cert.function_name = "cube";
    GridWitness w;
    w.grid.nodes = {1.0, 2.0};
    w.eigenvalue = -0.1;
    w.eigenvector = Eigen::Vector2d(0.6, -0.8);
    w.kraus_index = 1;
    cert.witness = w;
    const json j = certificate_to_json(cert);
    CHECK(j["verdict"] == "fail");
    CHECK(j["mode"] == "convex");
    CHECK(j["witness"]["kraus_index"] == 1);
    CHECK(j["witness"]["grid"].size() == 2);
}
