#pragma once

#include <optional>
#include <string>

#include "loewner/divided_differences.hpp"
#include "loewner/hermitian.hpp"

namespace loewner {

inline constexpr double kDefaultPsdTol = 1e-9;  // relative to matrix scale

enum class Verdict { Pass, Fail };
enum class CheckMode { Monotone, Convex, Concave };

struct GridWitness {
    Grid grid;
    double eigenvalue = 0.0;  // the offending (negative) eigenvalue
    Eigen::VectorXd eigenvector;
    int kraus_index = -1;  // which H(p) failed; -1 for a Loewner witness
};

/// Outcome of a monotonicity/convexity check.  A fail verdict carries a
/// witness that re-verifies from scratch; a pass records how hard we looked.
struct Certificate {
    Verdict verdict = Verdict::Pass;
    CheckMode mode = CheckMode::Monotone;
    int order = 0;
    int trials_requested = 0;
    int trials_run = 0;
    double min_eigenvalue_seen = 0.0;  // min over trials of lambda_min / max(1, scale)
    double tol = kDefaultPsdTol;
    std::uint64_t seed = 0;
    std::string function_name;
    std::string interval;
    std::optional<GridWitness> witness;

    bool passed() const { return verdict == Verdict::Pass; }
};

enum class GridLayout { Uniform, LogUniform, NearConfluent };

/// Random grid in the interval's sampling box.  The near-confluent layout
/// pairs nodes at relative gap 1e-6, where naive divided differences break.
Grid sample_grid(const Interval& interval, int n, GridLayout layout, std::mt19937_64& rng);

/// n-monotonicity via positive semidefiniteness of sampled Loewner matrices.
Certificate check_monotone(const ScalarFunction& f, const Interval& interval, int n, int trials,
                           std::uint64_t seed, double tol = kDefaultPsdTol);

/// n-convexity (or n-concavity of f, when concave_flag) via Kraus matrices.
Certificate check_convex(const ScalarFunction& f, const Interval& interval, int n, int trials,
                         std::uint64_t seed, bool concave_flag = false,
                         double tol = kDefaultPsdTol);

struct CounterexamplePair {
    HermitianMatrix x;
    HermitianMatrix y;
    double min_eigenvalue;  // of f(y) - f(x); negative
};

/// Search for an ordered pair x <= y with f(x) <= f(y) violated.  Random
/// ordered pairs first, then the rank-one bump family.
std::optional<CounterexamplePair> counterexample_pair(const ScalarFunction& f,
                                                      const Interval& interval, int n, int budget,
                                                      std::uint64_t seed, double tol = 1e-6);

/// Convolution against the standard even bump exp(-1/(1-s^2)) (normalized to
/// unit integral), scaled to [-eps, eps].  Domain shrinks by eps at each
/// finite end; derivative1/derivative2 come from differentiated quadrature.
ScalarFunction mollify(const ScalarFunction& f, double epsilon);

/// g(t) = (f(t) - f(t0))/(t - t0) with g(t0) = f'(t0); the secant-slope
/// function whose operator monotonicity characterizes operator convexity.
ScalarFunction slope_function(const ScalarFunction& f, double t0);

}  // namespace loewner
