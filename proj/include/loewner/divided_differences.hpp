#pragma once

#include <Eigen/Dense>
#include <vector>

#include "loewner/scalar_function.hpp"

namespace loewner {

/// Evaluation nodes lambda_1..lambda_n (repeats allowed; repeated nodes route
/// through the confluent formulas).
struct Grid {
    std::vector<double> nodes;

    int size() const { return static_cast<int>(nodes.size()); }
};

void validate_grid(const Grid& grid, const Interval& domain);

/// First divided difference [t,s]_f = (f(t)-f(s))/(t-s), switching to the
/// derivative at the midpoint when |t-s| <= 1e-7 * max(1,|t|,|s|), below
/// which the subtractive form has lost half the mantissa.
double divdiff1(const ScalarFunction& f, double t, double s);

/// Second divided difference [t,s,r]_f, symmetric in its arguments.  Clustered
/// node triples (spread <= 1e-3 relative) are evaluated through the integral
/// form over the simplex, which needs f'' but no cancellation-prone
/// subtraction; [t,t,t]_f = f''(t)/2.
double divdiff2(const ScalarFunction& f, double t, double s, double r);

struct LoewnerMatrix {
    Eigen::MatrixXd entries;  // symmetric, entries(i,j) = [lambda_i, lambda_j]_f
    Grid grid;
};

struct KrausMatrixSet {
    std::vector<Eigen::MatrixXd> matrices;  // H(p)(i,j) = 2 [lambda_p, lambda_i, lambda_j]_f
    Grid grid;
};

LoewnerMatrix loewner_matrix(const ScalarFunction& f, const Grid& grid);
KrausMatrixSet kraus_matrices(const ScalarFunction& f, const Grid& grid);

double min_eigenvalue(const Eigen::MatrixXd& sym);
std::pair<double, Eigen::VectorXd> min_eigenpair(const Eigen::MatrixXd& sym);

}  // namespace loewner
