#include "loewner/divided_differences.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <sstream>

namespace loewner {

namespace {

constexpr double kConfluence1 = 1e-7;  // relative gap below which [t,s] uses f'
constexpr double kMeanValue1 = 1e-3;   // relative gap below which [t,s] integrates f'
constexpr double kCluster2 = 1e-3;     // relative spread below which [t,s,r] integrates f''

// Gauss-Legendre 7 on [0,1]
constexpr std::array<double, 7> kGlNodes = {
    0.5 - 0.9491079123427585 / 2, 0.5 - 0.7415311855993945 / 2, 0.5 - 0.4058451513773972 / 2,
    0.5,
    0.5 + 0.4058451513773972 / 2, 0.5 + 0.7415311855993945 / 2, 0.5 + 0.9491079123427585 / 2};
constexpr std::array<double, 7> kGlWeights = {
    0.1294849661688697 / 2, 0.2797053914892766 / 2, 0.3818300505051189 / 2,
    0.4179591836734694 / 2,
    0.3818300505051189 / 2, 0.2797053914892766 / 2, 0.1294849661688697 / 2};

// [a,b,c]_f = \int_0^1 \int_0^{1-u} f''(a + u(b-a) + v(c-a)) dv du, evaluated
// with v = (1-u) w so both variables run over [0,1].
double cluster_divdiff2(const ScalarFunction& f, double a, double b, double c) {
    double acc = 0.0;
    for (int iu = 0; iu < 7; ++iu) {
        const double u = kGlNodes[iu];
        double inner = 0.0;
        for (int iw = 0; iw < 7; ++iw) {
            const double w = kGlNodes[iw];
            const double x = a + u * (b - a) + (1.0 - u) * w * (c - a);
            inner += kGlWeights[iw] * derivative2(f, x);
        }
        acc += kGlWeights[iu] * (1.0 - u) * inner;
    }
    return acc;
}

}  // namespace

void validate_grid(const Grid& grid, const Interval& domain) {
    if (grid.nodes.empty()) throw std::invalid_argument("Grid: empty node list");
    for (double t : grid.nodes)
        if (!domain.contains(t)) {
            std::ostringstream os;
            os << "Grid: node " << t << " outside domain " << domain.str();
            throw std::invalid_argument(os.str());
        }
}

double divdiff1(const ScalarFunction& f, double t, double s) {
    const double scale = std::max({1.0, std::abs(t), std::abs(s)});
    const double gap = std::abs(t - s);
    if (gap <= kConfluence1 * scale) {
        return derivative1(f, 0.5 * (t + s));
    }
    if (gap <= kMeanValue1 * scale && f.has_derivative1()) {
        // [t,s]_f = \int_0^1 f'(s + u (t-s)) du; free of the subtractive
        // cancellation that costs half the mantissa at small gaps
        double acc = 0.0;
        for (int i = 0; i < 7; ++i)
            acc += kGlWeights[i] * f.derivative1(s + kGlNodes[i] * (t - s));
        return acc;
    }
    return (checked_eval(f, t) - checked_eval(f, s)) / (t - s);
}

double divdiff2(const ScalarFunction& f, double t, double s, double r) {
    std::array<double, 3> x = {t, s, r};
    std::sort(x.begin(), x.end());
    const double a = x[0], b = x[1], c = x[2];
    const double scale = std::max({1.0, std::abs(a), std::abs(c)});
    const double spread = c - a;
    if (spread == 0.0) return 0.5 * derivative2(f, a);
    if (spread <= kCluster2 * scale) return cluster_divdiff2(f, a, b, c);
    return (divdiff1(f, a, b) - divdiff1(f, b, c)) / (a - c);
}

LoewnerMatrix loewner_matrix(const ScalarFunction& f, const Grid& grid) {
    validate_grid(grid, f.domain);
    const int n = grid.size();
    Eigen::MatrixXd l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = divdiff1(f, grid.nodes[i], grid.nodes[j]);
            l(i, j) = v;
            l(j, i) = v;
        }
    return {std::move(l), grid};
}

KrausMatrixSet kraus_matrices(const ScalarFunction& f, const Grid& grid) {
    validate_grid(grid, f.domain);
    const int n = grid.size();
    std::vector<Eigen::MatrixXd> hs;
    hs.reserve(n);
    for (int p = 0; p < n; ++p) {
        Eigen::MatrixXd h(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = 2.0 * divdiff2(f, grid.nodes[p], grid.nodes[i], grid.nodes[j]);
                h(i, j) = v;
                h(j, i) = v;
            }
        hs.push_back(std::move(h));
    }
    return {std::move(hs), grid};
}

double min_eigenvalue(const Eigen::MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::pair<double, Eigen::VectorXd> min_eigenpair(const Eigen::MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    int idx = 0;
    es.eigenvalues().minCoeff(&idx);
    return {es.eigenvalues()[idx], es.eigenvectors().col(idx)};
}

}  // namespace loewner
