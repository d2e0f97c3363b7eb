#include "loewner/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "loewner/rng.hpp"

namespace loewner {

double max_abs_entry(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries) : m(std::move(entries)) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw std::invalid_argument("HermitianMatrix: need a square matrix with dim >= 1");
    const double scale = max_abs_entry(m);
    const double defect = hermiticity_defect(m);
    if (defect > 1e-12 * std::max(1.0, scale)) {
        std::ostringstream os;
        os << "HermitianMatrix: symmetry violation, max |A - A*| = " << defect
           << " exceeds 1e-12 * " << std::max(1.0, scale);
        throw std::invalid_argument(os.str());
    }
    // fold residual asymmetry so downstream solvers see an exactly Hermitian matrix
    m = 0.5 * (m + m.adjoint().eval());
}

SpectralDecomposition eigen_decompose(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigen_decompose: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& h) {
    const auto sd = eigen_decompose(h);
    Eigen::VectorXd fl(sd.eigenvalues.size());
    for (int i = 0; i < sd.eigenvalues.size(); ++i) {
        const double lam = sd.eigenvalues[i];
        if (!f.domain.contains(lam)) {
            std::ostringstream os;
            os << "apply_function: eigenvalue " << lam << " of input lies outside domain "
               << f.domain.str() << " of '" << f.name << "'";
            throw std::domain_error(os.str());
        }
        fl[i] = checked_eval(f, lam);
    }
    Eigen::MatrixXcd r =
        sd.eigenvectors * fl.asDiagonal() * sd.eigenvectors.adjoint();
    r = 0.5 * (r + r.adjoint().eval());
    return HermitianMatrix(std::move(r));
}

bool loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, double tol) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("loewner_leq: dimension mismatch");
    if (tol < 0.0) throw std::invalid_argument("loewner_leq: tol must be >= 0");
    const Eigen::MatrixXcd d = y.m - x.m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    return min_eig >= -tol * std::max(1.0, max_abs_entry(d));
}

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

HermitianMatrix random_hermitian_in(std::pair<double, double> box, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(box.first, box.second);
    Eigen::VectorXd lam(n);
    for (int i = 0; i < n; ++i) lam[i] = unif(rng);
    const Eigen::MatrixXcd u = random_unitary(n, rng);
    Eigen::MatrixXcd m = u * lam.asDiagonal() * u.adjoint();
    m = 0.5 * (m + m.adjoint().eval());
    return HermitianMatrix(std::move(m));
}

std::pair<HermitianMatrix, HermitianMatrix> sample_ordered_pair(const Interval& interval, int n,
                                                                std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_ordered_pair: n must be >= 1");
    const auto box = sampling_box(interval);
    const double len = box.second - box.first;
    if (!(len > 0)) throw std::invalid_argument("sample_ordered_pair: interval too narrow");

    auto rng = make_rng(seed, "ordered_pair");
    std::normal_distribution<double> gauss(0.0, 1.0);

    const double rho_hi = len / 4.0;
    const double rho_lo = std::min(1e-3, len / 40.0);

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const double rho = rho_lo * std::pow(rho_hi / rho_lo, u01(rng));

        // PSD bump of rank <= n with spectral norm rho
        std::uniform_int_distribution<int> rank_dist(1, n);
        const int rank = rank_dist(rng);
        Eigen::MatrixXcd bump = Eigen::MatrixXcd::Zero(n, n);
        for (int k = 0; k < rank; ++k) {
            Eigen::VectorXcd p(n);
            for (int i = 0; i < n; ++i) p[i] = Complex(gauss(rng), gauss(rng));
            bump += p * p.adjoint();
        }
        bump = 0.5 * (bump + bump.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> bes(bump, Eigen::EigenvaluesOnly);
        const double bnorm = bes.eigenvalues().cwiseAbs().maxCoeff();
        if (!(bnorm > 0)) continue;
        bump *= rho / bnorm;

        const double hi_x = box.second - rho;
        if (!(box.first < hi_x)) continue;
        HermitianMatrix x = random_hermitian_in({box.first, hi_x}, n, rng);

        // tiny ridge keeps y - x positive definite through rounding
        const double mu =
            16.0 * n * std::numeric_limits<double>::epsilon() *
            std::max({1.0, max_abs_entry(x.m), rho});
        Eigen::MatrixXcd ym = x.m + bump + mu * Eigen::MatrixXcd::Identity(n, n);
        ym = 0.5 * (ym + ym.adjoint().eval());
        HermitianMatrix y{std::move(ym)};

        const auto sx = eigen_decompose(x);
        const auto sy = eigen_decompose(y);
        const bool inside = interval.contains(sx.eigenvalues.minCoeff()) &&
                            interval.contains(sx.eigenvalues.maxCoeff()) &&
                            interval.contains(sy.eigenvalues.minCoeff()) &&
                            interval.contains(sy.eigenvalues.maxCoeff());
        if (inside) return {std::move(x), std::move(y)};
    }
    throw std::runtime_error("sample_ordered_pair: failed to place spectra inside interval");
}

}  // namespace loewner
