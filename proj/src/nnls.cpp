#include "loewner/nnls.hpp"

#include <limits>
#include <vector>

namespace loewner {

NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iterations) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (b.size() != m) throw std::invalid_argument("nnls: size mismatch");
    if (max_iterations < 0) max_iterations = 3 * n + 30;

    NnlsResult out;
    out.x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(n, false);

    const double grad_tol =
        10.0 * std::numeric_limits<double>::epsilon() * a.cwiseAbs().colwise().sum().maxCoeff() *
        std::max(m, n);

    Eigen::VectorXd w = a.transpose() * (b - a * out.x);

    auto solve_passive = [&](const std::vector<int>& idx) {
        Eigen::MatrixXd ap(m, idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) ap.col(k) = a.col(idx[k]);
        return Eigen::VectorXd(ap.colPivHouseholderQr().solve(b));
    };

    int iter = 0;
    while (iter < max_iterations) {
        // pick the most promising bound variable
        int j = -1;
        double wmax = grad_tol;
        for (int i = 0; i < n; ++i)
            if (!passive[i] && w[i] > wmax) {
                wmax = w[i];
                j = i;
            }
        if (j < 0) break;  // KKT satisfied
        passive[j] = true;
        ++iter;

        for (;;) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (passive[i]) idx.push_back(i);
            Eigen::VectorXd z = solve_passive(idx);

            double alpha = 1.0;
            int blocker = -1;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                if (z[k] <= 0.0) {
                    const double xi = out.x[idx[k]];
                    const double step = xi / (xi - z[k]);
                    if (step < alpha) {
                        alpha = step;
                        blocker = static_cast<int>(k);
                    }
                }
            }
            if (blocker < 0) {
                for (std::size_t k = 0; k < idx.size(); ++k) out.x[idx[k]] = z[k];
                break;
            }
            for (std::size_t k = 0; k < idx.size(); ++k)
                out.x[idx[k]] += alpha * (z[k] - out.x[idx[k]]);
            out.x[idx[blocker]] = 0.0;
            passive[idx[blocker]] = false;
            const double floor = 1e-14 * out.x.cwiseAbs().maxCoeff();
            for (int i : idx)
                if (passive[i] && out.x[i] <= floor) {
                    out.x[i] = 0.0;
                    passive[i] = false;
                }
            if (++iter >= max_iterations) break;
        }
        w = a.transpose() * (b - a * out.x);
    }

    out.iterations = iter;
    out.converged = iter < max_iterations;
    out.residual_norm = (a * out.x - b).norm();
    return out;
}

}  // namespace loewner
