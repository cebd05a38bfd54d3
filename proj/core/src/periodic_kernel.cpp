#include "isfsf/periodic_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace isfsf {

double periodic_se_kernel(const Eigen::Ref<const Eigen::VectorXd>& x,
                          const Eigen::Ref<const Eigen::VectorXd>& y,
                          const PeriodicSeHyperparams& hyperparams) {
    if (x.size() != hyperparams.dimension() || y.size() != hyperparams.dimension())
        throw std::invalid_argument("periodic_se_kernel: dimension mismatch");
    const std::vector<double> w0 = hyperparams.fundamental_frequencies();
    double log_k = 0.0;
    for (int d = 0; d < hyperparams.dimension(); ++d) {
        const double l = hyperparams.lengthscales()[static_cast<std::size_t>(d)];
        log_k += (std::cos(w0[static_cast<std::size_t>(d)] * (x[d] - y[d])) - 1.0) / (l * l);
    }
    return std::exp(log_k);
}

Eigen::MatrixXd periodic_se_gram(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 const PeriodicSeHyperparams& hyperparams) {
    if (points.cols() != hyperparams.dimension())
        throw std::invalid_argument("periodic_se_gram: dimension mismatch");
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        gram(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v =
                periodic_se_kernel(points.row(i).transpose(), points.row(j).transpose(), hyperparams);
            gram(i, j) = v;
            gram(j, i) = v;
        }
    }
    return gram;
}

}  // namespace isfsf
