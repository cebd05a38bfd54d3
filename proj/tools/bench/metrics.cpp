#include "bench/metrics.hpp"

#include <stdexcept>

namespace isfsf::bench {

double frobenius_error(const Eigen::Ref<const Eigen::MatrixXd>& approx,
                       const Eigen::Ref<const Eigen::MatrixXd>& truth) {
    if (approx.rows() != truth.rows() || approx.cols() != truth.cols())
        throw std::invalid_argument("frobenius_error: shape mismatch");
    const double denom = truth.norm();
    if (denom == 0.0) throw std::invalid_argument("frobenius_error: reference matrix is zero");
    return (approx - truth).norm() / denom;
}

}  // namespace isfsf::bench
