#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>

namespace isfsf {

// Conjugate Bayesian linear regression over an explicit feature map.
// The posterior over weights has precision (1/sn^2) Phi^T Phi + (1/sw^2) I;
// the model stores its lower Cholesky factor, never the covariance.
struct BlrModel {
    Eigen::VectorXd weight_mean;
    Eigen::MatrixXd posterior_factor;  // lower-triangular Cholesky of the precision
    double noise_variance = 0.0;       // sn^2
    double prior_variance = 0.0;       // sw^2
    std::string provenance;            // free-form feature-map identity, carried through serialization

    void save(std::ostream& out) const;
    static BlrModel load(std::istream& in);
};

struct PredictiveDistribution {
    Eigen::VectorXd mean;
    Eigen::VectorXd variance;  // >= noise_variance everywhere
};

// Deterministic fit via the normal equations factorization. Throws
// std::runtime_error if the precision factorization fails; nothing is ever
// silently regularized.
BlrModel fit_blr(const Eigen::Ref<const Eigen::MatrixXd>& features,
                 const Eigen::Ref<const Eigen::VectorXd>& targets, double noise_variance,
                 double prior_variance);

PredictiveDistribution predict(const BlrModel& model,
                               const Eigen::Ref<const Eigen::MatrixXd>& features);

double rmse(const Eigen::Ref<const Eigen::VectorXd>& predictions,
            const Eigen::Ref<const Eigen::VectorXd>& truth);

// Mean negative log loss of Gaussian predictions,
//   (1/N) sum_i 1/2 log(2 pi var_i) + (mean_i - truth_i)^2 / (2 var_i),
// with `variance` the predictive variance.
double mnll(const Eigen::Ref<const Eigen::VectorXd>& mean,
            const Eigen::Ref<const Eigen::VectorXd>& variance,
            const Eigen::Ref<const Eigen::VectorXd>& truth);

}  // namespace isfsf
