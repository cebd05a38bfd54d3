#include "isfsf/blr.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace isfsf {

namespace {

constexpr char kMagic[4] = {'I', 'S', 'B', 'R'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("BlrModel::load: truncated stream");
    return v;
}

}  // namespace

BlrModel fit_blr(const Eigen::Ref<const Eigen::MatrixXd>& features,
                 const Eigen::Ref<const Eigen::VectorXd>& targets, double noise_variance,
                 double prior_variance) {
    const Eigen::Index n = features.rows();
    const Eigen::Index m = features.cols();
    if (n < 1 || m < 1) throw std::invalid_argument("fit_blr: need at least one row and column");
    if (targets.size() != n) throw std::invalid_argument("fit_blr: targets size mismatch");
    if (!(noise_variance > 0.0) || !(prior_variance > 0.0))
        throw std::invalid_argument("fit_blr: variances must be positive");

    Eigen::MatrixXd precision = features.transpose() * features / noise_variance;
    precision.diagonal().array() += 1.0 / prior_variance;

    Eigen::LLT<Eigen::MatrixXd> llt(precision);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("fit_blr: posterior precision factorization failed");

    BlrModel model;
    model.weight_mean = llt.solve(features.transpose() * targets / noise_variance);
    model.posterior_factor = llt.matrixL();
    model.noise_variance = noise_variance;
    model.prior_variance = prior_variance;
    return model;
}

PredictiveDistribution predict(const BlrModel& model,
                               const Eigen::Ref<const Eigen::MatrixXd>& features) {
    if (features.cols() != model.weight_mean.size())
        throw std::invalid_argument("predict: feature dimension mismatch");
    PredictiveDistribution out;
    out.mean = features * model.weight_mean;
    // var_i = sn^2 + || L^-1 phi_i ||^2, never forming the covariance
    Eigen::MatrixXd solved = model.posterior_factor.triangularView<Eigen::Lower>().solve(
        Eigen::MatrixXd(features.transpose()));
    out.variance = solved.colwise().squaredNorm().transpose();
    out.variance.array() += model.noise_variance;
    return out;
}

double rmse(const Eigen::Ref<const Eigen::VectorXd>& predictions,
            const Eigen::Ref<const Eigen::VectorXd>& truth) {
    if (predictions.size() == 0) throw std::invalid_argument("rmse: empty input");
    if (predictions.size() != truth.size()) throw std::invalid_argument("rmse: size mismatch");
    return std::sqrt((predictions - truth).squaredNorm() / static_cast<double>(predictions.size()));
}

double mnll(const Eigen::Ref<const Eigen::VectorXd>& mean,
            const Eigen::Ref<const Eigen::VectorXd>& variance,
            const Eigen::Ref<const Eigen::VectorXd>& truth) {
    if (mean.size() == 0) throw std::invalid_argument("mnll: empty input");
    if (mean.size() != variance.size() || mean.size() != truth.size())
        throw std::invalid_argument("mnll: size mismatch");
    double total = 0.0;
    for (Eigen::Index i = 0; i < mean.size(); ++i) {
        if (!(variance[i] > 0.0)) throw std::invalid_argument("mnll: variance must be positive");
        const double err = mean[i] - truth[i];
        total += 0.5 * std::log(2.0 * std::numbers::pi * variance[i]) +
                 err * err / (2.0 * variance[i]);
    }
    return total / static_cast<double>(mean.size());
}

void BlrModel::save(std::ostream& out) const {
    out.write(kMagic, sizeof(kMagic));
    write_pod<std::uint32_t>(out, kVersion);
    write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(weight_mean.size()));
    write_pod<double>(out, noise_variance);
    write_pod<double>(out, prior_variance);
    for (Eigen::Index i = 0; i < weight_mean.size(); ++i) write_pod<double>(out, weight_mean[i]);
    for (Eigen::Index i = 0; i < posterior_factor.rows(); ++i)
        for (Eigen::Index j = 0; j < posterior_factor.cols(); ++j)
            write_pod<double>(out, posterior_factor(i, j));
    write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(provenance.size()));
    out.write(provenance.data(), static_cast<std::streamsize>(provenance.size()));
}

BlrModel BlrModel::load(std::istream& in) {
    char magic[4];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("BlrModel::load: bad magic");
    if (read_pod<std::uint32_t>(in) != kVersion)
        throw std::runtime_error("BlrModel::load: unsupported version");
    const auto m = static_cast<Eigen::Index>(read_pod<std::uint64_t>(in));
    BlrModel model;
    model.noise_variance = read_pod<double>(in);
    model.prior_variance = read_pod<double>(in);
    model.weight_mean.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) model.weight_mean[i] = read_pod<double>(in);
    model.posterior_factor.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) model.posterior_factor(i, j) = read_pod<double>(in);
    const auto len = read_pod<std::uint64_t>(in);
    model.provenance.resize(len);
    in.read(model.provenance.data(), static_cast<std::streamsize>(len));
    if (!in) throw std::runtime_error("BlrModel::load: truncated provenance");
    return model;
}

}  // namespace isfsf
