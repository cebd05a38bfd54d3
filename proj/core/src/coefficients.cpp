#include "isfsf/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isfsf/bessel.hpp"

namespace isfsf {

PeriodicSeHyperparams::PeriodicSeHyperparams(std::vector<double> lengthscales,
                                             std::vector<double> periods)
    : lengthscales_(std::move(lengthscales)), periods_(std::move(periods)) {
    if (lengthscales_.empty() || lengthscales_.size() != periods_.size())
        throw std::invalid_argument("PeriodicSeHyperparams: need matching non-empty l and T");
    for (double l : lengthscales_)
        if (!std::isfinite(l) || l <= 0.0)
            throw std::invalid_argument("PeriodicSeHyperparams: lengthscales must be positive");
    for (double t : periods_)
        if (!std::isfinite(t) || t <= 0.0)
            throw std::invalid_argument("PeriodicSeHyperparams: periods must be positive");
}

std::vector<double> PeriodicSeHyperparams::fundamental_frequencies() const {
    std::vector<double> w0(periods_.size());
    for (std::size_t d = 0; d < periods_.size(); ++d)
        w0[d] = 2.0 * std::numbers::pi / periods_[d];
    return w0;
}

PeriodicSeHyperparams isotropic_hyperparams(int dimension, double lengthscale, double period) {
    if (dimension < 1) throw std::invalid_argument("isotropic_hyperparams: dimension must be >= 1");
    return PeriodicSeHyperparams(std::vector<double>(static_cast<std::size_t>(dimension), lengthscale),
                                 std::vector<double>(static_cast<std::size_t>(dimension), period));
}

std::vector<double> periodic_se_coefficients(double lengthscale, int count) {
    if (!std::isfinite(lengthscale) || lengthscale <= 0.0)
        throw std::invalid_argument("periodic_se_coefficients: lengthscale must be positive");
    if (count < 1) throw std::invalid_argument("periodic_se_coefficients: count must be >= 1");
    const double x = 1.0 / (lengthscale * lengthscale);
    std::vector<double> q2 = bessel_i_scaled_sequence(count - 1, x);
    for (std::size_t k = 1; k < q2.size(); ++k) q2[k] *= 2.0;
    return q2;
}

CoefficientTable::CoefficientTable(std::vector<std::vector<double>> q_squared,
                                   PeriodicSeHyperparams hyperparams)
    : q_squared_(std::move(q_squared)), hyperparams_(std::move(hyperparams)) {
    if (q_squared_.size() != static_cast<std::size_t>(hyperparams_.dimension()))
        throw std::invalid_argument("CoefficientTable: dimension mismatch");
    constexpr double slack = 1e-9;
    for (const auto& q2 : q_squared_) {
        if (q2.empty()) throw std::invalid_argument("CoefficientTable: empty coefficient sequence");
        double mass = 0.0;
        for (double v : q2) {
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("CoefficientTable: coefficients must be non-negative");
            mass += v;
        }
        if (mass > 1.0 + slack)
            throw std::invalid_argument("CoefficientTable: coefficient mass exceeds 1");
        for (std::size_t r = 2; r < q2.size(); ++r)
            if (q2[r] > q2[r - 1] + slack)
                throw std::invalid_argument(
                    "CoefficientTable: coefficients must be non-increasing from r = 1 on");
    }
}

CoefficientTable CoefficientTable::periodic_se(const PeriodicSeHyperparams& hyperparams,
                                               const std::vector<int>& counts) {
    if (counts.size() != static_cast<std::size_t>(hyperparams.dimension()))
        throw std::invalid_argument("CoefficientTable: counts size must match dimension");
    std::vector<std::vector<double>> q2(counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d)
        q2[d] = periodic_se_coefficients(hyperparams.lengthscales()[d], counts[d]);
    return CoefficientTable(std::move(q2), hyperparams);
}

CoefficientTable CoefficientTable::periodic_se(const PeriodicSeHyperparams& hyperparams,
                                               int count) {
    return periodic_se(hyperparams,
                       std::vector<int>(static_cast<std::size_t>(hyperparams.dimension()), count));
}

double truncation_error(const std::vector<int>& refinements,
                        const PeriodicSeHyperparams& hyperparams) {
    if (refinements.size() != static_cast<std::size_t>(hyperparams.dimension()))
        throw std::invalid_argument("truncation_error: refinements size must match dimension");
    double retained = 1.0;
    for (std::size_t d = 0; d < refinements.size(); ++d) {
        if (refinements[d] < 1) throw std::invalid_argument("truncation_error: refinement must be >= 1");
        const std::vector<double> q2 =
            periodic_se_coefficients(hyperparams.lengthscales()[d], refinements[d]);
        double mass = 0.0;
        for (double v : q2) mass += v;
        retained *= mass;
    }
    return 1.0 - retained;
}

double truncation_error(int refinement, const PeriodicSeHyperparams& hyperparams) {
    return truncation_error(
        std::vector<int>(static_cast<std::size_t>(hyperparams.dimension()), refinement),
        hyperparams);
}

}  // namespace isfsf
