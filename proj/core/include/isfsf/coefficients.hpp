#pragma once

#include <vector>

namespace isfsf {

// Kernel hyperparameters of the D-dimensional periodic squared exponential:
// per-dimension lengthscales l_d and periods T_d, all strictly positive.
class PeriodicSeHyperparams {
public:
    PeriodicSeHyperparams(std::vector<double> lengthscales, std::vector<double> periods);

    int dimension() const { return static_cast<int>(lengthscales_.size()); }
    const std::vector<double>& lengthscales() const { return lengthscales_; }
    const std::vector<double>& periods() const { return periods_; }

    // omega0_d = 2*pi / T_d, radians per input unit.
    std::vector<double> fundamental_frequencies() const;

private:
    std::vector<double> lengthscales_;
    std::vector<double> periods_;
};

// Convenience for isotropic parameters in D dimensions.
PeriodicSeHyperparams isotropic_hyperparams(int dimension, double lengthscale, double period);

// Cosine-series coefficients q^2_0 .. q^2_{count-1} of the univariate
// periodic SE kernel with lengthscale l:
//   q^2_0 = e^(-x) I_0(x),  q^2_k = 2 e^(-x) I_k(x),  x = 1/l^2.
// The full series sums to 1.
std::vector<double> periodic_se_coefficients(double lengthscale, int count);

// Per-dimension coefficient sequences backing a feature expansion. The
// periodic SE factory fills them from the Bessel recurrence once; feature
// evaluation never recomputes special functions. Arbitrary per-dimension q^2
// sequences are accepted so other periodic kernels can be plugged in, as long
// as they are non-negative with total mass at most 1 and non-increasing from
// the first harmonic on.
class CoefficientTable {
public:
    CoefficientTable(std::vector<std::vector<double>> q_squared, PeriodicSeHyperparams hyperparams);

    static CoefficientTable periodic_se(const PeriodicSeHyperparams& hyperparams,
                                        const std::vector<int>& counts);
    static CoefficientTable periodic_se(const PeriodicSeHyperparams& hyperparams, int count);

    int dimension() const { return static_cast<int>(q_squared_.size()); }
    const std::vector<double>& q_squared(int dim) const { return q_squared_.at(static_cast<std::size_t>(dim)); }
    const std::vector<std::vector<double>>& q_squared() const { return q_squared_; }
    const PeriodicSeHyperparams& hyperparams() const { return hyperparams_; }

private:
    std::vector<std::vector<double>> q_squared_;
    PeriodicSeHyperparams hyperparams_;
};

// Multivariate truncation error eps(R, l) = 1 - prod_d sum_{r<R_d} q^2_r,
// the retained-mass deficit of the partial sum. Non-increasing in every R_d,
// and it bounds the kernel approximation gap at lag zero.
double truncation_error(int refinement, const PeriodicSeHyperparams& hyperparams);
double truncation_error(const std::vector<int>& refinements,
                        const PeriodicSeHyperparams& hyperparams);

}  // namespace isfsf
