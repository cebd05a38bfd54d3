#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "isfsf/coefficients.hpp"
#include "isfsf/index_set.hpp"

namespace isfsf {

// Sign rows of the product-to-sum expansion: a 2^(D-1) x D matrix whose first
// column is all +1 and whose remaining columns enumerate {+1,-1}^(D-1).
// Row j assigns column c (c >= 1) the sign +1 if bit c-1 of j is set, else -1,
// so for D=2 the rows come out as (+1,-1), (+1,+1).
std::vector<std::vector<int>> build_sign_matrix(int dimension);

enum class TermKind : std::uint8_t { Cosine = 0, Sine = 1, Constant = 2 };
enum class FeatureMode : std::uint8_t { Full = 0, Sparse = 1 };

struct FeatureTerm {
    double amplitude;               // sqrt(rho / 2^(eta-1)) scaling of the harmonic
    Eigen::RowVectorXd frequencies; // entry d = k_d * omega0_d * sign, radians per input unit
    TermKind kind;
    std::size_t source_index;       // position of the originating vector in the index set
};

// Identity of the index set a map was compiled from.
struct FeatureMapProvenance {
    Family family = Family::Tensor;
    double refinement = 0.0;
    double zeta = 0.0;
    std::vector<double> gamma;
    std::uint64_t index_count = 0;
};

// A compiled, deterministic map from D-dimensional inputs to a fixed-length
// real feature vector whose inner products reproduce the kernel partial sum
// over the source index set. Construction fixes the layout once; evaluation
// is pure and reentrant.
class IsfsfFeatureMap {
public:
    int dimension() const { return static_cast<int>(frequencies_.cols()); }
    FeatureMode mode() const { return mode_; }
    std::size_t term_count() const { return static_cast<std::size_t>(amplitudes_.size()); }

    const Eigen::VectorXd& amplitudes() const { return amplitudes_; }
    const Eigen::MatrixXd& frequencies() const { return frequencies_; }
    const std::vector<TermKind>& kinds() const { return kinds_; }
    const std::vector<std::uint64_t>& source_indices() const { return sources_; }
    FeatureTerm term(std::size_t t) const;

    const PeriodicSeHyperparams& hyperparams() const { return hyperparams_; }
    const FeatureMapProvenance& provenance() const { return provenance_; }

    Eigen::VectorXd evaluate_point(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    // Row i of the result is the feature vector of row i of `points`.
    Eigen::MatrixXd evaluate(const Eigen::Ref<const Eigen::MatrixXd>& points) const;

    // Self-describing binary container; round-trips are bit-exact.
    void save(std::ostream& out) const;
    static IsfsfFeatureMap load(std::istream& in);

private:
    friend IsfsfFeatureMap expand_full(const IndexSet&, const CoefficientTable&);
    friend IsfsfFeatureMap expand_sparse(const IndexSet&, const CoefficientTable&);

    IsfsfFeatureMap(FeatureMode mode, PeriodicSeHyperparams hyperparams,
                    FeatureMapProvenance provenance)
        : mode_(mode), hyperparams_(std::move(hyperparams)), provenance_(std::move(provenance)) {}

    FeatureMode mode_;
    PeriodicSeHyperparams hyperparams_;
    FeatureMapProvenance provenance_;
    Eigen::VectorXd amplitudes_;
    Eigen::MatrixXd frequencies_;  // term_count x D
    std::vector<TermKind> kinds_;
    std::vector<std::uint64_t> sources_;
};

// Full expansion: every index vector contributes a cosine and a sine term for
// each of the 2^(D-1) sign rows, amplitude sqrt(rho / 2^(D-1)) with
// rho = prod_d q^2_{k_d}. Term count is exactly |I| * 2^D. Sign flips on zero
// entries produce duplicate rows; they are kept so the count stays exact.
IsfsfFeatureMap expand_full(const IndexSet& set, const CoefficientTable& coeffs);

// Masked expansion: dimensions with a zero index carry frequency zero and are
// dropped from the sign expansion. An index vector with eta non-zero entries
// contributes 2^eta terms of amplitude sqrt(rho / 2^(eta-1)); the all-zero
// vector contributes a single constant term sqrt(rho). Total term count is
// sum_i 2^(eta_i), and inner products match the full expansion exactly.
IsfsfFeatureMap expand_sparse(const IndexSet& set, const CoefficientTable& coeffs);

// Term counts from the cardinality formulas alone, without building the map.
std::uint64_t full_term_count(const IndexSet& set);
std::uint64_t sparse_term_count(const IndexSet& set);

}  // namespace isfsf
