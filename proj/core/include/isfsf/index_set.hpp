#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace isfsf {

// Families of integer frequency lattices supporting a truncated
// multivariate Fourier series. All sets live in the non-negative orthant;
// negative frequencies are folded into the coefficient doubling of the
// cosine series.
enum class Family { Tensor, TotalOrder, Euclidean, Hyperbolic, Enhc };

std::string to_string(Family family);
Family family_from_string(std::string_view name);

// One frequency vector: D non-negative per-dimension refinement indices.
using IndexVector = std::vector<int>;

struct EnhcWeightParams {
    std::vector<double> gamma;  // per-dimension weights in (0,1]
    double zeta = 0.0;          // sparsity parameter in [0,1)
};

// Energy-norm hyperbolic cross weight
//   max(1,|k|_1)^(zeta/(zeta-1)) * prod_d max(1, |k_d|/gamma_d)^(1/(1-zeta)).
// Evaluates to exactly 1 at the zero vector. With zeta = 0 this reduces to
// the plain weighted hyperbolic-cross weight prod_d max(1, k_d/gamma_d).
double enhc_weight(const IndexVector& k, const EnhcWeightParams& params);

class IndexSet {
public:
    // Enumerates every non-negative integer vector whose family weight is
    // within the refinement budget R (ties at the boundary included):
    //   Tensor:     max_d k_d <= R-1
    //   TotalOrder: sum_d k_d/gamma_d <= R
    //   Euclidean:  ||k/gamma||_2 <= R
    //   Hyperbolic: prod_d max(1, k_d/gamma_d) <= R
    //   Enhc:       enhc_weight(k) <= R
    // Output is in lexicographic order. Empty `weights` means all ones.
    // Enumeration is dimension-recursive with per-dimension bounds derived
    // from the weight function; it never materializes a full box. Throws
    // std::runtime_error if the cardinality exceeds `max_cardinality`.
    static IndexSet generate(Family family, int dimension, double refinement,
                             std::vector<double> weights = {}, double zeta = 0.0,
                             std::size_t max_cardinality = 1 << 24);

    int dimension() const { return dimension_; }
    Family family() const { return family_; }
    double refinement() const { return refinement_; }
    const std::vector<double>& weights() const { return weights_; }
    double zeta() const { return zeta_; }

    std::size_t cardinality() const { return vectors_.size(); }
    const std::vector<IndexVector>& vectors() const { return vectors_; }

    // Per-dimension maximum entry; the coefficient table backing a feature
    // expansion must cover indices 0..bounding_box()[d] in every dimension.
    std::vector<int> bounding_box() const;

    // Plain text format: `family D R zeta` header line, one line of weights,
    // then one index vector per line as space-separated integers.
    void save(std::ostream& out) const;
    static IndexSet load(std::istream& in);

private:
    IndexSet() = default;

    Family family_ = Family::Tensor;
    int dimension_ = 0;
    double refinement_ = 0.0;
    double zeta_ = 0.0;
    std::vector<double> weights_;
    std::vector<IndexVector> vectors_;
};

}  // namespace isfsf
