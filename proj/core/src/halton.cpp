#include "isfsf/halton.hpp"

#include <stdexcept>

#include "isfsf/normal.hpp"

namespace isfsf {

namespace {

constexpr int kPrimes[kMaxHaltonDimension] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,
    61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139,
    149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229};

void check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("halton_sequence: dim must be >= 1");
    if (dim > kMaxHaltonDimension)
        throw std::invalid_argument("halton_sequence: dim exceeds the prime table of " +
                                    std::to_string(kMaxHaltonDimension));
}

double radical_inverse(std::uint64_t index, int base, const std::vector<int>& perm) {
    double inv_base = 1.0 / base;
    double factor = inv_base;
    double value = 0.0;
    while (index > 0) {
        value += factor * perm[static_cast<std::size_t>(index % static_cast<std::uint64_t>(base))];
        index /= static_cast<std::uint64_t>(base);
        factor *= inv_base;
    }
    return value;
}

}  // namespace

DigitPermutations identity_permutations(int dim) {
    check_dim(dim);
    DigitPermutations perms(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        perms[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(kPrimes[j]));
        for (int d = 0; d < kPrimes[j]; ++d) perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] = d;
    }
    return perms;
}

DigitPermutations scrambled_permutations(int dim, std::uint64_t seed) {
    DigitPermutations perms = identity_permutations(dim);
    for (int j = 0; j < dim; ++j) {
        // independent stream per base, golden-ratio stride on the seed
        std::mt19937_64 engine(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(j + 1)));
        auto& p = perms[static_cast<std::size_t>(j)];
        for (std::size_t i = p.size() - 1; i >= 2; --i) {
            // shuffle digits 1..b-1 only; 0 stays fixed
            std::size_t swap_with = 1 + static_cast<std::size_t>(uniform_below(engine, i));
            std::swap(p[i], p[swap_with]);
        }
    }
    return perms;
}

Eigen::MatrixXd halton_sequence(int n, int dim, const DigitPermutations& permutations,
                                int burn_in) {
    check_dim(dim);
    if (n < 1) throw std::invalid_argument("halton_sequence: n must be >= 1");
    if (burn_in < 0) throw std::invalid_argument("halton_sequence: burn_in must be >= 0");
    if (permutations.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("halton_sequence: one permutation per dimension required");

    Eigen::MatrixXd points(n, dim);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t index = static_cast<std::uint64_t>(i + 1 + burn_in);
        for (int j = 0; j < dim; ++j) {
            const double v = radical_inverse(index, kPrimes[j], permutations[static_cast<std::size_t>(j)]);
            if (!(v > 0.0 && v < 1.0))
                throw std::runtime_error("halton_sequence: point escaped (0,1)");
            points(i, j) = v;
        }
    }
    return points;
}

Eigen::MatrixXd halton_sequence(int n, int dim, bool generalized, std::uint64_t seed,
                                int burn_in) {
    return halton_sequence(
        n, dim, generalized ? scrambled_permutations(dim, seed) : identity_permutations(dim),
        burn_in);
}

}  // namespace isfsf
