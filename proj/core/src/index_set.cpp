#include "isfsf/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isfsf {

namespace {

constexpr double kBoundSlack = 1e-9;  // absorbs roundoff in integer bound computation

void validate_parameters(int dimension, double refinement,
                         const std::vector<double>& weights, double zeta) {
    if (dimension < 1) throw std::invalid_argument("IndexSet: dimension must be >= 1");
    if (!std::isfinite(refinement) || refinement < 1.0)
        throw std::invalid_argument("IndexSet: refinement below 1 yields an empty set");
    if (static_cast<int>(weights.size()) != dimension)
        throw std::invalid_argument("IndexSet: weights size must match dimension");
    for (double g : weights)
        if (!std::isfinite(g) || g <= 0.0 || g > 1.0)
            throw std::invalid_argument("IndexSet: weights must be finite and in (0,1]");
    if (!std::isfinite(zeta) || zeta < 0.0 || zeta >= 1.0)
        throw std::invalid_argument("IndexSet: zeta must lie in [0,1)");
}

double hyperbolic_prefix_product(const IndexVector& k, std::size_t upto,
                                 const std::vector<double>& gamma) {
    double p = 1.0;
    for (std::size_t j = 0; j < upto; ++j) p *= std::max(1.0, k[j] / gamma[j]);
    return p;
}

struct Generator {
    Family family;
    int dimension;
    double refinement;
    const std::vector<double>& gamma;
    double zeta;
    std::size_t max_cardinality;
    // max(1, sum gamma)^(zeta/(1-zeta)) bounds the l1 discount of the ENHC
    // weight, giving a per-dimension bound that provably covers the set.
    double enhc_discount_cap = 1.0;

    std::vector<IndexVector> out;
    IndexVector current;

    bool member(const IndexVector& k) const {
        switch (family) {
            case Family::Tensor: {
                int m = *std::max_element(k.begin(), k.end());
                return m <= refinement - 1.0;
            }
            case Family::TotalOrder: {
                double s = 0.0;
                for (int d = 0; d < dimension; ++d) s += k[d] / gamma[d];
                return s <= refinement;
            }
            case Family::Euclidean: {
                // squared form keeps gamma=1 integer ties exact
                double s = 0.0;
                for (int d = 0; d < dimension; ++d) {
                    double r = k[d] / gamma[d];
                    s += r * r;
                }
                return s <= refinement * refinement;
            }
            case Family::Hyperbolic:
                return hyperbolic_prefix_product(k, k.size(), gamma) <= refinement;
            case Family::Enhc:
                return enhc_weight(k, {gamma, zeta}) <= refinement;
        }
        return false;
    }

    // Largest k_d any member can have given the already-fixed prefix entries.
    // Must never under-estimate; final membership is decided exactly at the leaf.
    int dimension_bound(int d) const {
        switch (family) {
            case Family::Tensor:
                return static_cast<int>(std::floor(refinement - 1.0 + kBoundSlack));
            case Family::TotalOrder: {
                double used = 0.0;
                for (int j = 0; j < d; ++j) used += current[j] / gamma[j];
                return static_cast<int>(std::floor(gamma[d] * (refinement - used) + kBoundSlack));
            }
            case Family::Euclidean: {
                double used = 0.0;
                for (int j = 0; j < d; ++j) {
                    double r = current[j] / gamma[j];
                    used += r * r;
                }
                double rem = refinement * refinement - used;
                if (rem < 0.0) return -1;
                return static_cast<int>(std::floor(gamma[d] * std::sqrt(rem) + kBoundSlack));
            }
            case Family::Hyperbolic: {
                double p = hyperbolic_prefix_product(current, d, gamma);
                return static_cast<int>(std::floor(gamma[d] * refinement / p + kBoundSlack));
            }
            case Family::Enhc: {
                double p = hyperbolic_prefix_product(current, d, gamma);
                return static_cast<int>(
                    std::floor(gamma[d] * refinement * enhc_discount_cap / p + kBoundSlack));
            }
        }
        return -1;
    }

    void recurse(int d) {
        if (d == dimension) {
            if (member(current)) {
                if (out.size() >= max_cardinality)
                    throw std::runtime_error(
                        "IndexSet: cardinality exceeds the guard of " +
                        std::to_string(max_cardinality) + " vectors");
                out.push_back(current);
            }
            return;
        }
        int hi = dimension_bound(d);
        for (int kd = 0; kd <= hi; ++kd) {
            current[d] = kd;
            recurse(d + 1);
        }
        current[d] = 0;
    }
};

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::Tensor: return "tensor";
        case Family::TotalOrder: return "total_order";
        case Family::Euclidean: return "euclidean";
        case Family::Hyperbolic: return "hyperbolic";
        case Family::Enhc: return "enhc";
    }
    throw std::invalid_argument("unknown index set family");
}

Family family_from_string(std::string_view name) {
    if (name == "tensor") return Family::Tensor;
    if (name == "total_order") return Family::TotalOrder;
    if (name == "euclidean") return Family::Euclidean;
    if (name == "hyperbolic") return Family::Hyperbolic;
    if (name == "enhc") return Family::Enhc;
    throw std::invalid_argument("unknown index set family: " + std::string(name));
}

double enhc_weight(const IndexVector& k, const EnhcWeightParams& params) {
    if (k.size() != params.gamma.size())
        throw std::invalid_argument("enhc_weight: dimension mismatch between k and gamma");
    if (params.zeta < 0.0 || params.zeta >= 1.0)
        throw std::invalid_argument("enhc_weight: zeta must lie in [0,1)");
    for (double g : params.gamma)
        if (!std::isfinite(g) || g <= 0.0)
            throw std::invalid_argument("enhc_weight: gamma entries must be finite and positive");

    // zeta = 0 reduces exactly to the hyperbolic-cross weight; bypassing pow
    // keeps the ENHC(zeta=0) == Hyperbolic identity bit-exact.
    if (params.zeta == 0.0) {
        double w = 1.0;
        for (std::size_t d = 0; d < k.size(); ++d)
            w *= std::max(1.0, std::abs(static_cast<double>(k[d])) / params.gamma[d]);
        return w;
    }

    double l1 = 0.0;
    for (int kd : k) l1 += std::abs(static_cast<double>(kd));
    double w = std::pow(std::max(1.0, l1), params.zeta / (params.zeta - 1.0));
    double inner = 1.0 / (1.0 - params.zeta);
    for (std::size_t d = 0; d < k.size(); ++d)
        w *= std::pow(std::max(1.0, std::abs(static_cast<double>(k[d])) / params.gamma[d]), inner);
    return w;
}

IndexSet IndexSet::generate(Family family, int dimension, double refinement,
                            std::vector<double> weights, double zeta,
                            std::size_t max_cardinality) {
    if (weights.empty()) weights.assign(static_cast<std::size_t>(std::max(dimension, 0)), 1.0);
    validate_parameters(dimension, refinement, weights, zeta);

    Generator gen{family, dimension, refinement, weights, zeta, max_cardinality, 1.0, {}, {}};
    if (family == Family::Enhc && zeta > 0.0) {
        double gsum = 0.0;
        for (double g : weights) gsum += g;
        gen.enhc_discount_cap = std::pow(std::max(1.0, gsum), zeta / (1.0 - zeta));
    }
    gen.current.assign(dimension, 0);
    gen.recurse(0);

    IndexSet set;
    set.family_ = family;
    set.dimension_ = dimension;
    set.refinement_ = refinement;
    set.zeta_ = zeta;
    set.weights_ = std::move(weights);
    set.vectors_ = std::move(gen.out);
    return set;
}

std::vector<int> IndexSet::bounding_box() const {
    std::vector<int> box(static_cast<std::size_t>(dimension_), 0);
    for (const auto& k : vectors_)
        for (int d = 0; d < dimension_; ++d) box[d] = std::max(box[d], k[d]);
    return box;
}

void IndexSet::save(std::ostream& out) const {
    out.precision(std::numeric_limits<double>::max_digits10);
    out << to_string(family_) << ' ' << dimension_ << ' ' << refinement_ << ' ' << zeta_ << '\n';
    for (int d = 0; d < dimension_; ++d) out << (d ? " " : "") << weights_[d];
    out << '\n';
    for (const auto& k : vectors_) {
        for (int d = 0; d < dimension_; ++d) out << (d ? " " : "") << k[d];
        out << '\n';
    }
}

IndexSet IndexSet::load(std::istream& in) {
    std::string family_name;
    IndexSet set;
    if (!(in >> family_name >> set.dimension_ >> set.refinement_ >> set.zeta_))
        throw std::runtime_error("IndexSet::load: malformed header");
    set.family_ = family_from_string(family_name);
    if (set.dimension_ < 1) throw std::runtime_error("IndexSet::load: bad dimension");
    set.weights_.resize(static_cast<std::size_t>(set.dimension_));
    for (double& g : set.weights_)
        if (!(in >> g)) throw std::runtime_error("IndexSet::load: malformed weight line");
    IndexVector k(static_cast<std::size_t>(set.dimension_));
    while (in >> k[0]) {
        for (int d = 1; d < set.dimension_; ++d)
            if (!(in >> k[d])) throw std::runtime_error("IndexSet::load: truncated index vector");
        set.vectors_.push_back(k);
    }
    if (set.vectors_.empty()) throw std::runtime_error("IndexSet::load: no index vectors");
    return set;
}

}  // namespace isfsf
