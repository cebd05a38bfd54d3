#include "isfsf/feature_map.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace isfsf {

namespace {

void write_bytes(std::ostream& out, const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void read_bytes(std::istream& in, void* p, std::size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (!in) throw std::runtime_error("IsfsfFeatureMap::load: truncated container");
}

template <typename T>
void write_pod(std::ostream& out, T v) {
    write_bytes(out, &v, sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
    T v;
    read_bytes(in, &v, sizeof(T));
    return v;
}

constexpr char kMagic[4] = {'I', 'S', 'F', 'F'};
constexpr std::uint32_t kVersion = 1;

void check_compatible(const IndexSet& set, const CoefficientTable& coeffs) {
    if (set.dimension() != coeffs.dimension())
        throw std::invalid_argument("feature expansion: index set and coefficient table dimensions differ");
    const std::vector<int> box = set.bounding_box();
    for (int d = 0; d < set.dimension(); ++d)
        if (box[d] >= static_cast<int>(coeffs.q_squared(d).size()))
            throw std::invalid_argument("feature expansion: index outside coefficient range");
}

FeatureMapProvenance provenance_of(const IndexSet& set) {
    return FeatureMapProvenance{set.family(), set.refinement(), set.zeta(), set.weights(),
                                static_cast<std::uint64_t>(set.cardinality())};
}

double coefficient_product(const IndexVector& k, const CoefficientTable& coeffs) {
    double rho = 1.0;
    for (std::size_t d = 0; d < k.size(); ++d)
        rho *= coeffs.q_squared(static_cast<int>(d))[static_cast<std::size_t>(k[d])];
    return rho;
}

}  // namespace

std::vector<std::vector<int>> build_sign_matrix(int dimension) {
    if (dimension < 1) throw std::invalid_argument("build_sign_matrix: dimension must be >= 1");
    if (dimension > 30) throw std::invalid_argument("build_sign_matrix: dimension too large");
    const std::size_t rows = std::size_t{1} << (dimension - 1);
    std::vector<std::vector<int>> xi(rows, std::vector<int>(static_cast<std::size_t>(dimension), 1));
    for (std::size_t j = 0; j < rows; ++j)
        for (int c = 1; c < dimension; ++c)
            xi[j][static_cast<std::size_t>(c)] = ((j >> (c - 1)) & 1u) ? 1 : -1;
    return xi;
}

std::uint64_t full_term_count(const IndexSet& set) {
    return static_cast<std::uint64_t>(set.cardinality()) << set.dimension();
}

std::uint64_t sparse_term_count(const IndexSet& set) {
    std::uint64_t total = 0;
    for (const auto& k : set.vectors()) {
        int eta = 0;
        for (int kd : k) eta += (kd != 0);
        total += std::uint64_t{1} << eta;
    }
    return total;
}

IsfsfFeatureMap expand_full(const IndexSet& set, const CoefficientTable& coeffs) {
    check_compatible(set, coeffs);
    const int D = set.dimension();
    const std::vector<double> w0 = coeffs.hyperparams().fundamental_frequencies();
    const auto xi = build_sign_matrix(D);

    IsfsfFeatureMap map(FeatureMode::Full, coeffs.hyperparams(), provenance_of(set));
    const Eigen::Index n = static_cast<Eigen::Index>(full_term_count(set));
    map.amplitudes_.resize(n);
    map.frequencies_.resize(n, D);
    map.kinds_.resize(static_cast<std::size_t>(n));
    map.sources_.resize(static_cast<std::size_t>(n));

    Eigen::Index t = 0;
    const double scale = std::ldexp(1.0, -(D - 1));  // 1 / 2^(D-1)
    for (std::size_t i = 0; i < set.cardinality(); ++i) {
        const IndexVector& k = set.vectors()[i];
        const double amplitude = std::sqrt(coefficient_product(k, coeffs) * scale);
        for (const auto& row : xi) {
            for (int d = 0; d < D; ++d)
                map.frequencies_(t, d) = k[static_cast<std::size_t>(d)] *
                                         w0[static_cast<std::size_t>(d)] *
                                         row[static_cast<std::size_t>(d)];
            map.frequencies_.row(t + 1) = map.frequencies_.row(t);
            map.amplitudes_[t] = amplitude;
            map.amplitudes_[t + 1] = amplitude;
            map.kinds_[static_cast<std::size_t>(t)] = TermKind::Cosine;
            map.kinds_[static_cast<std::size_t>(t + 1)] = TermKind::Sine;
            map.sources_[static_cast<std::size_t>(t)] = i;
            map.sources_[static_cast<std::size_t>(t + 1)] = i;
            t += 2;
        }
    }
    return map;
}

IsfsfFeatureMap expand_sparse(const IndexSet& set, const CoefficientTable& coeffs) {
    check_compatible(set, coeffs);
    const int D = set.dimension();
    const std::vector<double> w0 = coeffs.hyperparams().fundamental_frequencies();

    IsfsfFeatureMap map(FeatureMode::Sparse, coeffs.hyperparams(), provenance_of(set));
    const Eigen::Index n = static_cast<Eigen::Index>(sparse_term_count(set));
    map.amplitudes_.resize(n);
    map.frequencies_.setZero(n, D);
    map.kinds_.resize(static_cast<std::size_t>(n));
    map.sources_.resize(static_cast<std::size_t>(n));

    Eigen::Index t = 0;
    std::vector<int> nonzero;
    for (std::size_t i = 0; i < set.cardinality(); ++i) {
        const IndexVector& k = set.vectors()[i];
        const double rho = coefficient_product(k, coeffs);
        nonzero.clear();
        for (int d = 0; d < D; ++d)
            if (k[static_cast<std::size_t>(d)] != 0) nonzero.push_back(d);
        const int eta = static_cast<int>(nonzero.size());

        if (eta == 0) {
            map.amplitudes_[t] = std::sqrt(rho);
            map.kinds_[static_cast<std::size_t>(t)] = TermKind::Constant;
            map.sources_[static_cast<std::size_t>(t)] = i;
            ++t;
            continue;
        }

        // The 2^(eta-1) sign rows on the non-zero dimensions must carry the
        // full coefficient mass for inner products to match the full map.
        const double amplitude = std::sqrt(rho * std::ldexp(1.0, -(eta - 1)));
        for (const auto& row : build_sign_matrix(eta)) {
            for (int c = 0; c < eta; ++c) {
                const int d = nonzero[static_cast<std::size_t>(c)];
                map.frequencies_(t, d) = k[static_cast<std::size_t>(d)] *
                                         w0[static_cast<std::size_t>(d)] *
                                         row[static_cast<std::size_t>(c)];
            }
            map.frequencies_.row(t + 1) = map.frequencies_.row(t);
            map.amplitudes_[t] = amplitude;
            map.amplitudes_[t + 1] = amplitude;
            map.kinds_[static_cast<std::size_t>(t)] = TermKind::Cosine;
            map.kinds_[static_cast<std::size_t>(t + 1)] = TermKind::Sine;
            map.sources_[static_cast<std::size_t>(t)] = i;
            map.sources_[static_cast<std::size_t>(t + 1)] = i;
            t += 2;
        }
    }
    return map;
}

FeatureTerm IsfsfFeatureMap::term(std::size_t t) const {
    if (t >= term_count()) throw std::out_of_range("IsfsfFeatureMap::term");
    return FeatureTerm{amplitudes_[static_cast<Eigen::Index>(t)],
                       frequencies_.row(static_cast<Eigen::Index>(t)), kinds_[t], sources_[t]};
}

Eigen::VectorXd IsfsfFeatureMap::evaluate_point(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    if (x.size() != dimension())
        throw std::invalid_argument("IsfsfFeatureMap::evaluate_point: dimension mismatch");
    Eigen::VectorXd phase = frequencies_ * x;
    Eigen::VectorXd out(phase.size());
    for (Eigen::Index t = 0; t < phase.size(); ++t) {
        switch (kinds_[static_cast<std::size_t>(t)]) {
            case TermKind::Cosine: out[t] = std::cos(phase[t]); break;
            case TermKind::Sine: out[t] = std::sin(phase[t]); break;
            case TermKind::Constant: out[t] = 1.0; break;
        }
    }
    return amplitudes_.cwiseProduct(out);
}

Eigen::MatrixXd IsfsfFeatureMap::evaluate(const Eigen::Ref<const Eigen::MatrixXd>& points) const {
    if (points.cols() != dimension())
        throw std::invalid_argument("IsfsfFeatureMap::evaluate: dimension mismatch");
    Eigen::MatrixXd phases = points * frequencies_.transpose();
    for (Eigen::Index t = 0; t < phases.cols(); ++t) {
        switch (kinds_[static_cast<std::size_t>(t)]) {
            case TermKind::Cosine:
                phases.col(t) = phases.col(t).array().cos() * amplitudes_[t];
                break;
            case TermKind::Sine:
                phases.col(t) = phases.col(t).array().sin() * amplitudes_[t];
                break;
            case TermKind::Constant:
                phases.col(t).setConstant(amplitudes_[t]);
                break;
        }
    }
    return phases;
}

void IsfsfFeatureMap::save(std::ostream& out) const {
    write_bytes(out, kMagic, sizeof(kMagic));
    write_pod<std::uint32_t>(out, kVersion);
    write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(mode_));
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(dimension()));
    for (double l : hyperparams_.lengthscales()) write_pod<double>(out, l);
    for (double t : hyperparams_.periods()) write_pod<double>(out, t);
    write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(provenance_.family));
    write_pod<double>(out, provenance_.refinement);
    write_pod<double>(out, provenance_.zeta);
    for (double g : provenance_.gamma) write_pod<double>(out, g);
    write_pod<std::uint64_t>(out, provenance_.index_count);
    write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(term_count()));
    write_bytes(out, amplitudes_.data(), sizeof(double) * static_cast<std::size_t>(amplitudes_.size()));
    for (TermKind k : kinds_) write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(k));
    write_bytes(out, sources_.data(), sizeof(std::uint64_t) * sources_.size());
    for (Eigen::Index t = 0; t < frequencies_.rows(); ++t)
        for (Eigen::Index d = 0; d < frequencies_.cols(); ++d)
            write_pod<double>(out, frequencies_(t, d));
}

IsfsfFeatureMap IsfsfFeatureMap::load(std::istream& in) {
    char magic[4];
    read_bytes(in, magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("IsfsfFeatureMap::load: bad magic");
    if (read_pod<std::uint32_t>(in) != kVersion)
        throw std::runtime_error("IsfsfFeatureMap::load: unsupported version");
    const auto mode = static_cast<FeatureMode>(read_pod<std::uint8_t>(in));
    const auto D = static_cast<int>(read_pod<std::uint32_t>(in));
    if (D < 1 || D > 1024) throw std::runtime_error("IsfsfFeatureMap::load: bad dimension");

    std::vector<double> ls(static_cast<std::size_t>(D)), ts(static_cast<std::size_t>(D));
    for (double& v : ls) v = read_pod<double>(in);
    for (double& v : ts) v = read_pod<double>(in);

    FeatureMapProvenance prov;
    prov.family = static_cast<Family>(read_pod<std::uint8_t>(in));
    prov.refinement = read_pod<double>(in);
    prov.zeta = read_pod<double>(in);
    prov.gamma.resize(static_cast<std::size_t>(D));
    for (double& g : prov.gamma) g = read_pod<double>(in);
    prov.index_count = read_pod<std::uint64_t>(in);

    const std::uint64_t n = read_pod<std::uint64_t>(in);
    IsfsfFeatureMap map(mode, PeriodicSeHyperparams(std::move(ls), std::move(ts)), std::move(prov));
    map.amplitudes_.resize(static_cast<Eigen::Index>(n));
    read_bytes(in, map.amplitudes_.data(), sizeof(double) * n);
    map.kinds_.resize(n);
    for (TermKind& k : map.kinds_) k = static_cast<TermKind>(read_pod<std::uint8_t>(in));
    map.sources_.resize(n);
    read_bytes(in, map.sources_.data(), sizeof(std::uint64_t) * n);
    map.frequencies_.resize(static_cast<Eigen::Index>(n), D);
    for (Eigen::Index t = 0; t < map.frequencies_.rows(); ++t)
        for (Eigen::Index d = 0; d < D; ++d) map.frequencies_(t, d) = read_pod<double>(in);
    return map;
}

}  // namespace isfsf
