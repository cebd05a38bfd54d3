#include "bench/runners.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bench/budget.hpp"
#include "bench/metrics.hpp"
#include "isfsf/blr.hpp"
#include "isfsf/feature_map.hpp"
#include "isfsf/fourier_features.hpp"
#include "isfsf/normal.hpp"
#include "isfsf/periodic_kernel.hpp"

namespace isfsf::bench {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

bool is_isfsf_family(const std::string& method) {
    return method == "tensor" || method == "total_order" || method == "euclidean" ||
           method == "hyperbolic" || method == "enhc";
}

std::vector<double> per_dimension(const Config& cfg, const std::string& key, int dimension,
                                  double fallback) {
    if (!cfg.has(key)) return std::vector<double>(static_cast<std::size_t>(dimension), fallback);
    std::vector<double> values = cfg.get_double_list(key);
    if (values.size() == 1) values.assign(static_cast<std::size_t>(dimension), values[0]);
    if (values.size() != static_cast<std::size_t>(dimension))
        throw std::runtime_error("config key " + key + ": expected 1 or D values");
    return values;
}

struct CommonParams {
    int dimension;
    isfsf::PeriodicSeHyperparams hyperparams;
    std::vector<double> gamma;
    double zeta;
    long long slack;
    int burn_in;
    long long seed;
};

CommonParams common_params(const Config& cfg, int dimension) {
    return CommonParams{
        dimension,
        isfsf::PeriodicSeHyperparams(per_dimension(cfg, "lengthscale", dimension, 1.0),
                                     per_dimension(cfg, "period", dimension, 1.0)),
        per_dimension(cfg, "gamma", dimension, 1.0),
        cfg.get_double("zeta", 0.0),
        cfg.get_int("budget_slack", 8),
        static_cast<int>(cfg.get_int("burn_in", 0)),
        cfg.get_int("seed", 1)};
}

ReportRow base_row(const std::string& benchmark, const CommonParams& p) {
    ReportRow row;
    row.benchmark = benchmark;
    row.dimension = p.dimension;
    row.lengthscale = join_params(p.hyperparams.lengthscales());
    row.period = join_params(p.hyperparams.periods());
    return row;
}

void add_metadata(BenchmarkReport& report, const std::string& benchmark, const Config& cfg,
                  std::initializer_list<const char*> keys) {
    for (const char* key : keys) {
        if (!cfg.has(key)) continue;
        ReportRow row;
        row.benchmark = benchmark;
        row.method = "meta";
        row.metric = std::string("config_") + key;
        row.value = cfg.get_double(key);
        report.add(std::move(row));
    }
}

// Compiled map for one ISFSF family at one budget: the largest masked count
// within budget + slack. Fourier-feature methods instead use C = budget/2
// spectral samples (2C output columns).
struct MatchedMap {
    isfsf::IsfsfFeatureMap map;
    long long realized;
    double refinement;
};

MatchedMap build_isfsf_map(const std::string& family_name, const CommonParams& p,
                           long long budget) {
    const isfsf::Family family = isfsf::family_from_string(family_name);
    const double zeta = (family == isfsf::Family::Enhc) ? p.zeta : 0.0;
    const auto match =
        match_feature_budget(family, p.dimension, budget, p.slack, p.gamma, zeta);
    if (!match) {
        std::ostringstream msg;
        msg << "infeasible feature budget: family " << family_name << " at D=" << p.dimension
            << " has no refinement with more than one masked feature within "
            << budget + p.slack;
        throw std::runtime_error(msg.str());
    }
    std::vector<int> counts = match->set.bounding_box();
    for (int& c : counts) ++c;
    const auto coeffs = isfsf::CoefficientTable::periodic_se(p.hyperparams, counts);
    return MatchedMap{isfsf::expand_sparse(match->set, coeffs), match->realized,
                      match->set.refinement()};
}

}  // namespace

BenchmarkReport run_gram_benchmark(const Config& cfg) {
    const int dimension = static_cast<int>(cfg.get_int("dimension"));
    const CommonParams p = common_params(cfg, dimension);
    const auto n = static_cast<Eigen::Index>(cfg.get_int("samples", 500));
    if (n < 2) throw std::runtime_error("gram benchmark: need samples >= 2");
    const std::vector<double> domain = cfg.get_double_list("domain");
    if (domain.size() != 2 || !(domain[1] > domain[0]) || !std::isfinite(domain[0]) ||
        !std::isfinite(domain[1]))
        throw std::runtime_error("gram benchmark: domain must be `lo,hi` with lo < hi");
    const std::vector<std::string> methods = cfg.get_string_list("methods");
    const std::vector<long long> budgets = cfg.get_int_list("budgets");
    const int rff_seeds = static_cast<int>(cfg.get_int("rff_seeds", 20));

    std::mt19937_64 engine(static_cast<std::uint64_t>(p.seed));
    Eigen::MatrixXd points(n, dimension);
    for (Eigen::Index i = 0; i < n; ++i)
        for (int d = 0; d < dimension; ++d)
            points(i, d) = domain[0] + (domain[1] - domain[0]) * isfsf::uniform_unit(engine);

    const Eigen::MatrixXd truth = isfsf::periodic_se_gram(points, p.hyperparams);

    BenchmarkReport report;
    add_metadata(report, "gram", cfg,
                 {"samples", "rff_seeds", "burn_in", "budget_slack", "seed"});

    for (const std::string& method : methods) {
        for (long long budget : budgets) {
            if (is_isfsf_family(method)) {
                const auto start = Clock::now();
                const MatchedMap mf = build_isfsf_map(method, p, budget);
                const Eigen::MatrixXd z = mf.map.evaluate(points);
                const double error = frobenius_error(z * z.transpose(), truth);
                ReportRow row = base_row("gram", p);
                row.method = "isfsf";
                row.family = method;
                row.refinement = mf.refinement;
                row.gamma = join_params(p.gamma);
                if (method == "enhc") row.zeta = p.zeta;
                row.c_requested = budget;
                row.c_realized = mf.realized;
                row.metric = "frobenius";
                row.value = error;
                row.wall_ms = ms_since(start);
                report.add(std::move(row));
            } else if (method == "rff") {
                const int count = static_cast<int>(budget / 2);
                double sum = 0.0, sum_sq = 0.0;
                long long wall = 0;
                for (int s = 0; s < rff_seeds; ++s) {
                    const auto start = Clock::now();
                    const Eigen::MatrixXd z =
                        isfsf::rff_features(points, count, p.hyperparams,
                                            static_cast<std::uint64_t>(p.seed + s));
                    const double error = frobenius_error(z * z.transpose(), truth);
                    const long long cell_ms = ms_since(start);
                    wall += cell_ms;
                    sum += error;
                    sum_sq += error * error;
                    ReportRow row = base_row("gram", p);
                    row.method = "rff";
                    row.c_requested = budget;
                    row.c_realized = 2 * count;
                    row.seed = p.seed + s;
                    row.metric = "frobenius";
                    row.value = error;
                    row.wall_ms = cell_ms;
                    report.add(std::move(row));
                }
                const double mean = sum / rff_seeds;
                const double var = std::max(0.0, sum_sq / rff_seeds - mean * mean);
                for (const auto& [name, value] :
                     {std::pair<const char*, double>{"frobenius_mean", mean},
                      std::pair<const char*, double>{"frobenius_std", std::sqrt(var)}}) {
                    ReportRow row = base_row("gram", p);
                    row.method = "rff";
                    row.c_requested = budget;
                    row.c_realized = 2 * count;
                    row.metric = name;
                    row.value = value;
                    row.wall_ms = wall;
                    report.add(std::move(row));
                }
            } else if (method == "hal" || method == "ghal") {
                const bool generalized = (method == "ghal");
                const int count = static_cast<int>(budget / 2);
                const auto start = Clock::now();
                const Eigen::MatrixXd z =
                    isfsf::qmc_features(points, count, p.hyperparams, generalized,
                                        static_cast<std::uint64_t>(p.seed), p.burn_in);
                const double error = frobenius_error(z * z.transpose(), truth);
                ReportRow row = base_row("gram", p);
                row.method = method;
                row.c_requested = budget;
                row.c_realized = 2 * count;
                if (generalized) row.seed = p.seed;
                row.metric = "frobenius";
                row.value = error;
                row.wall_ms = ms_since(start);
                report.add(std::move(row));
            } else {
                throw std::runtime_error("gram benchmark: unknown method " + method);
            }
        }
    }
    return report;
}

BenchmarkReport run_truncation_curve(const Config& cfg) {
    const std::vector<long long> dims = cfg.get_int_list("dimensions");
    const int r_min = static_cast<int>(cfg.get_int("refinement_min", 1));
    const int r_max = static_cast<int>(cfg.get_int("refinement_max", 20));
    if (r_min < 1 || r_max < r_min)
        throw std::runtime_error("truncation curve: bad refinement range");
    const std::vector<double> lengthscales = cfg.get_double_list("lengthscales");
    const double period = cfg.get_double("period", 1.0);

    BenchmarkReport report;
    for (long long dim : dims) {
        for (double l : lengthscales) {
            const auto hyper = isfsf::isotropic_hyperparams(static_cast<int>(dim), l, period);
            for (int r = r_min; r <= r_max; ++r) {
                const auto start = Clock::now();
                ReportRow row;
                row.benchmark = "truncation";
                row.method = "isfsf";
                row.dimension = static_cast<int>(dim);
                row.refinement = static_cast<double>(r);
                row.lengthscale = format_param(l);
                row.period = format_param(period);
                row.metric = "epsilon";
                row.value = isfsf::truncation_error(r, hyper);
                row.wall_ms = ms_since(start);
                report.add(std::move(row));
            }
        }
    }
    return report;
}

SurfaceSpec surface_spec_from_config(const Config& cfg) {
    SurfaceSpec spec;
    spec.grid = static_cast<int>(cfg.get_int("grid", 65));
    const std::vector<double> domain = cfg.get_double_list("domain");
    if (domain.size() != 2) throw std::runtime_error("surface: domain must be `lo,hi`");
    spec.domain_lo = domain[0];
    spec.domain_hi = domain[1];
    spec.noise_std = cfg.get_double("noise_std", 0.0);
    spec.mask_fraction = cfg.get_double("mask_fraction", 0.25);

    // modes = amp:Tx:Ty:px:py entries separated by ';'
    std::istringstream in(cfg.get_string("modes"));
    std::string entry;
    while (std::getline(in, entry, ';')) {
        SurfaceMode mode;
        char c1, c2, c3, c4;
        std::istringstream fields(entry);
        if (!(fields >> mode.amplitude >> c1 >> mode.period_x >> c2 >> mode.period_y >> c3 >>
              mode.phase_x >> c4 >> mode.phase_y) ||
            c1 != ':' || c2 != ':' || c3 != ':' || c4 != ':')
            throw std::runtime_error("surface: malformed mode entry: " + entry);
        spec.modes.push_back(mode);
    }
    if (spec.modes.empty()) throw std::runtime_error("surface: need at least one mode");
    return spec;
}

BenchmarkReport run_regression_benchmark(const Config& cfg) {
    const CommonParams p = common_params(cfg, 2);
    const SurfaceSpec spec = surface_spec_from_config(cfg);
    const std::vector<std::string> methods = cfg.get_string_list("methods");
    const std::vector<long long> budgets = cfg.get_int_list("budgets");
    const int repetitions = static_cast<int>(cfg.get_int("repetitions", 5));
    const double noise_variance = cfg.get_double("noise_variance");
    const double prior_variance = cfg.get_double("prior_variance", 1.0);

    BenchmarkReport report;
    add_metadata(report, "regress", cfg,
                 {"grid", "noise_std", "mask_fraction", "noise_variance", "prior_variance",
                  "repetitions", "burn_in", "budget_slack", "seed"});
    {
        // MNLL convention: the formula's sigma* is the predictive variance.
        ReportRow row;
        row.benchmark = "regress";
        row.method = "meta";
        row.metric = "config_mnll_uses_variance";
        row.value = 1.0;
        report.add(std::move(row));
    }

    // Budget matching is data-independent; compile each ISFSF map once.
    std::map<std::pair<std::string, long long>, MatchedMap> matched;
    for (const std::string& method : methods)
        if (is_isfsf_family(method))
            for (long long budget : budgets)
                matched.emplace(std::make_pair(method, budget), build_isfsf_map(method, p, budget));

    for (int rep = 0; rep < repetitions; ++rep) {
        const long long rep_seed = p.seed + rep;
        const SurfaceDataset data =
            generate_synthetic_surface(spec, static_cast<std::uint64_t>(rep_seed));
        for (const std::string& method : methods) {
            for (long long budget : budgets) {
                const auto start = Clock::now();
                ReportRow row = base_row("regress", p);
                row.seed = rep_seed;
                row.c_requested = budget;
                Eigen::MatrixXd train, test;
                if (is_isfsf_family(method)) {
                    const MatchedMap& mf = matched.at({method, budget});
                    train = mf.map.evaluate(data.train_points);
                    test = mf.map.evaluate(data.test_points);
                    row.method = "isfsf";
                    row.family = method;
                    row.refinement = mf.refinement;
                    row.gamma = join_params(p.gamma);
                    if (method == "enhc") row.zeta = p.zeta;
                    row.c_realized = mf.realized;
                } else if (method == "rff" || method == "hal" || method == "ghal") {
                    const int count = static_cast<int>(budget / 2);
                    if (method == "rff") {
                        train = isfsf::rff_features(data.train_points, count, p.hyperparams,
                                                    static_cast<std::uint64_t>(rep_seed));
                        test = isfsf::rff_features(data.test_points, count, p.hyperparams,
                                                   static_cast<std::uint64_t>(rep_seed));
                    } else {
                        const bool generalized = (method == "ghal");
                        train = isfsf::qmc_features(data.train_points, count, p.hyperparams,
                                                    generalized,
                                                    static_cast<std::uint64_t>(p.seed), p.burn_in);
                        test = isfsf::qmc_features(data.test_points, count, p.hyperparams,
                                                   generalized,
                                                   static_cast<std::uint64_t>(p.seed), p.burn_in);
                    }
                    row.method = method;
                    row.c_realized = 2 * count;
                } else {
                    throw std::runtime_error("regression benchmark: unknown method " + method);
                }

                try {
                    const isfsf::BlrModel model =
                        isfsf::fit_blr(train, data.train_targets, noise_variance, prior_variance);
                    const isfsf::PredictiveDistribution pred = isfsf::predict(model, test);
                    const long long wall = ms_since(start);
                    ReportRow rmse_row = row;
                    rmse_row.metric = "rmse";
                    rmse_row.value = isfsf::rmse(pred.mean, data.test_targets);
                    rmse_row.wall_ms = wall;
                    report.add(std::move(rmse_row));
                    ReportRow mnll_row = row;
                    mnll_row.metric = "mnll";
                    mnll_row.value = isfsf::mnll(pred.mean, pred.variance, data.test_targets);
                    mnll_row.wall_ms = wall;
                    report.add(std::move(mnll_row));
                } catch (const std::runtime_error&) {
                    // singular fit: recorded per row, the run continues
                    ReportRow fail_row = row;
                    fail_row.metric = "fit_failed";
                    fail_row.value = 1.0;
                    fail_row.wall_ms = ms_since(start);
                    report.add(std::move(fail_row));
                }
            }
        }
    }
    return report;
}

}  // namespace isfsf::bench
