#include "bench/surface.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "bench/report.hpp"
#include "isfsf/normal.hpp"

namespace isfsf::bench {

std::size_t SurfaceGrid::mask_count() const {
    std::size_t n = 0;
    for (bool m : in_mask) n += m;
    return n;
}

SurfaceGrid generate_surface_grid(const SurfaceSpec& spec, std::uint64_t seed) {
    if (spec.grid < 2) throw std::invalid_argument("surface: grid must be >= 2");
    if (!(spec.domain_hi > spec.domain_lo)) throw std::invalid_argument("surface: empty domain");
    if (spec.mask_fraction < 0.0 || spec.mask_fraction >= 1.0)
        throw std::invalid_argument("surface: mask_fraction must lie in [0,1)");
    if (spec.noise_std < 0.0) throw std::invalid_argument("surface: noise_std must be >= 0");

    const int g = spec.grid;
    const double step = (spec.domain_hi - spec.domain_lo) / (g - 1);
    const int side = static_cast<int>(std::floor(g * std::sqrt(spec.mask_fraction)));
    const int lo = (g - side) / 2;
    const int hi = lo + side;

    SurfaceGrid grid;
    grid.points.resize(static_cast<Eigen::Index>(g) * g, 2);
    grid.targets.resize(static_cast<Eigen::Index>(g) * g);
    grid.in_mask.resize(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));

    std::mt19937_64 engine(seed);
    Eigen::Index row = 0;
    for (int i = 0; i < g; ++i) {
        const double x1 = spec.domain_lo + i * step;
        for (int j = 0; j < g; ++j, ++row) {
            const double x2 = spec.domain_lo + j * step;
            grid.points(row, 0) = x1;
            grid.points(row, 1) = x2;
            double y = 0.0;
            for (const SurfaceMode& m : spec.modes)
                y += m.amplitude *
                     std::sin(2.0 * std::numbers::pi * x1 / m.period_x + m.phase_x) *
                     std::sin(2.0 * std::numbers::pi * x2 / m.period_y + m.phase_y);
            if (spec.noise_std > 0.0) y += spec.noise_std * isfsf::standard_normal(engine);
            grid.targets[row] = y;
            grid.in_mask[static_cast<std::size_t>(row)] = (i >= lo && i < hi && j >= lo && j < hi);
        }
    }
    return grid;
}

SurfaceDataset generate_synthetic_surface(const SurfaceSpec& spec, std::uint64_t seed) {
    const SurfaceGrid grid = generate_surface_grid(spec, seed);
    const Eigen::Index total = grid.points.rows();
    const Eigen::Index n_test = static_cast<Eigen::Index>(grid.mask_count());
    const Eigen::Index n_train = total - n_test;

    SurfaceDataset data;
    data.train_points.resize(n_train, 2);
    data.train_targets.resize(n_train);
    data.test_points.resize(n_test, 2);
    data.test_targets.resize(n_test);

    Eigen::Index tr = 0, te = 0;
    for (Eigen::Index r = 0; r < total; ++r) {
        if (grid.in_mask[static_cast<std::size_t>(r)]) {
            data.test_points.row(te) = grid.points.row(r);
            data.test_targets[te++] = grid.targets[r];
        } else {
            data.train_points.row(tr) = grid.points.row(r);
            data.train_targets[tr++] = grid.targets[r];
        }
    }
    return data;
}

void write_surface_csv(const SurfaceGrid& grid, std::ostream& out) {
    out << "x1,x2,y,split\n";
    for (Eigen::Index r = 0; r < grid.points.rows(); ++r) {
        out << format_value(grid.points(r, 0)) << ',' << format_value(grid.points(r, 1)) << ','
            << format_value(grid.targets[r]) << ','
            << (grid.in_mask[static_cast<std::size_t>(r)] ? "test" : "train") << '\n';
    }
}

}  // namespace isfsf::bench
