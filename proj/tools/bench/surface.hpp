#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace isfsf::bench {

// One separable sinusoidal mode A sin(2 pi x1/Tx + px) sin(2 pi x2/Ty + py).
struct SurfaceMode {
    double amplitude = 1.0;
    double period_x = 1.0;
    double period_y = 1.0;
    double phase_x = 0.0;
    double phase_y = 0.0;
};

struct SurfaceSpec {
    int grid = 65;             // grid x grid samples over [domain_lo, domain_hi]^2
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    std::vector<SurfaceMode> modes;
    double noise_std = 0.0;
    double mask_fraction = 0.25;  // centered square of side floor(grid*sqrt(f)) held out
};

// The grid in row-major order plus the held-out mask flags. Deterministic
// given (spec, seed); the same seed reproduces the noise bit-for-bit.
struct SurfaceGrid {
    Eigen::MatrixXd points;   // grid*grid x 2
    Eigen::VectorXd targets;
    std::vector<bool> in_mask;

    std::size_t mask_count() const;
};

struct SurfaceDataset {
    Eigen::MatrixXd train_points, test_points;
    Eigen::VectorXd train_targets, test_targets;
};

SurfaceGrid generate_surface_grid(const SurfaceSpec& spec, std::uint64_t seed);
SurfaceDataset generate_synthetic_surface(const SurfaceSpec& spec, std::uint64_t seed);

// CSV export with columns x1,x2,y,split (split in {train,test}), grid order.
void write_surface_csv(const SurfaceGrid& grid, std::ostream& out);

}  // namespace isfsf::bench
