#pragma once

#include "bench/config.hpp"
#include "bench/report.hpp"
#include "bench/surface.hpp"

namespace isfsf::bench {

// Gram-matrix reconstruction error of every configured method against the
// analytic periodic SE Gram on uniformly sampled points. Stochastic methods
// are repeated over seeds with mean/std aggregate rows.
BenchmarkReport run_gram_benchmark(const Config& config);

// Tabulates the multivariate truncation error over a (D, R, lengthscale) grid.
BenchmarkReport run_truncation_curve(const Config& config);

// Mask-inpainting regression on the synthetic periodic surface: fits a BLR
// model per method and budget, reporting held-out RMSE and MNLL.
BenchmarkReport run_regression_benchmark(const Config& config);

SurfaceSpec surface_spec_from_config(const Config& config);

}  // namespace isfsf::bench
