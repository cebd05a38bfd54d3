#pragma once

#include <cstdint>
#include <random>

namespace isfsf {

// Inverse of the standard normal CDF on (0,1), by Wichura's AS 241 rational
// approximations (relative error around 1e-15 across the domain). Keeps every
// Gaussian draw in the library deterministic and platform-independent.
double inverse_normal_cdf(double p);

// Uniform double in the open interval (0,1) from 53 random bits.
inline double uniform_unit(std::mt19937_64& engine) {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1p-53;
}

// Standard normal deviate via the inverse CDF.
inline double standard_normal(std::mt19937_64& engine) {
    return inverse_normal_cdf(uniform_unit(engine));
}

// Uniform integer in [0, bound) by rejection, avoiding the
// implementation-defined std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound);

}  // namespace isfsf
