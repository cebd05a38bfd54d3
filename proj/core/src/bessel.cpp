#include "isfsf/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace isfsf {

namespace {

// Downward recurrence must start far enough above both max_order and x that
// the seed's contamination has decayed below double precision by the time the
// requested orders are reached. The max(.., 1.5x) floor covers the regime
// x >> max_order where an order-only rule starts too low.
int starting_order(int max_order, double x) {
    int from_order =
        max_order + static_cast<int>(std::ceil(10.0 + 2.0 * std::sqrt(max_order * x)));
    int from_argument = static_cast<int>(std::ceil(1.5 * x)) + 20;
    return std::max(from_order, from_argument);
}

}  // namespace

std::vector<double> bessel_i_scaled_sequence(int max_order, double x) {
    if (max_order < 0) throw std::invalid_argument("bessel_i_scaled: order must be >= 0");
    if (!std::isfinite(x) || x <= 0.0)
        throw std::invalid_argument("bessel_i_scaled: x must be finite and positive");

    const int start = starting_order(max_order, x);
    std::vector<double> values(static_cast<std::size_t>(max_order) + 1, 0.0);

    // Unnormalized minimal solution, seeded arbitrarily at the top order.
    // Values grow rapidly going down; rescale everything when they approach
    // overflow. The running sum accumulates p_0 + 2 sum p_k, which equals e^x
    // in seed units, so dividing by it yields e^(-x) I_k(x) directly.
    constexpr double kRescaleAt = 1e250;
    constexpr double kRescaleBy = 1e-250;
    double above = 0.0;   // p_{k+1}
    double here = 1e-30;  // p_k, k = start
    double sum = 2.0 * here;

    for (int k = start; k >= 1; --k) {
        double below = above + (2.0 * k / x) * here;
        above = here;
        here = below;
        int j = k - 1;
        sum += (j == 0) ? here : 2.0 * here;
        if (j <= max_order) values[static_cast<std::size_t>(j)] = here;
        if (here > kRescaleAt) {
            above *= kRescaleBy;
            here *= kRescaleBy;
            sum *= kRescaleBy;
            for (double& v : values) v *= kRescaleBy;
        }
    }

    if (!(sum > 0.0) || !std::isfinite(sum))
        throw std::runtime_error("bessel_i_scaled: normalization failed");
    for (double& v : values) v /= sum;
    return values;
}

double bessel_i_scaled(int order, double x) {
    return bessel_i_scaled_sequence(order, x).back();
}

}  // namespace isfsf
