#pragma once

#include <vector>

namespace isfsf {

// Exponentially scaled modified Bessel function of the first kind,
// e^(-x) I_k(x), for x > 0 and k >= 0. The scaled form stays in (0,1] for
// every order, so it cannot overflow even for very small lengthscales
// (large x). Computed by Miller's backward recurrence normalized with the
// identity e^x = I_0(x) + 2 sum_{k>=1} I_k(x).
double bessel_i_scaled(int order, double x);

// All scaled values for orders 0..max_order in one downward pass.
std::vector<double> bessel_i_scaled_sequence(int max_order, double x);

}  // namespace isfsf
