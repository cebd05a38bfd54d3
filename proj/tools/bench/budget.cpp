#include "bench/budget.hpp"

#include <stdexcept>

#include "isfsf/feature_map.hpp"

namespace isfsf::bench {

std::optional<BudgetMatch> match_feature_budget(isfsf::Family family, int dimension,
                                                long long budget, long long slack,
                                                const std::vector<double>& gamma, double zeta) {
    if (budget < 1) throw std::invalid_argument("match_feature_budget: budget must be >= 1");
    if (slack < 0) throw std::invalid_argument("match_feature_budget: slack must be >= 0");

    const long long limit = budget + slack;
    std::optional<BudgetMatch> best;
    // Index sets are nested in R, so both |I| and the masked count grow
    // monotonically; the first overshoot ends the search.
    for (double refinement = 1.0; refinement <= 4096.0; refinement += 0.25) {
        std::optional<isfsf::IndexSet> set;
        try {
            set = isfsf::IndexSet::generate(family, dimension, refinement, gamma, zeta,
                                            static_cast<std::size_t>(limit) + 1);
        } catch (const std::runtime_error&) {
            break;  // cardinality guard tripped; larger R only grows the set
        }
        const auto realized = static_cast<long long>(isfsf::sparse_term_count(*set));
        if (realized > limit) break;
        if (realized > 1 && (!best || realized > best->realized))
            best = BudgetMatch{std::move(*set), realized};
    }
    return best;
}

}  // namespace isfsf::bench
