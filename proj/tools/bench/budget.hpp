#pragma once

#include <optional>
#include <vector>

#include "isfsf/index_set.hpp"

namespace isfsf::bench {

struct BudgetMatch {
    isfsf::IndexSet set;
    long long realized = 0;  // masked feature count, sum_i 2^eta_i
};

// Searches refinement (quarter steps from 1) for the index set whose masked
// feature count is largest without exceeding budget + slack; ties go to the
// smaller refinement. Sets realizing only the constant feature do not count.
// Returns nullopt when no refinement fits, e.g. a tensor grid whose smallest
// non-trivial cardinality already blows the budget.
std::optional<BudgetMatch> match_feature_budget(isfsf::Family family, int dimension,
                                                long long budget, long long slack,
                                                const std::vector<double>& gamma, double zeta);

}  // namespace isfsf::bench
