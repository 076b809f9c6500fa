#ifndef MILBOOST_ORACLE_HPP
#define MILBOOST_ORACLE_HPP

#include <vector>

#include "milboost/hypothesis.hpp"
#include "milboost/types.hpp"

namespace milboost {

struct WeightedItem {
    Instance x;
    int y = 1;      // -1 or +1
    double w = 0.0; // >= 0
};

struct WeightedInstanceSample {
    int dimension = 0;
    std::vector<WeightedItem> items;

    void validate() const;
};

struct OracleReport {
    InstanceHypothesis hypothesis;
    double weighted_error = 0.0;  // in [0,1], normalized by total weight
};

/// Exact weighted agnostic ERM over enumerate_stumps(sample) plus the two
/// constants. Deterministic tie-breaking: lowest weighted error, then
/// Constant{+1}, Constant{-1}, then stumps by (feature, threshold,
/// polarity +1 first). One sort + prefix-sum sweep per feature; features
/// may be swept in parallel, the reduction reapplies the tie order so the
/// result is independent of the thread count.
OracleReport erm_stumps(const WeightedInstanceSample& sample, int threads = 1);

/// Constrained variant: among candidates with zero weighted error on
/// negative items (of positive weight), minimize the weighted error on
/// positives. Constant{-1} is always feasible. Same tie-breaking.
OracleReport erm_one_sided(const WeightedInstanceSample& sample);

}  // namespace milboost

#endif
