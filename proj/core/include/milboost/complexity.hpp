#ifndef MILBOOST_COMPLEXITY_HPP
#define MILBOOST_COMPLEXITY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "milboost/types.hpp"

namespace milboost {

enum class DomainTag { Instance, BagLevel };

/// Explicit finite hypothesis class over an arbitrary point type; outputs
/// must land in [-1,+1]. All dimension measurements are exhaustive over the
/// supplied pool, with hard caps (these are desk-scale brute-force tools).
template <typename Point>
struct FiniteClass {
    std::vector<std::function<double(const Point&)>> hypotheses;
    DomainTag tag = DomainTag::Instance;
};

/// Row-per-hypothesis, column-per-point evaluation table; the matrix-level
/// entry points below carry the actual search logic.
using BehaviorMatrix = std::vector<std::vector<double>>;

bool shatters_matrix(const BehaviorMatrix& m);                       // cols <= 25
int vc_dimension_matrix(const BehaviorMatrix& pool, int cap);        // cap <= 12
int covering_number_matrix(const BehaviorMatrix& sample, double epsilon);
int fat_shattering_matrix(const BehaviorMatrix& pool, double gamma, int cap);  // cap <= 6

template <typename Point>
BehaviorMatrix behavior_matrix(const FiniteClass<Point>& cls,
                               std::span<const Point> points) {
    BehaviorMatrix m(cls.hypotheses.size(), std::vector<double>(points.size()));
    for (std::size_t h = 0; h < cls.hypotheses.size(); ++h) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            m[h][p] = cls.hypotheses[h](points[p]);
        }
    }
    return m;
}

/// True iff every sign pattern on the points is realized by some hypothesis.
template <typename Point>
bool shatters(const FiniteClass<Point>& cls, std::span<const Point> points) {
    return shatters_matrix(behavior_matrix(cls, points));
}

/// Largest k <= cap such that some k-subset of the pool is shattered;
/// depth-first over subsets, extending only subsets that are themselves
/// shattered (projection closure makes this exact).
template <typename Point>
int vc_dimension(const FiniteClass<Point>& cls, std::span<const Point> pool, int cap) {
    return vc_dimension_matrix(behavior_matrix(cls, pool), cap);
}

/// Greedy cover size in the empirical l-inf metric over the sample. An
/// upper bound on the minimal cover; consistent, so usable for trends.
template <typename Point>
int covering_number(const FiniteClass<Point>& cls, std::span<const Point> sample,
                    double epsilon) {
    return covering_number_matrix(behavior_matrix(cls, sample), epsilon);
}

/// Largest k <= cap gamma-shattered with witness levels from the grid
/// {-0.9, -0.8, ..., 0.9}.
template <typename Point>
int fat_shattering(const FiniteClass<Point>& cls, std::span<const Point> pool,
                   double gamma, int cap) {
    return fat_shattering_matrix(behavior_matrix(cls, pool), gamma, cap);
}

// ---------------------------------------------------------------------------
// Measurement lab: fixed 1-D instance classes, their psi=max bag lifts, and
// the d vs d_r table the CLI emits.

struct ComplexityResult {
    std::string class_name;
    int r = 0;  // bag size parameter; 0 for instance-level rows
    std::size_t pool_size = 0;
    std::string metric;  // vc | cov | fat
    std::string param;   // instance | exact_r | upto_r | eps=... | gamma=...
    double value = 0.0;
    std::uint64_t seed = 0;
};

/// Runs the standard measurement suite (instance-level VC of thresholds,
/// stumps, constants and intervals; bag-level d_r for r in {1,2,4,8} under
/// both exactly-r and up-to-r pool semantics; covering and fat-shattering
/// spot checks) on deterministic grid-plus-seeded pools.
std::vector<ComplexityResult> run_complexity_lab(std::uint64_t seed);

void save_complexity_csv(std::span<const ComplexityResult> results,
                         const std::string& path);

/// The d_r column for one bag-level class, used by the growth-table report:
/// class_builder maps a 1-D threshold list to instance hypotheses which are
/// then lifted through psi=max over the bag pool.
struct GrowthTable {
    std::vector<int> r_values;
    std::vector<int> d_exact;  // exactly-size-r pools (padded embeddings)
    std::vector<int> d_upto;   // up-to-size-r pools
    int d_instance = 0;
    double fitted_c = 0.0;  // max_r d_exact / (log2(2r) * d_instance)
};

GrowthTable interval_growth_table(std::uint64_t seed);

}  // namespace milboost

#endif
