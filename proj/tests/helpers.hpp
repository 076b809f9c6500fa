#ifndef MILBOOST_TESTS_HELPERS_HPP
#define MILBOOST_TESTS_HELPERS_HPP

// Test-only oracles and generators. The brute-force searches here are kept
// independent of the library's sweep implementations: they enumerate every
// candidate and score it by direct summation.

#include <optional>
#include <vector>

#include "milboost/hypothesis.hpp"
#include "milboost/milearn.hpp"
#include "milboost/oracle.hpp"
#include "milboost/rng.hpp"
#include "milboost/types.hpp"

namespace milboost::testing {

inline bool same_hypothesis(const InstanceHypothesis& a, const InstanceHypothesis& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ca = std::get_if<ConstantHypothesis>(&a)) {
        return ca->value == std::get<ConstantHypothesis>(b).value;
    }
    const Stump& sa = std::get<Stump>(a);
    const Stump& sb = std::get<Stump>(b);
    return sa.feature == sb.feature && sa.threshold == sb.threshold &&
           sa.polarity == sb.polarity;
}

// Candidates in the oracle's tie order: Constant{+1}, Constant{-1}, then the
// enumerated stumps (already ordered by feature, threshold, polarity).
inline std::vector<InstanceHypothesis> all_candidates(const WeightedInstanceSample& s) {
    std::vector<Instance> xs;
    for (const WeightedItem& it : s.items) xs.push_back(it.x);
    std::vector<InstanceHypothesis> out;
    out.push_back(ConstantHypothesis{1});
    out.push_back(ConstantHypothesis{-1});
    for (const auto& h : enumerate_stumps(xs, s.dimension)) out.push_back(h);
    return out;
}

inline double direct_error(const InstanceHypothesis& h, const WeightedInstanceSample& s) {
    double err = 0.0;
    for (const WeightedItem& it : s.items) {
        if (evaluate_instance(h, it.x) * it.y < 0.0) err += it.w;
    }
    return err;
}

inline double direct_negative_error(const InstanceHypothesis& h,
                                    const WeightedInstanceSample& s) {
    double err = 0.0;
    for (const WeightedItem& it : s.items) {
        if (it.y == -1 && it.w > 0.0 && evaluate_instance(h, it.x) > 0.0) err += it.w;
    }
    return err;
}

// Exhaustive agnostic ERM; first candidate (in tie order) with minimum error.
inline OracleReport brute_force_erm(const WeightedInstanceSample& s) {
    double total = 0.0;
    for (const WeightedItem& it : s.items) total += it.w;
    std::optional<InstanceHypothesis> best;
    double best_err = 0.0;
    for (const auto& h : all_candidates(s)) {
        const double err = direct_error(h, s);
        if (!best || err < best_err) {
            best = h;
            best_err = err;
        }
    }
    return {*best, best_err / total};
}

// Exhaustive constrained ERM: zero error on positive-weight negatives.
inline OracleReport brute_force_one_sided(const WeightedInstanceSample& s) {
    double total = 0.0;
    for (const WeightedItem& it : s.items) total += it.w;
    std::optional<InstanceHypothesis> best;
    double best_err = 0.0;
    for (const auto& h : all_candidates(s)) {
        if (direct_negative_error(h, s) > 0.0) continue;
        const double err = direct_error(h, s);
        if (!best || err < best_err) {
            best = h;
            best_err = err;
        }
    }
    return {*best, best_err / total};
}

// Random weighted sample with dyadic weights (multiples of 1/64) so every
// weight sum is exact in double arithmetic and the sweep and the direct
// summation agree bit for bit. Feature values are snapped to a 0.25 grid
// about half the time to exercise ties.
inline WeightedInstanceSample random_sample(Rng& rng, int max_n = 40, int max_d = 3) {
    WeightedInstanceSample s;
    const int n = static_cast<int>(rng.uniform_int(2, max_n));
    s.dimension = static_cast<int>(rng.uniform_int(1, max_d));
    for (int i = 0; i < n; ++i) {
        Instance x;
        for (int f = 0; f < s.dimension; ++f) {
            double v = rng.uniform(-1.0, 1.0);
            if (rng.next_double() < 0.5) v = std::round(v * 4.0) / 4.0;
            x.features.push_back(v);
        }
        const int y = rng.next_double() < 0.5 ? 1 : -1;
        const double w = static_cast<double>(rng.uniform_int(0, 64)) / 64.0;
        s.items.push_back({std::move(x), y, w});
    }
    s.items[0].w = static_cast<double>(rng.uniform_int(1, 64)) / 64.0;
    return s;
}

// Random small MIL sample plus a matching random distribution.
inline std::pair<std::vector<Bag>, BagDistribution> random_bags(Rng& rng,
                                                                int max_bags = 12,
                                                                int max_r = 4,
                                                                int max_d = 2) {
    const int m = static_cast<int>(rng.uniform_int(2, max_bags));
    const int d = static_cast<int>(rng.uniform_int(1, max_d));
    std::vector<Bag> bags;
    for (int i = 0; i < m; ++i) {
        Bag b;
        b.id = "b" + std::to_string(i);
        b.label = rng.next_double() < 0.5 ? 1 : -1;
        const int r = static_cast<int>(rng.uniform_int(1, max_r));
        for (int j = 0; j < r; ++j) {
            Instance x;
            for (int f = 0; f < d; ++f) x.features.push_back(rng.uniform(-1.0, 1.0));
            b.instances.push_back(std::move(x));
        }
        bags.push_back(std::move(b));
    }
    BagDistribution dist;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        const double w = static_cast<double>(rng.uniform_int(1, 32));
        dist.weights.push_back(w);
        total += w;
    }
    for (double& w : dist.weights) w /= total;
    return {std::move(bags), std::move(dist)};
}

}  // namespace milboost::testing

#endif
