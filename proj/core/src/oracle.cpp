#include "milboost/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace milboost {

namespace {

// Total order on candidates: error first, then Constant{+1}, Constant{-1},
// then stumps by (feature, threshold, polarity +1 first).
struct Candidate {
    double err = 0.0;  // unnormalized (sum of misclassified weight)
    int cls = 0;       // 0 = Constant{+1}, 1 = Constant{-1}, 2 = stump
    int feature = 0;
    double threshold = 0.0;
    int polarity_rank = 0;  // 0 for +1, 1 for -1

    InstanceHypothesis hypothesis() const {
        if (cls == 0) return ConstantHypothesis{1};
        if (cls == 1) return ConstantHypothesis{-1};
        return Stump{feature, threshold, polarity_rank == 0 ? 1 : -1};
    }
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.err != b.err) return a.err < b.err;
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.feature != b.feature) return a.feature < b.feature;
    if (a.threshold != b.threshold) return a.threshold < b.threshold;
    return a.polarity_rank < b.polarity_rank;
}

void keep_best(Candidate& best, const Candidate& cand) {
    if (better(cand, best)) best = cand;
}

// Per-feature value groups with prefix sums. groups[j] covers the first j
// distinct values; thresholds[j] admits exactly those groups as "<= t".
struct FeatureSweep {
    std::vector<double> thresholds;   // size k+1 (sentinels included)
    std::vector<double> pos_prefix;   // positive weight among first j groups
    std::vector<double> neg_prefix;   // negative weight among first j groups
    std::vector<long> neg_count;      // count of y=-1, w>0 among first j groups
};

FeatureSweep build_sweep(const WeightedInstanceSample& sample, int feature) {
    struct Row {
        double v;
        int y;
        double w;
    };
    std::vector<Row> rows;
    rows.reserve(sample.items.size());
    for (const WeightedItem& it : sample.items) {
        rows.push_back({it.x.features[static_cast<std::size_t>(feature)], it.y, it.w});
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.v < b.v; });

    FeatureSweep s;
    s.pos_prefix.push_back(0.0);
    s.neg_prefix.push_back(0.0);
    s.neg_count.push_back(0);
    std::vector<double> values;
    std::size_t i = 0;
    while (i < rows.size()) {
        const double v = rows[i].v;
        double p = s.pos_prefix.back();
        double n = s.neg_prefix.back();
        long c = s.neg_count.back();
        while (i < rows.size() && rows[i].v == v) {
            if (rows[i].y == 1) {
                p += rows[i].w;
            } else {
                n += rows[i].w;
                if (rows[i].w > 0.0) ++c;
            }
            ++i;
        }
        values.push_back(v);
        s.pos_prefix.push_back(p);
        s.neg_prefix.push_back(n);
        s.neg_count.push_back(c);
    }
    // Same threshold construction as enumerate_stumps, bit for bit.
    s.thresholds.push_back(values.front() - 0.5);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        s.thresholds.push_back(0.5 * (values[j] + values[j + 1]));
    }
    s.thresholds.push_back(values.back() + 0.5);
    return s;
}

Candidate best_stump_for_feature(const WeightedInstanceSample& sample, int feature,
                                 double w_pos, double w_neg) {
    const FeatureSweep s = build_sweep(sample, feature);
    Candidate best;
    best.err = w_pos + w_neg + 1.0;  // worse than any real candidate
    best.cls = 2;
    for (std::size_t j = 0; j < s.thresholds.size(); ++j) {
        // polarity +1 predicts +1 strictly above the threshold
        const double err_plus = s.pos_prefix[j] + (w_neg - s.neg_prefix[j]);
        const double err_minus = (w_pos - s.pos_prefix[j]) + s.neg_prefix[j];
        keep_best(best, Candidate{err_plus, 2, feature, s.thresholds[j], 0});
        keep_best(best, Candidate{err_minus, 2, feature, s.thresholds[j], 1});
    }
    return best;
}

Candidate best_one_sided_for_feature(const WeightedInstanceSample& sample, int feature,
                                     double w_pos, double w_neg) {
    const FeatureSweep s = build_sweep(sample, feature);
    const long total_neg = s.neg_count.back();
    Candidate best;
    best.err = w_pos + w_neg + 1.0;
    best.cls = 2;
    for (std::size_t j = 0; j < s.thresholds.size(); ++j) {
        // polarity +1: misclassified negatives are those above the threshold
        if (total_neg - s.neg_count[j] == 0) {
            keep_best(best, Candidate{s.pos_prefix[j], 2, feature, s.thresholds[j], 0});
        }
        // polarity -1: misclassified negatives are those at or below it
        if (s.neg_count[j] == 0) {
            keep_best(best,
                      Candidate{w_pos - s.pos_prefix[j], 2, feature, s.thresholds[j], 1});
        }
    }
    return best;
}

template <typename PerFeature>
Candidate sweep_features(int dimension, int threads, PerFeature per_feature) {
    std::vector<Candidate> per(static_cast<std::size_t>(dimension));
    if (threads <= 1 || dimension <= 1) {
        for (int f = 0; f < dimension; ++f) per[static_cast<std::size_t>(f)] = per_feature(f);
    } else {
        const int n = std::min(threads, dimension);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            pool.emplace_back([&, t] {
                for (int f = t; f < dimension; f += n) {
                    per[static_cast<std::size_t>(f)] = per_feature(f);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    Candidate best = per.front();
    for (std::size_t f = 1; f < per.size(); ++f) keep_best(best, per[f]);
    return best;
}

double recompute_error(const InstanceHypothesis& h, const WeightedInstanceSample& sample,
                       double total_weight) {
    double err = 0.0;
    for (const WeightedItem& it : sample.items) {
        if (evaluate_instance(h, it.x) * it.y < 0.0) err += it.w;
    }
    return err / total_weight;
}

void totals(const WeightedInstanceSample& sample, double& w_pos, double& w_neg) {
    sample.validate();
    w_pos = 0.0;
    w_neg = 0.0;
    for (const WeightedItem& it : sample.items) {
        (it.y == 1 ? w_pos : w_neg) += it.w;
    }
    if (w_pos + w_neg <= 0.0) throw std::invalid_argument("zero total weight");
}

}  // namespace

void WeightedInstanceSample::validate() const {
    if (items.empty()) throw std::invalid_argument("empty sample");
    for (const WeightedItem& it : items) {
        if (static_cast<int>(it.x.features.size()) != dimension) {
            throw std::invalid_argument("sample dimension mismatch");
        }
        if (it.y != 1 && it.y != -1) throw std::invalid_argument("label outside {-1,+1}");
        if (!(it.w >= 0.0) || !std::isfinite(it.w)) {
            throw std::invalid_argument("weight negative or non-finite");
        }
    }
}

OracleReport erm_stumps(const WeightedInstanceSample& sample, int threads) {
    double w_pos = 0.0, w_neg = 0.0;
    totals(sample, w_pos, w_neg);

    Candidate best{w_neg, 0, 0, 0.0, 0};            // Constant{+1}
    keep_best(best, Candidate{w_pos, 1, 0, 0.0, 0});  // Constant{-1}
    keep_best(best, sweep_features(sample.dimension, threads, [&](int f) {
                  return best_stump_for_feature(sample, f, w_pos, w_neg);
              }));

    OracleReport report;
    report.hypothesis = best.hypothesis();
    report.weighted_error = recompute_error(report.hypothesis, sample, w_pos + w_neg);
    return report;
}

OracleReport erm_one_sided(const WeightedInstanceSample& sample) {
    double w_pos = 0.0, w_neg = 0.0;
    totals(sample, w_pos, w_neg);

    long neg_positive_weight = 0;
    for (const WeightedItem& it : sample.items) {
        if (it.y == -1 && it.w > 0.0) ++neg_positive_weight;
    }

    Candidate best{w_pos, 1, 0, 0.0, 0};  // Constant{-1}, always feasible
    if (neg_positive_weight == 0) {
        keep_best(best, Candidate{0.0, 0, 0, 0.0, 0});  // Constant{+1}
    }
    keep_best(best, sweep_features(sample.dimension, 1, [&](int f) {
                  return best_one_sided_for_feature(sample, f, w_pos, w_neg);
              }));

    OracleReport report;
    report.hypothesis = best.hypothesis();
    report.weighted_error = recompute_error(report.hypothesis, sample, w_pos + w_neg);
    return report;
}

}  // namespace milboost
