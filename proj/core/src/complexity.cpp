#include "milboost/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "milboost/io.hpp"
#include "milboost/rng.hpp"

namespace milboost {

namespace {

constexpr int kShatterBudget = 25;
constexpr int kVcCap = 12;
constexpr int kFatCap = 6;

int sign_bit(double v) { return v > 0.0 ? 1 : 0; }

// Distinct sign rows; identical behaviors contribute nothing to shattering.
std::vector<std::vector<int>> dedup_signs(const BehaviorMatrix& m) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : m) {
        std::vector<int> s(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) s[i] = sign_bit(row[i]);
        rows.push_back(std::move(s));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

bool subset_shattered(const std::vector<std::vector<int>>& signs,
                      const std::vector<int>& subset) {
    const std::size_t k = subset.size();
    const std::uint32_t full = 1u << k;
    std::vector<char> seen(full, 0);
    std::uint32_t count = 0;
    for (const auto& row : signs) {
        std::uint32_t pat = 0;
        for (std::size_t i = 0; i < k; ++i) {
            pat |= static_cast<std::uint32_t>(row[static_cast<std::size_t>(subset[i])]) << i;
        }
        if (!seen[pat]) {
            seen[pat] = 1;
            if (++count == full) return true;
        }
    }
    return false;
}

void vc_dfs(const std::vector<std::vector<int>>& signs, int pool_size, int cap,
            std::vector<int>& subset, int start, int& best) {
    if (static_cast<int>(subset.size()) == cap) return;
    for (int p = start; p < pool_size; ++p) {
        subset.push_back(p);
        if (subset_shattered(signs, subset)) {
            best = std::max(best, static_cast<int>(subset.size()));
            vc_dfs(signs, pool_size, cap, subset, p + 1, best);
        }
        subset.pop_back();
    }
}

}  // namespace

bool shatters_matrix(const BehaviorMatrix& m) {
    if (m.empty()) throw std::invalid_argument("empty hypothesis class");
    const int k = static_cast<int>(m.front().size());
    if (k == 0) throw std::invalid_argument("no points");
    if (k > kShatterBudget) throw std::invalid_argument("exceeds brute-force budget");
    const auto signs = dedup_signs(m);
    std::vector<int> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
    return subset_shattered(signs, all);
}

int vc_dimension_matrix(const BehaviorMatrix& pool, int cap) {
    if (pool.empty()) throw std::invalid_argument("empty hypothesis class");
    if (cap < 1 || cap > kVcCap) throw std::invalid_argument("exceeds brute-force budget");
    const auto signs = dedup_signs(pool);
    const int pool_size = static_cast<int>(pool.front().size());
    int best = 0;
    std::vector<int> subset;
    vc_dfs(signs, pool_size, cap, subset, 0, best);
    return best;
}

int covering_number_matrix(const BehaviorMatrix& sample, double epsilon) {
    if (sample.empty()) throw std::invalid_argument("empty hypothesis class");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const std::size_t n = sample.size();
    const std::size_t k = sample.front().size();
    if (k == 0) throw std::invalid_argument("no sample points");

    auto dist = [&](std::size_t a, std::size_t b) {
        double d = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            d = std::max(d, std::abs(sample[a][i] - sample[b][i]));
        }
        return d;
    };

    std::vector<char> covered(n, 0);
    int size = 0;
    std::size_t remaining = n;
    while (remaining > 0) {
        // Greedy: uncovered center covering the most uncovered others.
        std::size_t best_center = n;
        std::size_t best_count = 0;
        for (std::size_t a = 0; a < n; ++a) {
            if (covered[a]) continue;
            std::size_t count = 0;
            for (std::size_t b = 0; b < n; ++b) {
                if (!covered[b] && dist(a, b) <= epsilon) ++count;
            }
            if (count > best_count) {
                best_count = count;
                best_center = a;
            }
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (!covered[b] && dist(best_center, b) <= epsilon) {
                covered[b] = 1;
                --remaining;
            }
        }
        ++size;
    }
    return size;
}

namespace {

// For one point, a deduplicated witness level: the sets of hypotheses that
// can serve +1 (output >= s+gamma) and -1 (output <= s-gamma) at level s.
struct LevelClass {
    std::vector<char> up;
    std::vector<char> down;
};

std::vector<LevelClass> level_classes(const BehaviorMatrix& pool, std::size_t point,
                                      double gamma) {
    std::vector<LevelClass> out;
    std::map<std::pair<std::vector<char>, std::vector<char>>, bool> seen;
    for (int i = 0; i < 19; ++i) {
        const double s = static_cast<double>(i - 9) / 10.0;
        LevelClass lc;
        lc.up.resize(pool.size());
        lc.down.resize(pool.size());
        bool any_up = false, any_down = false;
        for (std::size_t h = 0; h < pool.size(); ++h) {
            if (pool[h][point] >= s + gamma) {
                lc.up[h] = 1;
                any_up = true;
            } else if (pool[h][point] <= s - gamma) {
                lc.down[h] = 1;
                any_down = true;
            }
        }
        if (!any_up || !any_down) continue;
        auto key = std::make_pair(lc.up, lc.down);
        if (seen.emplace(std::move(key), true).second) out.push_back(std::move(lc));
    }
    return out;
}

struct FatState {
    std::vector<std::size_t> points;
    std::vector<const LevelClass*> levels;
};

bool fat_shattered(std::size_t num_hyp, const FatState& st) {
    const std::size_t k = st.points.size();
    const std::uint32_t full = 1u << k;
    std::vector<char> seen(full, 0);
    std::uint32_t count = 0;
    for (std::size_t h = 0; h < num_hyp; ++h) {
        std::uint32_t pat = 0;
        bool valid = true;
        for (std::size_t i = 0; i < k && valid; ++i) {
            if (st.levels[i]->up[h]) {
                pat |= 1u << i;
            } else if (!st.levels[i]->down[h]) {
                valid = false;
            }
        }
        if (valid && !seen[pat]) {
            seen[pat] = 1;
            if (++count == full) return true;
        }
    }
    return false;
}

void fat_dfs(const BehaviorMatrix& pool,
             const std::vector<std::vector<LevelClass>>& classes, int cap,
             FatState& st, std::size_t start, int& best) {
    if (static_cast<int>(st.points.size()) == cap) return;
    for (std::size_t p = start; p < classes.size(); ++p) {
        st.points.push_back(p);
        for (const LevelClass& lc : classes[p]) {
            st.levels.push_back(&lc);
            if (fat_shattered(pool.size(), st)) {
                best = std::max(best, static_cast<int>(st.points.size()));
                fat_dfs(pool, classes, cap, st, p + 1, best);
            }
            st.levels.pop_back();
        }
        st.points.pop_back();
    }
}

}  // namespace

int fat_shattering_matrix(const BehaviorMatrix& pool, double gamma, int cap) {
    if (pool.empty()) throw std::invalid_argument("empty hypothesis class");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (cap < 1 || cap > kFatCap) throw std::invalid_argument("budget exceeded");
    const std::size_t pool_size = pool.front().size();
    std::vector<std::vector<LevelClass>> classes(pool_size);
    for (std::size_t p = 0; p < pool_size; ++p) classes[p] = level_classes(pool, p, gamma);
    int best = 0;
    FatState st;
    fat_dfs(pool, classes, cap, st, 0, best);
    return best;
}

// ---------------------------------------------------------------------------
// Measurement lab

namespace {

std::vector<double> lab_instance_pool(std::uint64_t seed) {
    std::vector<double> pool;
    for (int k = 0; k <= 20; ++k) {
        pool.push_back(static_cast<double>(k - 10) / 5.0);  // grid [-2, 2]
    }
    Rng rng = Rng(seed).split(11);
    for (int i = 0; i < 10; ++i) pool.push_back(rng.uniform(-2.0, 2.0));
    return pool;
}

std::vector<double> midpoint_thresholds(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<double> out;
    out.push_back(values.front() - 0.5);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        out.push_back(0.5 * (values[j] + values[j + 1]));
    }
    out.push_back(values.back() + 0.5);
    return out;
}

double stump_1d(double x, double t, int polarity) {
    return x > t ? static_cast<double>(polarity) : static_cast<double>(-polarity);
}

double interval_1d(double x, double a, double b) {
    return (x > a && x <= b) ? 1.0 : -1.0;
}

using InstanceFn = std::function<double(const Instance&)>;
using BagFn = std::function<double(const Bag&)>;

FiniteClass<Instance> threshold_class(const std::vector<double>& ts) {
    FiniteClass<Instance> cls;
    for (double t : ts) {
        cls.hypotheses.push_back(
            [t](const Instance& x) { return stump_1d(x.features[0], t, 1); });
    }
    return cls;
}

FiniteClass<Instance> stump_class(const std::vector<double>& ts) {
    FiniteClass<Instance> cls;
    for (double t : ts) {
        for (int pol : {1, -1}) {
            cls.hypotheses.push_back(
                [t, pol](const Instance& x) { return stump_1d(x.features[0], t, pol); });
        }
    }
    return cls;
}

FiniteClass<Instance> constants_class() {
    FiniteClass<Instance> cls;
    cls.hypotheses.push_back([](const Instance&) { return 1.0; });
    cls.hypotheses.push_back([](const Instance&) { return -1.0; });
    return cls;
}

FiniteClass<Instance> interval_class(const std::vector<double>& ts) {
    FiniteClass<Instance> cls;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            const double a = ts[i], b = ts[j];
            cls.hypotheses.push_back(
                [a, b](const Instance& x) { return interval_1d(x.features[0], a, b); });
        }
    }
    return cls;
}

// Lift instance hypotheses through psi = max over a bag's instances.
FiniteClass<Bag> max_lift(const FiniteClass<Instance>& cls) {
    FiniteClass<Bag> out;
    out.tag = DomainTag::BagLevel;
    for (const InstanceFn& h : cls.hypotheses) {
        out.hypotheses.push_back([h](const Bag& bag) {
            double best = -1.0;
            for (const Instance& x : bag.instances) best = std::max(best, h(x));
            return best;
        });
    }
    return out;
}

std::vector<Instance> to_instances(const std::vector<double>& xs) {
    std::vector<Instance> out;
    for (double x : xs) out.push_back(Instance{{x}});
    return out;
}

// Seeded multisets of instance-pool values, sizes in {1,2,4,8}. Padding a
// multiset by repeating its first element leaves max-lifted behaviors
// unchanged, so the exactly-r pools embed into one another and measured
// d_r is non-decreasing in r by construction.
struct BagPools {
    std::vector<Bag> exact;  // every multiset of size <= r, padded to r
    std::vector<Bag> upto;   // every multiset of size <= r, as-is
};

std::vector<std::vector<double>> lab_multisets(const std::vector<double>& pool,
                                               std::uint64_t seed) {
    Rng rng = Rng(seed).split(12);
    std::vector<std::vector<double>> sets;
    for (int size : {1, 2, 4, 8}) {
        for (int n = 0; n < 10; ++n) {
            std::vector<double> s;
            for (int i = 0; i < size; ++i) {
                s.push_back(pool[static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))]);
            }
            sets.push_back(std::move(s));
        }
    }
    return sets;
}

BagPools bag_pools(const std::vector<std::vector<double>>& multisets, int r) {
    BagPools pools;
    int n = 0;
    for (const auto& s : multisets) {
        if (static_cast<int>(s.size()) > r) continue;
        Bag upto;
        upto.id = "p" + std::to_string(n);
        upto.label = 1;
        for (double x : s) upto.instances.push_back(Instance{{x}});
        Bag exact = upto;
        exact.id = "e" + std::to_string(n);
        while (static_cast<int>(exact.size()) < r) {
            exact.instances.push_back(exact.instances.front());
        }
        pools.upto.push_back(std::move(upto));
        pools.exact.push_back(std::move(exact));
        ++n;
    }
    return pools;
}

}  // namespace

std::vector<ComplexityResult> run_complexity_lab(std::uint64_t seed) {
    const std::vector<double> pool_1d = lab_instance_pool(seed);
    const std::vector<double> thresholds = midpoint_thresholds(pool_1d);
    const std::vector<Instance> instances = to_instances(pool_1d);
    const auto multisets = lab_multisets(pool_1d, seed);

    std::vector<ComplexityResult> results;
    auto add = [&](std::string cls, int r, std::size_t pool_size, std::string metric,
                   std::string param, double value) {
        results.push_back({std::move(cls), r, pool_size, std::move(metric),
                           std::move(param), value, seed});
    };

    const struct {
        const char* name;
        FiniteClass<Instance> cls;
    } instance_classes[] = {
        {"threshold_1d", threshold_class(thresholds)},
        {"stumps_1d", stump_class(thresholds)},
        {"constants", constants_class()},
        {"interval_1d", interval_class(thresholds)},
    };
    for (const auto& entry : instance_classes) {
        add(entry.name, 0, instances.size(), "vc", "instance",
            vc_dimension(entry.cls, std::span<const Instance>(instances), 4));
    }

    const struct {
        const char* name;
        FiniteClass<Instance> base;
    } bag_classes[] = {
        {"max_stump_1d", stump_class(thresholds)},
        {"max_interval_1d", interval_class(thresholds)},
    };
    for (const auto& entry : bag_classes) {
        const FiniteClass<Bag> lifted = max_lift(entry.base);
        for (int r : {1, 2, 4, 8}) {
            const BagPools pools = bag_pools(multisets, r);
            add(entry.name, r, pools.exact.size(), "vc", "exact_r",
                vc_dimension(lifted, std::span<const Bag>(pools.exact), 8));
            add(entry.name, r, pools.upto.size(), "vc", "upto_r",
                vc_dimension(lifted, std::span<const Bag>(pools.upto), 8));
        }
    }

    const FiniteClass<Instance> stumps = stump_class(thresholds);
    for (double eps : {0.5, 1.0, 2.0}) {
        add("stumps_1d", 0, instances.size(), "cov", "eps=" + format_double(eps),
            covering_number(stumps, std::span<const Instance>(instances), eps));
    }
    for (double gamma : {0.5, 1.0}) {
        add("stumps_1d", 0, instances.size(), "fat", "gamma=" + format_double(gamma),
            fat_shattering(stumps, std::span<const Instance>(instances), gamma, 4));
    }
    return results;
}

void save_complexity_csv(std::span<const ComplexityResult> results,
                         const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "class,r,pool_size,metric,param,value,seed\n";
    for (const ComplexityResult& r : results) {
        out << r.class_name << "," << r.r << "," << r.pool_size << "," << r.metric << ","
            << r.param << "," << format_double(r.value) << "," << r.seed << "\n";
    }
}

GrowthTable interval_growth_table(std::uint64_t seed) {
    const std::vector<double> pool_1d = lab_instance_pool(seed);
    const std::vector<double> thresholds = midpoint_thresholds(pool_1d);
    const std::vector<Instance> instances = to_instances(pool_1d);
    const auto multisets = lab_multisets(pool_1d, seed);

    GrowthTable table;
    const FiniteClass<Instance> base = interval_class(thresholds);
    table.d_instance =
        vc_dimension(base, std::span<const Instance>(instances), 4);
    const FiniteClass<Bag> lifted = max_lift(base);
    for (int r : {1, 2, 4, 8}) {
        const BagPools pools = bag_pools(multisets, r);
        table.r_values.push_back(r);
        table.d_exact.push_back(
            vc_dimension(lifted, std::span<const Bag>(pools.exact), 8));
        table.d_upto.push_back(vc_dimension(lifted, std::span<const Bag>(pools.upto), 8));
    }
    for (std::size_t i = 0; i < table.r_values.size(); ++i) {
        const double denom =
            std::log2(2.0 * table.r_values[i]) * static_cast<double>(table.d_instance);
        table.fitted_c = std::max(table.fitted_c, table.d_exact[i] / denom);
    }
    return table;
}

}  // namespace milboost
