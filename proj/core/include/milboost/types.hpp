#ifndef MILBOOST_TYPES_HPP
#define MILBOOST_TYPES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace milboost {

/// A single feature vector. Instance labels are never observed; supervision
/// is attached to bags only.
struct Instance {
    std::vector<double> features;
};

/// An ordered list of instances sharing one label in {-1,+1}. Order is
/// preserved for reproducibility but carries no semantics: every bag
/// combining function is permutation-invariant.
struct Bag {
    std::string id;
    std::vector<Instance> instances;
    int label = 1;  // -1 or +1

    std::size_t size() const { return instances.size(); }
};

struct MILDataset {
    int dimension = 0;
    int max_bag_size = 0;
    std::vector<Bag> bags;

    /// Throws std::invalid_argument naming the offending bag when an
    /// invariant is violated (dimension mismatch, empty bag, bad label,
    /// oversized bag, duplicate id, non-finite feature).
    void validate() const;
};

/// Bag combining function psi: maps per-instance outputs in [-1,+1] to one
/// bag output in [-1,+1]. Max is the MIL OR rule; PNorm(p) interpolates
/// Avg (p=1) toward Max (p -> inf) via the shift-by-one construction.
struct BagFunction {
    enum class Kind { Max, Avg, PNorm };
    Kind kind = Kind::Max;
    double p = 2.0;  // used by PNorm only, must be >= 1

    static BagFunction max() { return {Kind::Max, 2.0}; }
    static BagFunction avg() { return {Kind::Avg, 2.0}; }
    static BagFunction pnorm(double p) { return {Kind::PNorm, p}; }
};

double apply_bag_function(const BagFunction& psi, std::span<const double> values);

/// Distribution over a fixed-order bag sample: non-negative weights summing
/// to 1 within 1e-9.
struct BagDistribution {
    std::vector<double> weights;

    static BagDistribution uniform(std::size_t n);
    void validate() const;
};

}  // namespace milboost

#endif
