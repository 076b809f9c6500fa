#include "milboost/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace milboost {

double apply_bag_function(const BagFunction& psi, std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("empty bag");
    }
    switch (psi.kind) {
        case BagFunction::Kind::Max:
            return *std::max_element(values.begin(), values.end());
        case BagFunction::Kind::Avg: {
            double s = 0.0;
            for (double v : values) s += v;
            return s / static_cast<double>(values.size());
        }
        case BagFunction::Kind::PNorm: {
            if (psi.p < 1.0) {
                throw std::invalid_argument("pnorm exponent must be >= 1");
            }
            // Shift outputs into [0,2] so the p-th power is well defined,
            // take the normalized p-mean, shift back.
            double s = 0.0;
            for (double v : values) s += std::pow(std::abs(v + 1.0), psi.p);
            s /= static_cast<double>(values.size());
            return std::pow(s, 1.0 / psi.p) - 1.0;
        }
    }
    throw std::logic_error("unreachable bag function kind");
}

void MILDataset::validate() const {
    std::unordered_set<std::string> ids;
    for (const Bag& bag : bags) {
        if (!ids.insert(bag.id).second) {
            throw std::invalid_argument("duplicate bag id: " + bag.id);
        }
        if (bag.instances.empty()) {
            throw std::invalid_argument("empty bag: " + bag.id);
        }
        if (static_cast<int>(bag.instances.size()) > max_bag_size) {
            throw std::invalid_argument("bag exceeds max_bag_size: " + bag.id);
        }
        if (bag.label != 1 && bag.label != -1) {
            throw std::invalid_argument("label outside {-1,+1} in bag: " + bag.id);
        }
        for (const Instance& x : bag.instances) {
            if (static_cast<int>(x.features.size()) != dimension) {
                throw std::invalid_argument("dimension mismatch in bag: " + bag.id);
            }
            for (double f : x.features) {
                if (!std::isfinite(f)) {
                    throw std::invalid_argument("non-finite feature in bag: " + bag.id);
                }
            }
        }
    }
}

BagDistribution BagDistribution::uniform(std::size_t n) {
    BagDistribution d;
    d.weights.assign(n, 1.0 / static_cast<double>(n));
    return d;
}

void BagDistribution::validate() const {
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("distribution weight negative or non-finite");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution weights do not sum to 1");
    }
}

}  // namespace milboost
