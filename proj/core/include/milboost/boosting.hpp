#ifndef MILBOOST_BOOSTING_HPP
#define MILBOOST_BOOSTING_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "milboost/milearn.hpp"

namespace milboost {

struct EnsembleTerm {
    BagHypothesis hypothesis;
    double alpha = 0.0;
};

/// Weighted vote over bag hypotheses; predicts sign of the weighted sum,
/// with sign(0) = +1.
struct Ensemble {
    BagFunction psi = BagFunction::max();  // psi used by composed terms
    std::vector<EnsembleTerm> terms;
};

struct BoostRound {
    int t = 0;
    double gamma = 0.0;
    double alpha = 0.0;
    double normalizer = 0.0;  // Z_t
    double rho = 0.0;         // AdaBoost* margin target; NaN for plain AdaBoost
    double train_error = 0.0;
    double min_margin = 0.0;
};

struct BoostTrace {
    std::vector<BoostRound> rounds;
};

using WeakLearner =
    std::function<WeakLearnerOutput(std::span<const Bag>, const BagDistribution&)>;

/// Standard AdaBoost: alpha_t = 0.5*ln((1+gamma_t)/(1-gamma_t)), gamma
/// clamped away from +-1; multiplicative distribution update normalized by
/// Z_t. Stops early on a perfect round (gamma >= 1-1e-9, round kept) or
/// when no edge remains (gamma <= 0, round dropped).
std::pair<Ensemble, BoostTrace> adaboost(std::span<const Bag> bags,
                                         const WeakLearner& weak, int rounds,
                                         const BagFunction& psi = BagFunction::max());

/// Margin-maximizing variant: rho_t = (min_{s<=t} gamma_s) - nu and
/// alpha_t = 0.5*ln((1+gamma_t)/(1-gamma_t)) - 0.5*ln((1+rho_t)/(1-rho_t)).
/// Terminates when gamma_t <= nu (round dropped).
std::pair<Ensemble, BoostTrace> adaboost_star(std::span<const Bag> bags,
                                              const WeakLearner& weak, int rounds,
                                              double nu,
                                              const BagFunction& psi = BagFunction::max());

int predict(const Ensemble& ensemble, const Bag& bag);

/// Normalized margins y * sum(alpha_t h_t(bag)) / sum |alpha_t|, in [-1,+1].
std::vector<double> margins(const Ensemble& ensemble, std::span<const Bag> bags);

/// Model file: {"format_version":1,"psi":...,"terms":[{"alpha":...,
/// "hypothesis":{...}}]}. Byte-stable for fixed inputs.
void save_model(const Ensemble& ensemble, const std::string& path);
Ensemble load_model(const std::string& path);

/// Trace CSV columns: t,gamma,alpha,Z,rho,train_error,min_margin (rho blank
/// for plain AdaBoost rounds).
void save_trace_csv(const BoostTrace& trace, const std::string& path);

}  // namespace milboost

#endif
