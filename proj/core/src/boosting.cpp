#include "milboost/boosting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "milboost/io.hpp"

namespace milboost {

namespace {

constexpr double kGammaClamp = 1.0 - 1e-12;
constexpr double kPerfectEdge = 1.0 - 1e-9;

double half_log_odds(double g) {
    g = std::clamp(g, -kGammaClamp, kGammaClamp);
    return 0.5 * std::log((1.0 + g) / (1.0 - g));
}

struct RoundState {
    std::vector<double> scores;     // running weighted vote per bag
    double sum_abs_alpha = 0.0;

    explicit RoundState(std::size_t n) : scores(n, 0.0) {}

    void account(std::span<const Bag> bags, std::span<const double> outputs,
                 double alpha, BoostRound& round) {
        sum_abs_alpha += std::abs(alpha);
        std::size_t mistakes = 0;
        double min_margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < bags.size(); ++i) {
            scores[i] += alpha * outputs[i];
            const int pred = scores[i] >= 0.0 ? 1 : -1;
            if (pred != bags[i].label) ++mistakes;
            const double m = sum_abs_alpha > 0.0
                                 ? bags[i].label * scores[i] / sum_abs_alpha
                                 : 0.0;
            min_margin = std::min(min_margin, m);
        }
        round.train_error = static_cast<double>(mistakes) / static_cast<double>(bags.size());
        round.min_margin = min_margin;
    }
};

enum class Variant { Plain, Star };

std::pair<Ensemble, BoostTrace> boost_loop(std::span<const Bag> bags,
                                           const WeakLearner& weak, int rounds,
                                           const BagFunction& psi, Variant variant,
                                           double nu) {
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (bags.empty()) throw std::invalid_argument("no bags");
    if (variant == Variant::Star && !(nu > 0.0 && nu < 1.0)) {
        throw std::invalid_argument("nu must be in (0,1)");
    }

    Ensemble ensemble;
    ensemble.psi = psi;
    BoostTrace trace;
    BagDistribution dist = BagDistribution::uniform(bags.size());
    RoundState state(bags.size());
    std::vector<double> outputs(bags.size());
    double min_gamma = std::numeric_limits<double>::infinity();

    for (int t = 1; t <= rounds; ++t) {
        const WeakLearnerOutput wl = weak(bags, dist);
        for (std::size_t i = 0; i < bags.size(); ++i) {
            outputs[i] = evaluate_bag(wl.hypothesis, bags[i]);
        }
        double gamma = 0.0;
        for (std::size_t i = 0; i < bags.size(); ++i) {
            gamma += dist.weights[i] * bags[i].label * outputs[i];
        }
        // the weight sum can drift from 1 by an ulp; keep gamma in range
        gamma = std::clamp(gamma, -1.0, 1.0);

        BoostRound round;
        round.t = t;
        round.gamma = gamma;
        if (variant == Variant::Plain) {
            if (gamma <= 0.0) break;  // no edge left; round dropped
            round.alpha = half_log_odds(gamma);
            round.rho = std::numeric_limits<double>::quiet_NaN();
        } else {
            if (gamma <= nu) break;
            min_gamma = std::min(min_gamma, gamma);
            round.rho = min_gamma - nu;
            round.alpha = half_log_odds(gamma) - half_log_odds(round.rho);
        }

        double z = 0.0;
        for (std::size_t i = 0; i < bags.size(); ++i) {
            z += dist.weights[i] * std::exp(-round.alpha * bags[i].label * outputs[i]);
        }
        round.normalizer = z;
        for (std::size_t i = 0; i < bags.size(); ++i) {
            dist.weights[i] =
                dist.weights[i] * std::exp(-round.alpha * bags[i].label * outputs[i]) / z;
        }

        ensemble.terms.push_back({wl.hypothesis, round.alpha});
        state.account(bags, outputs, round.alpha, round);
        trace.rounds.push_back(round);

        if (variant == Variant::Plain && gamma >= kPerfectEdge) break;
    }
    return {std::move(ensemble), std::move(trace)};
}

}  // namespace

std::pair<Ensemble, BoostTrace> adaboost(std::span<const Bag> bags,
                                         const WeakLearner& weak, int rounds,
                                         const BagFunction& psi) {
    return boost_loop(bags, weak, rounds, psi, Variant::Plain, 0.0);
}

std::pair<Ensemble, BoostTrace> adaboost_star(std::span<const Bag> bags,
                                              const WeakLearner& weak, int rounds,
                                              double nu, const BagFunction& psi) {
    return boost_loop(bags, weak, rounds, psi, Variant::Star, nu);
}

int predict(const Ensemble& ensemble, const Bag& bag) {
    if (ensemble.terms.empty()) throw std::runtime_error("untrained");
    double score = 0.0;
    for (const EnsembleTerm& term : ensemble.terms) {
        score += term.alpha * evaluate_bag(term.hypothesis, bag);
    }
    return score >= 0.0 ? 1 : -1;
}

std::vector<double> margins(const Ensemble& ensemble, std::span<const Bag> bags) {
    if (ensemble.terms.empty()) throw std::runtime_error("untrained");
    double sum_abs = 0.0;
    for (const EnsembleTerm& term : ensemble.terms) sum_abs += std::abs(term.alpha);
    std::vector<double> out;
    out.reserve(bags.size());
    for (const Bag& bag : bags) {
        double score = 0.0;
        for (const EnsembleTerm& term : ensemble.terms) {
            score += term.alpha * evaluate_bag(term.hypothesis, bag);
        }
        out.push_back(sum_abs > 0.0 ? bag.label * score / sum_abs : 0.0);
    }
    return out;
}

void save_model(const Ensemble& ensemble, const std::string& path) {
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["psi"] = bag_function_to_json(ensemble.psi);
    auto terms = nlohmann::ordered_json::array();
    for (const EnsembleTerm& term : ensemble.terms) {
        terms.push_back({{"alpha", term.alpha},
                         {"hypothesis", bag_hypothesis_to_json(term.hypothesis)}});
    }
    j["terms"] = std::move(terms);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

Ensemble load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::ordered_json::exception&) {
        throw std::runtime_error("malformed model file: " + path);
    }
    if (j.value("format_version", 0) != 1) {
        throw std::runtime_error("unsupported model format_version");
    }
    Ensemble ensemble;
    ensemble.psi = bag_function_from_json(j.at("psi"));
    for (const auto& term : j.at("terms")) {
        ensemble.terms.push_back({bag_hypothesis_from_json(term.at("hypothesis")),
                                  term.at("alpha").get<double>()});
    }
    return ensemble;
}

void save_trace_csv(const BoostTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "t,gamma,alpha,Z,rho,train_error,min_margin\n";
    for (const BoostRound& r : trace.rounds) {
        out << r.t << "," << format_double(r.gamma) << "," << format_double(r.alpha)
            << "," << format_double(r.normalizer) << ",";
        if (!std::isnan(r.rho)) out << format_double(r.rho);
        out << "," << format_double(r.train_error) << "," << format_double(r.min_margin)
            << "\n";
    }
}

}  // namespace milboost
