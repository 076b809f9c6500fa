// milboost: batch CLI for the MIL boosting toolkit.
//
// Subcommands: synth | train | eval | predict | complexity. Every command is
// a pure function of (input files, flags, seed); re-runs are byte-identical,
// including across --threads settings.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "milboost/boosting.hpp"
#include "milboost/complexity.hpp"
#include "milboost/io.hpp"
#include "milboost/milearn.hpp"
#include "milboost/synth.hpp"

namespace {

using namespace milboost;

// Input validation problems exit with 2; runtime failures with 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_file(const std::string& path) {
    if (!std::filesystem::exists(path)) {
        throw ValidationError("missing file: " + path);
    }
}

MILDataset load_checked(const std::string& path, const std::string& format) {
    require_file(path);
    try {
        return load_dataset(path, dataset_format_from_string(format));
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
}

struct SynthArgs {
    std::string out;
    std::string format = "jsonl";
    std::string regime = "homogeneous_independent";
    int dimension = 2;
    int max_bag_size = 4;
    int num_bags = 100;
    double positive_rate = 0.5;
    double noise = 0.0;
    std::uint64_t seed = 0;
    int target_feature = 0;
    double target_threshold = 0.0;
    int target_polarity = 1;
};

int cmd_synth(const SynthArgs& a) {
    SynthSpec spec;
    try {
        spec.regime = synth_regime_from_string(a.regime);
        spec.dimension = a.dimension;
        spec.max_bag_size = a.max_bag_size;
        spec.num_bags = a.num_bags;
        spec.positive_rate = a.positive_rate;
        spec.noise = a.noise;
        spec.seed = a.seed;
        if (a.target_feature < 0 || a.target_feature >= a.dimension) {
            throw ValidationError("target feature out of range");
        }
        if (a.target_polarity != 1 && a.target_polarity != -1) {
            throw ValidationError("target polarity must be +1 or -1");
        }
        spec.target = Stump{a.target_feature, a.target_threshold, a.target_polarity};
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    const MILDataset ds = generate_synthetic(spec);
    save_dataset(ds, a.out, dataset_format_from_string(a.format));
    return 0;
}

struct TrainArgs {
    std::string data;
    std::string format = "jsonl";
    std::string model_out;
    std::string trace_out;
    std::string booster = "adaboost";
    int rounds = 100;
    double nu = 0.1;
    std::string psi = "max";
    double pnorm_p = 2.0;
    std::string oracle = "agnostic";
    std::string mode = "per_instance";
    int threads = 1;
};

BagFunction parse_psi(const std::string& name, double p) {
    if (name == "max") return BagFunction::max();
    if (name == "avg") return BagFunction::avg();
    if (name == "pnorm") return BagFunction::pnorm(p);
    throw ValidationError("unknown psi: " + name);
}

int cmd_train(const TrainArgs& a) {
    MILearnConfig config;
    config.psi = parse_psi(a.psi, a.pnorm_p);
    try {
        config.oracle_kind = oracle_kind_from_string(a.oracle);
        config.mode = lift_mode_from_string(a.mode);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    if (a.booster != "adaboost" && a.booster != "adaboost_star") {
        throw ValidationError("unknown booster: " + a.booster);
    }
    if (a.rounds < 1) throw ValidationError("rounds must be >= 1");
    config.threads = a.threads;

    const MILDataset ds = load_checked(a.data, a.format);
    const WeakLearner weak = [&config](std::span<const Bag> bags,
                                       const BagDistribution& dist) {
        return milearn(bags, dist, config);
    };

    auto [ensemble, trace] =
        a.booster == "adaboost"
            ? adaboost(ds.bags, weak, a.rounds, config.psi)
            : adaboost_star(ds.bags, weak, a.rounds, a.nu, config.psi);

    save_model(ensemble, a.model_out);
    if (!a.trace_out.empty()) save_trace_csv(trace, a.trace_out);
    return 0;
}

struct EvalArgs {
    std::string data;
    std::string format = "jsonl";
    std::string model;
    std::string out;
};

nlohmann::ordered_json eval_metrics(const Ensemble& ensemble, const MILDataset& ds) {
    std::size_t wrong = 0, pos = 0, neg = 0, pos_wrong = 0, neg_wrong = 0;
    for (const Bag& bag : ds.bags) {
        const bool miss = predict(ensemble, bag) != bag.label;
        wrong += miss;
        if (bag.label == 1) {
            ++pos;
            pos_wrong += miss;
        } else {
            ++neg;
            neg_wrong += miss;
        }
    }
    const std::vector<double> ms = margins(ensemble, ds.bags);
    double min_m = 1.0, sum_m = 0.0;
    for (double m : ms) {
        min_m = std::min(min_m, m);
        sum_m += m;
    }
    nlohmann::ordered_json j;
    j["bag_error"] = static_cast<double>(wrong) / static_cast<double>(ds.bags.size());
    j["per_class_error"] = {
        {"positive", pos == 0 ? 0.0 : static_cast<double>(pos_wrong) / pos},
        {"negative", neg == 0 ? 0.0 : static_cast<double>(neg_wrong) / neg}};
    j["min_margin"] = min_m;
    j["mean_margin"] = sum_m / static_cast<double>(ms.size());
    j["rounds"] = ensemble.terms.size();
    return j;
}

Ensemble load_model_checked(const std::string& path) {
    require_file(path);
    try {
        return load_model(path);
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
}

int cmd_eval(const EvalArgs& a) {
    const MILDataset ds = load_checked(a.data, a.format);
    const Ensemble ensemble = load_model_checked(a.model);
    const nlohmann::ordered_json j = eval_metrics(ensemble, ds);
    if (a.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + a.out);
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct PredictArgs {
    std::string data;
    std::string format = "jsonl";
    std::string model;
    std::string out;
};

int cmd_predict(const PredictArgs& a) {
    const MILDataset ds = load_checked(a.data, a.format);
    const Ensemble ensemble = load_model_checked(a.model);
    double sum_abs = 0.0;
    for (const EnsembleTerm& term : ensemble.terms) sum_abs += std::abs(term.alpha);

    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + a.out);
    out << "bag_id,score,label\n";
    for (const Bag& bag : ds.bags) {
        double score = 0.0;
        for (const EnsembleTerm& term : ensemble.terms) {
            score += term.alpha * evaluate_bag(term.hypothesis, bag);
        }
        if (sum_abs > 0.0) score /= sum_abs;
        out << bag.id << "," << format_double(score) << ","
            << (score >= 0.0 ? 1 : -1) << "\n";
    }
    return 0;
}

struct ComplexityArgs {
    std::string out;
    std::uint64_t seed = 0;
};

int cmd_complexity(const ComplexityArgs& a) {
    const auto results = run_complexity_lab(a.seed);
    save_complexity_csv(results, a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MIL boosting toolkit: bag-level weak learning, AdaBoost and "
                 "AdaBoost*, and a brute-force complexity lab"};
    app.require_subcommand(1);
    app.set_config("--config");

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic MIL dataset");
    synth->add_option("--out", synth_args.out, "Output dataset path")->required();
    synth->add_option("--format", synth_args.format, "jsonl|csv");
    synth->add_option("--regime", synth_args.regime,
                      "homogeneous_independent|homogeneous_dependent|"
                      "heterogeneous_dependent");
    synth->add_option("--d", synth_args.dimension, "Feature dimension");
    synth->add_option("--R", synth_args.max_bag_size, "Max bag size");
    synth->add_option("--num-bags", synth_args.num_bags, "Number of bags");
    synth->add_option("--positive-rate", synth_args.positive_rate, "Fraction positive");
    synth->add_option("--noise", synth_args.noise, "Bag label flip probability");
    synth->add_option("--seed", synth_args.seed, "RNG seed");
    synth->add_option("--target-feature", synth_args.target_feature, "Target stump feature");
    synth->add_option("--target-threshold", synth_args.target_threshold,
                      "Target stump threshold");
    synth->add_option("--target-polarity", synth_args.target_polarity,
                      "Target stump polarity (+1|-1)");

    TrainArgs train_args;
    auto* train = app.add_subcommand("train", "Boost MILearn weak hypotheses");
    train->add_option("--data", train_args.data, "Training dataset")->required();
    train->add_option("--format", train_args.format, "jsonl|csv");
    train->add_option("--model-out", train_args.model_out, "Model JSON path")->required();
    train->add_option("--trace-out", train_args.trace_out, "Per-round trace CSV path");
    train->add_option("--booster", train_args.booster, "adaboost|adaboost_star");
    train->add_option("--T", train_args.rounds, "Boosting rounds");
    train->add_option("--nu", train_args.nu, "AdaBoost* margin slack, in (0,1)");
    train->add_option("--psi", train_args.psi, "max|avg|pnorm");
    train->add_option("--pnorm-p", train_args.pnorm_p, "Exponent for psi=pnorm");
    train->add_option("--oracle", train_args.oracle, "agnostic|one_sided");
    train->add_option("--mode", train_args.mode, "per_instance|per_bag");
    train->add_option("--threads", train_args.threads, "Worker threads")
        ->envname("MILBOOST_THREADS");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate a model on a dataset");
    eval->add_option("--data", eval_args.data, "Dataset")->required();
    eval->add_option("--format", eval_args.format, "jsonl|csv");
    eval->add_option("--model", eval_args.model, "Model JSON")->required();
    eval->add_option("--out", eval_args.out, "Metrics JSON path (default stdout)");

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "Write per-bag scores");
    predict->add_option("--data", predict_args.data, "Dataset")->required();
    predict->add_option("--format", predict_args.format, "jsonl|csv");
    predict->add_option("--model", predict_args.model, "Model JSON")->required();
    predict->add_option("--out", predict_args.out, "Predictions CSV path")->required();

    ComplexityArgs complexity_args;
    auto* complexity =
        app.add_subcommand("complexity", "Run the VC / covering / fat measurement lab");
    complexity->add_option("--out", complexity_args.out, "Results CSV path")->required();
    complexity->add_option("--seed", complexity_args.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*synth) return cmd_synth(synth_args);
        if (*train) return cmd_train(train_args);
        if (*eval) return cmd_eval(eval_args);
        if (*predict) return cmd_predict(predict_args);
        if (*complexity) return cmd_complexity(complexity_args);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
