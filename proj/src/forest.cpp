#include "allclear/forest.hpp"

#include "allclear/errors.hpp"
#include "allclear/parallel.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace allclear {

std::size_t resolve_intervals_per_tree(const TsfHyperParams& hp, std::size_t series_length) {
    if (hp.intervals_per_tree > 0) return hp.intervals_per_tree;
    return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(series_length))));
}

static void validate_fit_inputs(const std::vector<std::vector<double>>& series_set,
                                const std::vector<BinaryLabel>& labels,
                                const TsfHyperParams& hp) {
    if (series_set.empty()) throw ConfigError("fit_tsf: empty training set");
    if (labels.size() != series_set.size()) {
        throw ConfigError("fit_tsf: " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(series_set.size()) + " series");
    }
    const std::size_t n = series_set.front().size();
    for (const auto& s : series_set) {
        if (s.size() != n) throw DataError("fit_tsf: series lengths differ within training set");
    }
    if (n < hp.min_interval_length) {
        throw ConfigError("fit_tsf: series length " + std::to_string(n) +
                          " is shorter than min_interval_length " +
                          std::to_string(hp.min_interval_length));
    }
    if (hp.n_estimators == 0) throw ConfigError("fit_tsf: n_estimators must be positive");
    if (!(hp.threshold > 0.0 && hp.threshold < 1.0)) {
        throw ConfigError("fit_tsf: threshold must lie in (0, 1)");
    }
    bool has_xm = false;
    bool has_cbn = false;
    for (BinaryLabel l : labels) {
        (l == BinaryLabel::XM ? has_xm : has_cbn) = true;
    }
    if (!has_xm || !has_cbn) {
        std::cerr << "warning: fit_tsf training set contains a single class; "
                     "the forest will predict constant probabilities\n";
    }
}

TsfModel fit_tsf(const std::vector<std::vector<double>>& series_set,
                 const std::vector<BinaryLabel>& labels, const TsfHyperParams& hp,
                 std::uint64_t seed) {
    validate_fit_inputs(series_set, labels, hp);
    const std::size_t n = series_set.front().size();
    const std::size_t intervals_per_tree = resolve_intervals_per_tree(hp, n);

    TsfModel model;
    model.hyperparams = hp;
    model.seed = seed;
    model.series_length = n;
    model.interval_sets.resize(hp.n_estimators);
    model.trees.resize(hp.n_estimators);

    par::parallel_for(hp.n_estimators, [&](std::size_t t) {
        Rng rng(mix_seed(seed, t));
        IntervalSet ivs = sample_intervals(n, intervals_per_tree, hp.min_interval_length, rng);
        FeatureMatrix features = FeatureMatrix::zeros(series_set.size(), 3 * ivs.intervals.size());
        for (std::size_t i = 0; i < series_set.size(); ++i) {
            extract_features_into(series_set[i], ivs, features.row(i));
        }
        model.trees[t] = fit_tree(features, labels, hp.class_weights, hp.max_depth, hp.min_leaf);
        model.interval_sets[t] = std::move(ivs);
    });
    return model;
}

double predict_proba(const TsfModel& model, std::span<const double> series) {
    if (series.size() != model.series_length) {
        throw DataError("predict_proba: series length " + std::to_string(series.size()) +
                        " does not match model series length " +
                        std::to_string(model.series_length));
    }
    std::vector<double> row;
    double sum = 0.0;
    for (std::size_t t = 0; t < model.trees.size(); ++t) {
        row.assign(3 * model.interval_sets[t].intervals.size(), 0.0);
        extract_features_into(series, model.interval_sets[t], row);
        sum += predict_proba_tree(model.trees[t], row);
    }
    return sum / static_cast<double>(model.trees.size());
}

BinaryLabel predict(const TsfModel& model, std::span<const double> series) {
    return predict_proba(model, series) >= model.hyperparams.threshold ? BinaryLabel::XM
                                                                       : BinaryLabel::CBN;
}

std::vector<double> predict_proba_batch(const TsfModel& model,
                                        const std::vector<std::vector<double>>& series_set) {
    std::vector<double> probs(series_set.size(), 0.0);
    par::parallel_for(series_set.size(),
                      [&](std::size_t i) { probs[i] = predict_proba(model, series_set[i]); });
    return probs;
}

} // namespace allclear
