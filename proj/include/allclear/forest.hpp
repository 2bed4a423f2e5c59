#pragma once

#include "allclear/intervals.hpp"
#include "allclear/tree.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace allclear {

struct TsfHyperParams {
    std::size_t n_estimators = 100;
    std::size_t max_depth = 5;
    ClassWeights class_weights;
    // 0 = auto, resolved to ceil(sqrt(n)) for series length n at fit time.
    std::size_t intervals_per_tree = 0;
    std::size_t min_interval_length = kDefaultMinIntervalLength;
    std::size_t min_leaf = 1;
    double threshold = 0.5;

    bool operator==(const TsfHyperParams&) const = default;
};

std::size_t resolve_intervals_per_tree(const TsfHyperParams& hp, std::size_t series_length);

// Univariate time series forest: one interval set and one class-weighted
// tree per member, aggregated by unweighted probability mean.
struct TsfModel {
    TsfHyperParams hyperparams;
    std::uint64_t seed = 0;
    std::size_t series_length = 0;
    std::vector<IntervalSet> interval_sets;
    std::vector<DecisionTree> trees;

    bool operator==(const TsfModel&) const = default;
};

// Tree t draws its intervals from seed mix_seed(seed, t); fitting is
// parallelized across trees and byte-identical to serial execution.
TsfModel fit_tsf(const std::vector<std::vector<double>>& series_set,
                 const std::vector<BinaryLabel>& labels, const TsfHyperParams& hp,
                 std::uint64_t seed);

double predict_proba(const TsfModel& model, std::span<const double> series);
BinaryLabel predict(const TsfModel& model, std::span<const double> series);

// Parallel over instances; per-instance tree order is fixed, so results
// match the one-by-one serial path exactly.
std::vector<double> predict_proba_batch(const TsfModel& model,
                                        const std::vector<std::vector<double>>& series_set);

} // namespace allclear
