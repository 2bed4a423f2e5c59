#pragma once

#include "allclear/labels.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace allclear {

struct ClassWeights {
    double w_xm = 1.0;
    double w_cbn = 1.0;

    bool operator==(const ClassWeights&) const = default;
};

// Row-major feature storage; all rows share one arity.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    static FeatureMatrix zeros(std::size_t rows, std::size_t cols) {
        return FeatureMatrix{rows, cols, std::vector<double>(rows * cols, 0.0)};
    }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(values).subspan(i * cols, cols);
    }
    std::span<double> row(std::size_t i) {
        return std::span<double>(values).subspan(i * cols, cols);
    }
};

// Flat node storage, nodes[0] is the root. feature_index < 0 marks a leaf;
// internal nodes route feature <= threshold left, > threshold right.
struct TreeNode {
    std::int32_t feature_index = -1;
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double xm_weight = 0.0;
    double cbn_weight = 0.0;

    bool is_leaf() const { return feature_index < 0; }
    bool operator==(const TreeNode&) const = default;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
    std::size_t n_features = 0;
    std::size_t max_depth = 0;

    bool operator==(const DecisionTree&) const = default;
};

// Greedy CART minimizing class-weighted Gini impurity. Split candidates are
// midpoints between consecutive distinct values per feature; ties resolve to
// the lowest (feature index, threshold). Growth stops at max_depth, purity,
// or node size < 2 * min_leaf. The search aggregates integer class counts
// per distinct value, which makes the fitted tree invariant to training-row
// permutation.
DecisionTree fit_tree(const FeatureMatrix& features, const std::vector<BinaryLabel>& labels,
                      const ClassWeights& weights, std::size_t max_depth,
                      std::size_t min_leaf = 1);

// Weighted XM share of the routed leaf: xm_weight / (xm_weight + cbn_weight).
double predict_proba_tree(const DecisionTree& tree, std::span<const double> row);

} // namespace allclear
