#include "allclear/tree.hpp"

#include "allclear/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

namespace allclear {

namespace {

struct SplitCandidate {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double score = std::numeric_limits<double>::infinity();
};

// W * gini(W) for one side, from integer class counts and the two weights.
double weighted_gini_term(std::int64_t n_xm, std::int64_t n_cbn, const ClassWeights& w) {
    const double wx = static_cast<double>(n_xm) * w.w_xm;
    const double wc = static_cast<double>(n_cbn) * w.w_cbn;
    const double total = wx + wc;
    if (total <= 0.0) return 0.0;
    return total - (wx * wx + wc * wc) / total;
}

class TreeBuilder {
public:
    TreeBuilder(const FeatureMatrix& features, const std::vector<BinaryLabel>& labels,
                const ClassWeights& weights, std::size_t max_depth, std::size_t min_leaf)
        : features_(features), labels_(labels), weights_(weights), max_depth_(max_depth),
          min_leaf_(min_leaf) {}

    DecisionTree build() {
        DecisionTree tree;
        tree.n_features = features_.cols;
        tree.max_depth = max_depth_;
        std::vector<std::size_t> rows(features_.rows);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
        nodes_ = &tree.nodes;
        build_node(std::move(rows), 0);
        return tree;
    }

private:
    std::int32_t build_node(std::vector<std::size_t> rows, std::size_t depth) {
        std::int64_t n_xm = 0;
        std::int64_t n_cbn = 0;
        for (std::size_t r : rows) {
            if (labels_[r] == BinaryLabel::XM) ++n_xm;
            else ++n_cbn;
        }

        const bool pure = n_xm == 0 || n_cbn == 0;
        const bool too_small = rows.size() < 2 * min_leaf_;
        if (depth >= max_depth_ || pure || too_small) return make_leaf(n_xm, n_cbn);

        const SplitCandidate best = find_best_split(rows, n_xm, n_cbn);
        if (!best.found) return make_leaf(n_xm, n_cbn);

        std::vector<std::size_t> left_rows;
        std::vector<std::size_t> right_rows;
        left_rows.reserve(rows.size());
        right_rows.reserve(rows.size());
        for (std::size_t r : rows) {
            if (features_.row(r)[best.feature] <= best.threshold) left_rows.push_back(r);
            else right_rows.push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();

        const auto index = static_cast<std::int32_t>(nodes_->size());
        nodes_->push_back(TreeNode{});
        (*nodes_)[index].feature_index = static_cast<std::int32_t>(best.feature);
        (*nodes_)[index].threshold = best.threshold;
        const std::int32_t left = build_node(std::move(left_rows), depth + 1);
        const std::int32_t right = build_node(std::move(right_rows), depth + 1);
        (*nodes_)[index].left = left;
        (*nodes_)[index].right = right;
        return index;
    }

    std::int32_t make_leaf(std::int64_t n_xm, std::int64_t n_cbn) {
        TreeNode node;
        node.xm_weight = static_cast<double>(n_xm) * weights_.w_xm;
        node.cbn_weight = static_cast<double>(n_cbn) * weights_.w_cbn;
        const auto index = static_cast<std::int32_t>(nodes_->size());
        nodes_->push_back(node);
        return index;
    }

    SplitCandidate find_best_split(const std::vector<std::size_t>& rows, std::int64_t n_xm,
                                   std::int64_t n_cbn) {
        SplitCandidate best;
        std::vector<std::pair<double, bool>> column;
        column.reserve(rows.size());

        for (std::size_t f = 0; f < features_.cols; ++f) {
            column.clear();
            for (std::size_t r : rows) {
                column.emplace_back(features_.row(r)[f], labels_[r] == BinaryLabel::XM);
            }
            std::sort(column.begin(), column.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            // Scan distinct-value groups with running integer class counts.
            std::int64_t left_xm = 0;
            std::int64_t left_cbn = 0;
            std::size_t i = 0;
            while (i < column.size()) {
                const double value = column[i].first;
                while (i < column.size() && column[i].first == value) {
                    if (column[i].second) ++left_xm;
                    else ++left_cbn;
                    ++i;
                }
                if (i == column.size()) break; // last group: no boundary to the right

                const std::int64_t left_total = left_xm + left_cbn;
                const std::int64_t right_total =
                    (n_xm - left_xm) + (n_cbn - left_cbn);
                if (left_total < static_cast<std::int64_t>(min_leaf_) ||
                    right_total < static_cast<std::int64_t>(min_leaf_)) {
                    continue;
                }

                const double score = weighted_gini_term(left_xm, left_cbn, weights_) +
                                     weighted_gini_term(n_xm - left_xm, n_cbn - left_cbn, weights_);
                if (score < best.score) {
                    const double next_value = column[i].first;
                    double threshold = value + (next_value - value) / 2.0;
                    // Midpoints of adjacent representables can round up to
                    // next_value; fall back to the left value so the split
                    // stays nonempty on both sides.
                    if (!(threshold < next_value)) threshold = value;
                    best.found = true;
                    best.feature = f;
                    best.threshold = threshold;
                    best.score = score;
                }
            }
        }
        return best;
    }

    const FeatureMatrix& features_;
    const std::vector<BinaryLabel>& labels_;
    const ClassWeights& weights_;
    const std::size_t max_depth_;
    const std::size_t min_leaf_;
    std::vector<TreeNode>* nodes_ = nullptr;
};

} // namespace

DecisionTree fit_tree(const FeatureMatrix& features, const std::vector<BinaryLabel>& labels,
                      const ClassWeights& weights, std::size_t max_depth, std::size_t min_leaf) {
    if (features.rows == 0) throw ConfigError("fit_tree: empty training set");
    if (features.cols == 0) throw ConfigError("fit_tree: rows have zero features");
    if (labels.size() != features.rows) {
        throw ConfigError("fit_tree: " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(features.rows) + " rows");
    }
    if (!(weights.w_xm > 0.0) || !(weights.w_cbn > 0.0)) {
        throw ConfigError("fit_tree: class weights must be strictly positive");
    }
    if (max_depth == 0) throw ConfigError("fit_tree: max_depth must be positive");
    if (min_leaf == 0) throw ConfigError("fit_tree: min_leaf must be positive");
    return TreeBuilder(features, labels, weights, max_depth, min_leaf).build();
}

double predict_proba_tree(const DecisionTree& tree, std::span<const double> row) {
    if (row.size() != tree.n_features) {
        throw DataError("predict_proba_tree: row arity " + std::to_string(row.size()) +
                        " does not match tree arity " + std::to_string(tree.n_features));
    }
    const TreeNode* node = &tree.nodes[0];
    while (!node->is_leaf()) {
        node = row[static_cast<std::size_t>(node->feature_index)] <= node->threshold
                   ? &tree.nodes[static_cast<std::size_t>(node->left)]
                   : &tree.nodes[static_cast<std::size_t>(node->right)];
    }
    return node->xm_weight / (node->xm_weight + node->cbn_weight);
}

} // namespace allclear
