#include "graphmark/cross_validation.hpp"

#include <algorithm>
#include <cmath>

#include "graphmark/classifiers.hpp"
#include "graphmark/errors.hpp"
#include "graphmark/rng.hpp"

namespace graphmark {

std::vector<int> FoldPlan::fold_indices(int fold) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < assignments.size(); ++i)
        if (assignments[i] == fold) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> FoldPlan::complement_indices(int fold) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < assignments.size(); ++i)
        if (assignments[i] != fold) out.push_back(static_cast<int>(i));
    return out;
}

FoldPlan stratified_kfold(std::span<const int> labels, int k,
                          std::uint64_t seed) {
    if (k < 2) throw spec_error("fold count must be >= 2, got " +
                                std::to_string(k));
    std::map<int, std::vector<int>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i)
        by_class[labels[i]].push_back(static_cast<int>(i));

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignments.assign(labels.size(), 0);

    std::uint64_t stream = 0;
    // One rolling cursor across classes: per-class counts stay within one of
    // each other per fold, and so do the fold sizes.
    int cursor = 0;
    for (auto& [label, members] : by_class) {
        if (static_cast<int>(members.size()) < k)
            throw spec_error("class " + std::to_string(label) + " has only " +
                             std::to_string(members.size()) +
                             " members, fewer than k = " + std::to_string(k));
        Rng rng(derive_seed(seed, stream++));
        rng.shuffle(members);
        for (int member : members) {
            plan.assignments[static_cast<std::size_t>(member)] = cursor;
            cursor = (cursor + 1) % k;
        }
    }
    return plan;
}

std::vector<GridPoint> HyperGrid::points() const {
    std::vector<GridPoint> out{GridPoint{}};
    for (const auto& [key, candidates] : values) {
        if (candidates.empty())
            throw spec_error("hyperparameter '" + key + "' has no candidates");
        std::vector<GridPoint> next;
        next.reserve(out.size() * candidates.size());
        for (const auto& point : out) {
            for (double v : candidates) {
                GridPoint extended = point;
                extended[key] = v;
                next.push_back(std::move(extended));
            }
        }
        out = std::move(next);
    }
    return out;
}

namespace {

double accuracy_of(const std::vector<int>& predictions,
                   std::span<const int> labels,
                   std::span<const int> indices) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (predictions[i] == labels[static_cast<std::size_t>(indices[i])])
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(indices.size());
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return {mean, std::sqrt(var)};
}

} // namespace

ModelResult run_risk_assessment(ModelRunner& model, std::span<const int> labels,
                                int class_count, const HyperGrid& grid,
                                int k, std::uint64_t seed) {
    FoldPlan plan = stratified_kfold(labels, k, derive_seed(seed, 0));
    auto grid_points = grid.points();
    ModelResult result;

    for (int fold = 0; fold < k; ++fold) {
        auto test_idx = plan.fold_indices(fold);
        auto train_idx = plan.complement_indices(fold);

        std::size_t winner = 0;
        if (grid_points.size() > 1) {
            // Inner 90/10 stratified holdout on the training portion.
            std::vector<int> train_labels;
            train_labels.reserve(train_idx.size());
            for (int idx : train_idx)
                train_labels.push_back(labels[static_cast<std::size_t>(idx)]);

            std::vector<int> inner_train = train_idx;
            std::vector<int> holdout;
            try {
                FoldPlan inner = stratified_kfold(
                    train_labels, 10,
                    derive_seed(seed, 1 + static_cast<std::uint64_t>(fold)));
                inner_train.clear();
                for (std::size_t i = 0; i < train_idx.size(); ++i) {
                    if (inner.assignments[i] == 0)
                        holdout.push_back(train_idx[i]);
                    else
                        inner_train.push_back(train_idx[i]);
                }
            } catch (const spec_error&) {
                // A class too small for the inner split: fall back to the
                // first grid point.
                holdout.clear();
            }

            if (!holdout.empty()) {
                double best_acc = -1.0;
                for (std::size_t gi = 0; gi < grid_points.size(); ++gi) {
                    model.fit(inner_train, grid_points[gi]);
                    auto predictions = model.predict(holdout);
                    double acc = accuracy_of(predictions, labels, holdout);
                    if (acc > best_acc) {
                        best_acc = acc;
                        winner = gi;
                    }
                }
            }
        }

        model.fit(train_idx, grid_points[winner]);
        auto predictions = model.predict(test_idx);
        result.fold_accuracy.push_back(accuracy_of(predictions, labels, test_idx));
        result.selected.push_back(grid_points[winner]);
        if (class_count == 2) {
            auto scores = model.decision_scores(test_idx);
            std::vector<int> test_labels;
            test_labels.reserve(test_idx.size());
            bool both = false;
            for (int idx : test_idx)
                test_labels.push_back(labels[static_cast<std::size_t>(idx)]);
            both = std::count(test_labels.begin(), test_labels.end(), 1) > 0 &&
                   std::count(test_labels.begin(), test_labels.end(), 0) > 0;
            // Stratification guarantees both classes in practice; guard anyway.
            result.fold_auc.push_back(both ? compute_auc(scores, test_labels)
                                           : 0.5);
        }
    }

    std::tie(result.mean_accuracy, result.std_accuracy) =
        mean_std(result.fold_accuracy);
    if (!result.fold_auc.empty())
        std::tie(result.mean_auc, result.std_auc) = mean_std(result.fold_auc);
    return result;
}

} // namespace graphmark
