#ifndef GRAPHMARK_CROSS_VALIDATION_HPP
#define GRAPHMARK_CROSS_VALIDATION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace graphmark {

struct FoldPlan {
    int k = 0;
    std::vector<int> assignments; // per-sample fold index in [0, k)
    std::uint64_t seed = 0;

    std::vector<int> fold_indices(int fold) const;
    std::vector<int> complement_indices(int fold) const;
};

// Deterministic stratified partition; every class must have >= k members.
FoldPlan stratified_kfold(std::span<const int> labels, int k,
                          std::uint64_t seed);

using GridPoint = std::map<std::string, double>;

struct HyperGrid {
    std::map<std::string, std::vector<double>> values;

    // Cartesian product in deterministic (key-sorted, value-ordered) order;
    // an empty grid yields one empty point.
    std::vector<GridPoint> points() const;
};

inline double grid_value(const GridPoint& point, const std::string& key,
                         double fallback) {
    auto it = point.find(key);
    return it == point.end() ? fallback : it->second;
}

// A model bound to one dataset: fit on index subsets, predict on others.
class ModelRunner {
public:
    virtual ~ModelRunner() = default;
    virtual void fit(std::span<const int> train_indices,
                     const GridPoint& point) = 0;
    virtual std::vector<int> predict(std::span<const int> indices) = 0;
    // Binary decision scores for AUC; only called when class_count == 2.
    virtual std::vector<double> decision_scores(
        std::span<const int> indices) = 0;
};

struct ModelResult {
    std::vector<double> fold_accuracy;
    std::vector<double> fold_auc;       // empty unless binary
    std::vector<GridPoint> selected;    // winning grid point per fold
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;          // population std over folds
    double mean_auc = 0.0;
    double std_auc = 0.0;
};

// Outer stratified k-fold risk assessment with inner 90/10 holdout model
// selection on each training portion.
ModelResult run_risk_assessment(ModelRunner& model, std::span<const int> labels,
                                int class_count, const HyperGrid& grid,
                                int k, std::uint64_t seed);

} // namespace graphmark

#endif // GRAPHMARK_CROSS_VALIDATION_HPP
