#ifndef GRAPHMARK_REGRESSION_HPP
#define GRAPHMARK_REGRESSION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphmark/evaluation.hpp"

namespace graphmark {

// Disjoint stratified subsets of near-equal size. Requires
// labels.size() >= parts * 50.
std::vector<std::vector<int>> split_into_subsets(std::span<const int> labels,
                                                 int parts,
                                                 std::uint64_t seed);

// 26 features: per property (canonical order) mean, std, and Pearson with
// the labels (0 when undefined), then log10 of the graph count and the
// class count.
struct FeatureVector26 {
    std::array<double, 26> values{};
    // Properties whose label correlation was undefined (constant sequence).
    std::vector<PropertyName> undefined_correlations;

    static std::array<std::string, 26> names();
};

FeatureVector26 dataset_features(const PreparedDataset& dataset,
                                 std::span<const int> subset);

struct RidgeModel {
    Eigen::VectorXd weights; // on standardized features
    double intercept = 0.0;
    Eigen::VectorXd mean;
    Eigen::VectorXd scale;
};

// Closed-form ridge on z-scored features with an unpenalized intercept.
RidgeModel ridge_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                     double alpha);
Eigen::VectorXd ridge_predict(const RidgeModel& model, const Eigen::MatrixXd& x);

struct RegressionEval {
    double pearson = 0.0;
    double p_value = 1.0; // permutation test on |pearson|
    double spearman = 0.0;
};

RegressionEval evaluate_regression(std::span<const double> predictions,
                                   std::span<const double> targets,
                                   int permutations = 10000,
                                   std::uint64_t seed = 0);

struct RegressionSample {
    std::string source;
    int subset_index = 0;
    FeatureVector26 features;
    double target = 0.0;
};

struct RegressionRepeat {
    std::vector<std::string> train_datasets;
    std::vector<std::string> test_datasets;
    RegressionEval eval;
};

struct RegressionSummary {
    std::vector<RegressionSample> samples;
    std::vector<RegressionRepeat> repeats;
    double pearson_mean = 0.0;
    double pearson_std = 0.0;
    double spearman_mean = 0.0;
    double p_value_mean = 0.0;
    double p_value_max = 0.0;
    // Fitted values for every sample from the first repeat's model, plus the
    // role each sample played there.
    std::vector<double> fitted;
    std::vector<bool> was_test;
};

// Full pipeline: split each dataset into `parts` stratified subsets, measure
// per-subset effectiveness with the fast roster, then repeat dataset-level
// 70/30 splits and ridge-regress effectiveness from the 26 features.
RegressionSummary run_effectiveness_regression(
    std::span<const PreparedDataset> datasets, int parts, int repeats,
    double alpha, int cv_folds, std::uint64_t seed, int jobs = 1);

} // namespace graphmark

#endif // GRAPHMARK_REGRESSION_HPP
