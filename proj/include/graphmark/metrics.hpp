#ifndef GRAPHMARK_METRICS_HPP
#define GRAPHMARK_METRICS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphmark/properties.hpp"
#include "graphmark/records.hpp"

namespace graphmark {

// Signed performance gap between a graph-aware method and its type-matched
// baseline, plus the worse of the two scores (R*).
struct GapRecord {
    InfoType info_type = InfoType::S;
    ResultRecord graph_method;
    ResultRecord baseline;
    double delta = 0.0;   // graph_method.mean - baseline.mean
    double r_star = 0.0;  // min of the two means
};

struct TypeEffect {
    GapRecord gap;
    double lambda = 0.0;
    double contribution = 0.0;
};

struct EffectivenessReport {
    std::string dataset;
    int class_count = 2;
    std::map<InfoType, TypeEffect> per_type;
    double total = 0.0;
};

GapRecord performance_gap(const ResultRecord& graph_method,
                          const ResultRecord& baseline);

// The gap with the largest |delta| over graph-aware methods. Ties break to
// the higher graph-method mean, then to the lexicographically smaller name.
GapRecord select_best_gap(const ResultRecord& baseline,
                          std::span<const ResultRecord> graph_methods);

// Convenience overload: baseline identified by method-name convention.
GapRecord select_best_gap(std::span<const ResultRecord> records);

// lambda = (1 - r_star) / (1 - 1/|Y|).
double complexity_factor(double r_star, int class_count);

// Per-type contribution |delta| / (R* (|Y|-1)) * lambda, summed over the
// supplied types (at most one gap per type).
EffectivenessReport effectiveness(std::span<const GapRecord> gaps,
                                  int class_count,
                                  const std::string& dataset = "");

// Sample Pearson correlation; nullopt when either sequence is constant.
std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y);

// Pearson of average-rank-transformed sequences (ties get mean ranks).
std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y);

// Per-property Pearson between realized property sequences and the labels.
std::map<PropertyName, std::optional<double>> property_label_correlations(
    const std::vector<Graph>& graphs, std::span<const int> labels,
    int jobs = 1);

std::map<PropertyName, std::optional<double>> property_label_correlations(
    const std::array<PropertySequence, 8>& sequences,
    std::span<const int> labels);

} // namespace graphmark

#endif // GRAPHMARK_METRICS_HPP
