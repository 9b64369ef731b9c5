#ifndef GRAPHMARK_EVALUATION_HPP
#define GRAPHMARK_EVALUATION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphmark/cross_validation.hpp"
#include "graphmark/metrics.hpp"
#include "graphmark/properties.hpp"
#include "graphmark/records.hpp"

namespace graphmark {

// A dataset with cached property sequences, ready for model evaluation.
struct PreparedDataset {
    std::string name;
    std::vector<Graph> graphs;
    std::vector<int> labels;
    int class_count = 2;
    std::array<PropertySequence, 8> properties;

    static PreparedDataset prepare(std::string name, std::vector<Graph> graphs,
                                   std::vector<int> labels, int jobs = 1);
};

enum class ModelKind {
    degree_baseline,    // logistic regression on avg_degree
    property_features,  // logistic regression on the 8 properties
    wl_kernel,          // WL subtree kernel + kernel ridge
    sp_kernel,          // shortest-path kernel + kernel ridge
};

struct ModelSpec {
    std::string name;
    ModelKind kind = ModelKind::degree_baseline;
    InfoType info_type = InfoType::S;
    bool baseline = false;
    HyperGrid grid;
};

// degree baseline vs {property features, WL, SP}, default hypergrids.
std::vector<ModelSpec> default_roster();
// degree baseline vs property features only (used by the regression sweep).
std::vector<ModelSpec> fast_roster();

std::vector<ModelSpec> parse_roster(const nlohmann::json& doc);
nlohmann::json roster_to_json(std::span<const ModelSpec> roster);

std::unique_ptr<ModelRunner> make_runner(const PreparedDataset& dataset,
                                         const ModelSpec& spec);

struct GapMeasurement {
    std::vector<ResultRecord> records;
    std::map<std::string, ModelResult> model_results;
    std::vector<GapRecord> gaps;
    EffectivenessReport report;
};

// Runs risk assessment for every roster model, selects the best gap per info
// type against that type's unique baseline, and computes effectiveness.
GapMeasurement measure_gaps(const PreparedDataset& dataset,
                            std::span<const ModelSpec> roster, int k,
                            std::uint64_t seed,
                            Metric metric = Metric::accuracy);

} // namespace graphmark

#endif // GRAPHMARK_EVALUATION_HPP
