#ifndef GRAPHMARK_SYNTH_HPP
#define GRAPHMARK_SYNTH_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "graphmark/correlated.hpp"
#include "graphmark/graph.hpp"
#include "graphmark/properties.hpp"

namespace graphmark {

enum class SynthKind { syn_degree, syn_cc };

std::string_view to_string(SynthKind kind);
std::optional<SynthKind> parse_synth_kind(std::string_view s);

struct GeneratorConfig {
    int node_min = 20;
    int node_max = 60;
    // Realization tolerance; defaults to 0.5 for degree targets and 0.05
    // for clustering targets when unset.
    std::optional<double> tolerance;
    int max_retries = 24;
    std::uint64_t seed = 0;
    // Syn-CC holds the degree parameter constant at this level.
    double degree_level = 3.0;
    // Distribution of the controlled property across the dataset; defaults
    // to Uniform(3, 13) for Syn-Degree and Uniform(0.15, 0.6) for Syn-CC.
    std::optional<UniformFamily> target_family;
};

double resolve_tolerance(const GeneratorConfig& config, SynthKind kind);
UniformFamily resolve_target_family(const GeneratorConfig& config,
                                    SynthKind kind);
PropertyName controlled_property(SynthKind kind);

// Erdos-Renyi graph with p = d_target / (n-1), resampled up to max_retries
// until the realized average degree is within tolerance; returns the best
// attempt if retries run out.
Graph graph_for_degree_target(int n, double d_target,
                              const GeneratorConfig& config,
                              std::uint64_t seed);

// Clustering-tunable generator. The edge budget m = round(n*degree_level/2)
// is fixed; a knob fraction of it is planted as disjoint cliques of size
// degree_level+1 and the rest is uniform random fill, so the average degree
// stays pinned while avg_cc sweeps from ~p to ~1. The knob is bisected until
// the realized avg_cc is within tolerance of the target.
Graph graph_for_cc_target(double cc_target, double degree_level,
                          const GeneratorConfig& config, std::uint64_t seed);

struct SyntheticDataset {
    SynthKind kind = SynthKind::syn_degree;
    std::vector<Graph> graphs;
    std::vector<int> labels;
    std::vector<std::vector<double>> target_properties; // from the table
    std::array<PropertySequence, 8> realized_properties;
    CorrelationSpec spec;
    GeneratorConfig config;
};

SyntheticDataset build_synthetic_dataset(SynthKind kind, double r,
                                         int sample_count, int classes,
                                         GeneratorConfig config, int jobs = 1);

struct RealizationReport {
    PropertyName property;
    double target_r = 0.0;                  // 0 for uncontrolled properties
    std::optional<double> realized_r;       // nullopt if sequence constant
    std::optional<double> attenuation;      // realized/target when defined
};

RealizationReport verify_realized_correlation(const SyntheticDataset& ds,
                                              PropertyName property);
RealizationReport verify_realized_correlation(const SyntheticDataset& ds,
                                              std::string_view property);

} // namespace graphmark

#endif // GRAPHMARK_SYNTH_HPP
