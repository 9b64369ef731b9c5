#ifndef GRAPHMARK_PROPERTIES_HPP
#define GRAPHMARK_PROPERTIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphmark/graph.hpp"

namespace graphmark {

// The eight per-graph statistics, in canonical order.
enum class PropertyName {
    nodes = 0,
    edges,
    avg_degree,
    avg_cc,
    cyc3,
    cyc4,
    cyc5,
    cyc6,
};

inline constexpr std::array<PropertyName, 8> kAllProperties = {
    PropertyName::nodes,  PropertyName::edges, PropertyName::avg_degree,
    PropertyName::avg_cc, PropertyName::cyc3,  PropertyName::cyc4,
    PropertyName::cyc5,   PropertyName::cyc6,
};

std::string_view property_name(PropertyName p);
std::optional<PropertyName> parse_property(std::string_view name);

struct PropertyVector {
    int nodes = 0;
    int edges = 0;
    double avg_degree = 0.0;
    double avg_cc = 0.0;
    std::int64_t cyc3 = 0;
    std::int64_t cyc4 = 0;
    std::int64_t cyc5 = 0;
    std::int64_t cyc6 = 0;

    double value(PropertyName p) const;
    bool operator==(const PropertyVector&) const = default;
};

struct PropertySequence {
    PropertyName property;
    std::vector<double> values;
};

// Mean local clustering coefficient over all nodes; nodes with degree < 2
// contribute 0 and are included in the average.
double average_clustering(const Graph& g);

// Counts of simple cycles of length exactly 3..max_k (index k-3), each cycle
// counted once. Canonical enumeration: every cycle is discovered from its
// smallest node with the smaller of its two root neighbors first.
std::array<std::int64_t, 4> cycle_census(const Graph& g, int max_k = 6);

// Simple cycles of length exactly k, k in {3,4,5,6}.
std::int64_t count_cycles(const Graph& g, int k);

PropertyVector extract_properties(const Graph& g);

// One sequence per property, aligned with the sample order of `graphs`.
std::array<PropertySequence, 8> property_sequences(
    const std::vector<Graph>& graphs, int jobs = 1);

inline const std::vector<double>& sequence_for(
    const std::array<PropertySequence, 8>& seqs, PropertyName p) {
    return seqs[static_cast<std::size_t>(p)].values;
}

} // namespace graphmark

#endif // GRAPHMARK_PROPERTIES_HPP
