#include "graphmark/properties.hpp"

#include <string>

#include "graphmark/errors.hpp"
#include "graphmark/parallel.hpp"

namespace graphmark {

namespace {

constexpr std::array<std::string_view, 8> kPropertyNames = {
    "nodes", "edges", "avg_degree", "avg_cc", "cyc3", "cyc4", "cyc5", "cyc6"};

// Flat adjacency matrix for O(1) edge tests during enumeration; only built
// for graphs small enough that n^2 bytes is cheap.
class AdjacencyLookup {
public:
    explicit AdjacencyLookup(const Graph& g) : g_(g), n_(g.node_count()) {
        if (n_ <= 2048) {
            matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
            for (const auto& [u, v] : g.edges()) {
                matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
                matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
            }
        }
    }

    bool operator()(int u, int v) const {
        if (!matrix_.empty())
            return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
        return g_.has_edge(u, v);
    }

private:
    const Graph& g_;
    int n_;
    std::vector<char> matrix_;
};

} // namespace

std::string_view property_name(PropertyName p) {
    return kPropertyNames[static_cast<std::size_t>(p)];
}

std::optional<PropertyName> parse_property(std::string_view name) {
    for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
        if (kPropertyNames[i] == name) return kAllProperties[i];
    }
    return std::nullopt;
}

double PropertyVector::value(PropertyName p) const {
    switch (p) {
        case PropertyName::nodes: return nodes;
        case PropertyName::edges: return edges;
        case PropertyName::avg_degree: return avg_degree;
        case PropertyName::avg_cc: return avg_cc;
        case PropertyName::cyc3: return static_cast<double>(cyc3);
        case PropertyName::cyc4: return static_cast<double>(cyc4);
        case PropertyName::cyc5: return static_cast<double>(cyc5);
        case PropertyName::cyc6: return static_cast<double>(cyc6);
    }
    throw internal_error("unknown property");
}

double average_clustering(const Graph& g) {
    AdjacencyLookup adjacent(g);
    double total = 0.0;
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        int d = static_cast<int>(nbrs.size());
        if (d < 2) continue;
        std::int64_t links = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (adjacent(nbrs[i], nbrs[j])) ++links;
        total += 2.0 * static_cast<double>(links) /
                 (static_cast<double>(d) * (d - 1));
    }
    return total / g.node_count();
}

std::array<std::int64_t, 4> cycle_census(const Graph& g, int max_k) {
    if (max_k < 3 || max_k > 6) {
        throw spec_error("cycle length must be in {3,4,5,6}, got " +
                         std::to_string(max_k));
    }
    AdjacencyLookup adjacent(g);
    std::array<std::int64_t, 4> counts{0, 0, 0, 0};

    int n = g.node_count();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(max_k));

    // Iterative DFS over paths rooted at r that only visit ids > r.
    // A closure back to r with path[1] < new node yields each cycle once.
    struct Frame {
        int node;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int r = 0; r < n; ++r) {
        path.assign(1, r);
        on_path[r] = 1;
        stack.assign(1, {r, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& nbrs = g.neighbors(fr.node);
            if (fr.next >= nbrs.size()) {
                on_path[fr.node] = 0;
                path.pop_back();
                stack.pop_back();
                continue;
            }
            int v = nbrs[fr.next++];
            if (v <= r || on_path[v]) continue;
            int len = static_cast<int>(path.size()) + 1;
            if (len >= 3 && path[1] < v && adjacent(v, r)) {
                ++counts[static_cast<std::size_t>(len - 3)];
            }
            if (len < max_k) {
                path.push_back(v);
                on_path[v] = 1;
                stack.push_back({v, 0});
            }
        }
    }
    return counts;
}

std::int64_t count_cycles(const Graph& g, int k) {
    if (k < 3 || k > 6) {
        throw spec_error("cycle length must be in {3,4,5,6}, got " +
                         std::to_string(k));
    }
    return cycle_census(g, k)[static_cast<std::size_t>(k - 3)];
}

PropertyVector extract_properties(const Graph& g) {
    PropertyVector p;
    p.nodes = g.node_count();
    p.edges = g.edge_count();
    p.avg_degree = g.average_degree();
    p.avg_cc = average_clustering(g);
    auto cycles = cycle_census(g, 6);
    p.cyc3 = cycles[0];
    p.cyc4 = cycles[1];
    p.cyc5 = cycles[2];
    p.cyc6 = cycles[3];
    return p;
}

std::array<PropertySequence, 8> property_sequences(
    const std::vector<Graph>& graphs, int jobs) {
    if (graphs.empty()) throw spec_error("empty dataset");
    std::vector<PropertyVector> vectors(graphs.size());
    parallel_for(jobs, graphs.size(),
                 [&](std::size_t i) { vectors[i] = extract_properties(graphs[i]); });

    std::array<PropertySequence, 8> out;
    for (std::size_t k = 0; k < kAllProperties.size(); ++k) {
        out[k].property = kAllProperties[k];
        out[k].values.resize(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out[k].values[i] = vectors[i].value(kAllProperties[k]);
    }
    return out;
}

} // namespace graphmark
