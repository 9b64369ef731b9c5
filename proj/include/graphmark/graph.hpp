#ifndef GRAPHMARK_GRAPH_HPP
#define GRAPHMARK_GRAPH_HPP

#include <utility>
#include <vector>

namespace graphmark {

// Immutable simple undirected graph. Node ids are 0..node_count-1.
// Edges are normalized to (min, max), deduplicated, and stored sorted,
// so equal graphs have identical internal state and all downstream
// computations are deterministic.
class Graph {
public:
    Graph(int node_count, std::vector<std::pair<int, int>> edge_list);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted unique edges with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Neighbor ids in ascending order.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;

    double average_degree() const {
        return 2.0 * edge_count() / node_count();
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Small constructors used by generators and tests.
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_edgeless(int n);

} // namespace graphmark

#endif // GRAPHMARK_GRAPH_HPP
