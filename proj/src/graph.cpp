#include "graphmark/graph.hpp"

#include <algorithm>
#include <string>

#include "graphmark/errors.hpp"

namespace graphmark {

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edge_list)
    : n_(node_count) {
    if (node_count < 1) {
        throw data_error("graph must have at least one node, got " +
                         std::to_string(node_count));
    }
    for (auto& [u, v] : edge_list) {
        if (u == v) {
            throw data_error("self-loop on node " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw data_error("edge endpoint out of range: (" +
                             std::to_string(u) + ", " + std::to_string(v) +
                             ") with node count " + std::to_string(n_));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                    edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_edgeless(int n) { return Graph(n, {}); }

} // namespace graphmark
