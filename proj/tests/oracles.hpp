#ifndef GRAPHMARK_TEST_ORACLES_HPP
#define GRAPHMARK_TEST_ORACLES_HPP

// Brute-force reference implementations used only by tests. These stay
// independent of the library's enumeration paths: cycles are counted by
// subset + permutation enumeration and clustering by a dense triple loop.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "graphmark/graph.hpp"
#include "graphmark/rng.hpp"

namespace graphmark::testing {

inline std::vector<std::vector<int>> dense_adjacency(const Graph& g) {
    std::vector<std::vector<int>> a(
        static_cast<std::size_t>(g.node_count()),
        std::vector<int>(static_cast<std::size_t>(g.node_count()), 0));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return a;
}

// Simple cycles of length exactly k: enumerate k-subsets, fix the smallest
// element first, and count Hamiltonian orderings of the rest with the
// direction pinned by second < last.
inline std::int64_t brute_force_cycles(const Graph& g, int k) {
    auto adj = dense_adjacency(g);
    int n = g.node_count();
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::int64_t total = 0;

    std::vector<int> selector(static_cast<std::size_t>(n), 0);
    std::fill(selector.begin(), selector.begin() + k, 1);
    std::sort(selector.begin(), selector.end());
    do {
        int si = 0;
        for (int i = 0; i < n; ++i)
            if (selector[static_cast<std::size_t>(i)]) subset[si++] = i;

        std::vector<int> rest(subset.begin() + 1, subset.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.front() > rest.back()) continue; // one direction only
            bool ok = adj[static_cast<std::size_t>(subset[0])]
                         [static_cast<std::size_t>(rest.front())] != 0 &&
                      adj[static_cast<std::size_t>(rest.back())]
                         [static_cast<std::size_t>(subset[0])] != 0;
            for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
                ok = adj[static_cast<std::size_t>(rest[i])]
                        [static_cast<std::size_t>(rest[i + 1])] != 0;
            if (ok) ++total;
        } while (std::next_permutation(rest.begin(), rest.end()));
    } while (std::next_permutation(selector.begin(), selector.end()));
    return total;
}

inline double brute_force_clustering(const Graph& g) {
    auto adj = dense_adjacency(g);
    int n = g.node_count();
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nbrs;
        for (int u = 0; u < n; ++u)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                nbrs.push_back(u);
        if (nbrs.size() < 2) continue;
        int links = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                links += adj[static_cast<std::size_t>(nbrs[i])]
                            [static_cast<std::size_t>(nbrs[j])];
        total += 2.0 * links /
                 (static_cast<double>(nbrs.size()) * (nbrs.size() - 1));
    }
    return total / n;
}

// trace(A^3) / 6.
inline std::int64_t trace_triangles(const Graph& g) {
    auto a = dense_adjacency(g);
    int n = g.node_count();
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                trace += static_cast<std::int64_t>(
                             a[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)]) *
                         a[static_cast<std::size_t>(j)]
                          [static_cast<std::size_t>(k)] *
                         a[static_cast<std::size_t>(k)]
                          [static_cast<std::size_t>(i)];
    return trace / 6;
}

// (trace(A^4) - 2m - 2 sum d_i (d_i - 1)) / 8.
inline std::int64_t trace_squares(const Graph& g) {
    auto a = dense_adjacency(g);
    int n = g.node_count();
    std::vector<std::vector<std::int64_t>> a2(
        static_cast<std::size_t>(n),
        std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                a2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    static_cast<std::int64_t>(
                        a[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(k)]) *
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    std::int64_t trace4 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            trace4 += a2[static_cast<std::size_t>(i)]
                        [static_cast<std::size_t>(j)] *
                      a2[static_cast<std::size_t>(j)]
                        [static_cast<std::size_t>(i)];
    std::int64_t degree_term = 0;
    for (int v = 0; v < n; ++v) {
        std::int64_t d = g.degree(v);
        degree_term += d * (d - 1);
    }
    return (trace4 - 2 * g.edge_count() - 2 * degree_term) / 8;
}

inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

// Two disjoint triangles in one 6-node graph (the classic 1-WL twin of C6).
inline Graph two_triangles() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

} // namespace graphmark::testing

#endif // GRAPHMARK_TEST_ORACLES_HPP
