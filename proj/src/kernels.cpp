#include "graphmark/kernels.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "graphmark/errors.hpp"

namespace graphmark {

namespace {

using SparseCounts = std::vector<std::pair<int, double>>; // sorted by key

double sparse_dot(const SparseCounts& a, const SparseCounts& b) {
    double total = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (a[i].first > b[j].first) {
            ++j;
        } else {
            total += a[i].second * b[j].second;
            ++i;
            ++j;
        }
    }
    return total;
}

SparseCounts count_values(const std::vector<int>& values) {
    std::map<int, double> counts;
    for (int v : values) counts[v] += 1.0;
    return SparseCounts(counts.begin(), counts.end());
}

void accumulate_gram(Eigen::MatrixXd& K,
                     const std::vector<SparseCounts>& features) {
    auto n = static_cast<Eigen::Index>(features.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            double v = sparse_dot(features[static_cast<std::size_t>(i)],
                                  features[static_cast<std::size_t>(j)]);
            K(i, j) += v;
            if (i != j) K(j, i) += v;
        }
    }
}

} // namespace

Eigen::MatrixXd wl_kernel(std::span<const Graph> graphs, int iterations) {
    if (iterations < 0)
        throw spec_error("WL iteration count must be >= 0");
    std::size_t n = graphs.size();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));

    // Iteration 0: degrees, compressed through a shared dictionary.
    std::vector<std::vector<int>> colors(n);
    {
        std::map<int, int> degree_ids;
        for (std::size_t g = 0; g < n; ++g) {
            colors[g].resize(static_cast<std::size_t>(graphs[g].node_count()));
            for (int v = 0; v < graphs[g].node_count(); ++v) {
                auto [it, _] = degree_ids.emplace(
                    graphs[g].degree(v), static_cast<int>(degree_ids.size()));
                colors[g][static_cast<std::size_t>(v)] = it->second;
            }
        }
    }

    std::vector<SparseCounts> features(n);
    for (std::size_t g = 0; g < n; ++g) features[g] = count_values(colors[g]);
    accumulate_gram(K, features);

    for (int iter = 1; iter <= iterations; ++iter) {
        // Relabel (own color, sorted neighbor colors) through a fresh
        // dictionary; the map ordering makes ids deterministic.
        std::map<std::pair<int, std::vector<int>>, int> dictionary;
        std::vector<std::vector<int>> next(n);
        for (std::size_t g = 0; g < n; ++g) {
            const Graph& graph = graphs[g];
            next[g].resize(static_cast<std::size_t>(graph.node_count()));
            for (int v = 0; v < graph.node_count(); ++v) {
                std::vector<int> neighborhood;
                neighborhood.reserve(graph.neighbors(v).size());
                for (int u : graph.neighbors(v))
                    neighborhood.push_back(colors[g][static_cast<std::size_t>(u)]);
                std::sort(neighborhood.begin(), neighborhood.end());
                auto key = std::make_pair(colors[g][static_cast<std::size_t>(v)],
                                          std::move(neighborhood));
                auto [it, _] = dictionary.emplace(
                    std::move(key), static_cast<int>(dictionary.size()));
                next[g][static_cast<std::size_t>(v)] = it->second;
            }
        }
        colors = std::move(next);
        for (std::size_t g = 0; g < n; ++g) features[g] = count_values(colors[g]);
        accumulate_gram(K, features);
    }
    return K;
}

Eigen::MatrixXd sp_kernel(std::span<const Graph> graphs) {
    std::size_t n = graphs.size();
    std::vector<SparseCounts> histograms(n);

    for (std::size_t g = 0; g < n; ++g) {
        const Graph& graph = graphs[g];
        std::map<int, double> hist;
        std::vector<int> dist(static_cast<std::size_t>(graph.node_count()));
        std::deque<int> queue;
        for (int s = 0; s < graph.node_count(); ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[static_cast<std::size_t>(s)] = 0;
            queue.assign(1, s);
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : graph.neighbors(u)) {
                    if (dist[static_cast<std::size_t>(v)] >= 0) continue;
                    dist[static_cast<std::size_t>(v)] =
                        dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
            // Each unordered pair once.
            for (int t = s + 1; t < graph.node_count(); ++t)
                if (dist[static_cast<std::size_t>(t)] > 0)
                    hist[dist[static_cast<std::size_t>(t)]] += 1.0;
        }
        histograms[g] = SparseCounts(hist.begin(), hist.end());
    }

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    accumulate_gram(K, histograms);
    return K;
}

} // namespace graphmark
