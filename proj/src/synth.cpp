#include "graphmark/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphmark/errors.hpp"
#include "graphmark/metrics.hpp"
#include "graphmark/parallel.hpp"
#include "graphmark/rng.hpp"

namespace graphmark {

namespace {

Graph er_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

// Exactly m edges: a `planted_fraction` share goes into disjoint cliques of
// size clique_size (last group may be a partial clique), the rest is uniform
// random fill over free pairs.
Graph planted_clique_graph(int n, long m, int clique_size,
                           double planted_fraction, Rng& rng) {
    std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    auto add_edge = [&](int u, int v) {
        present[static_cast<std::size_t>(u) * n + v] = 1;
        present[static_cast<std::size_t>(v) * n + u] = 1;
        edges.emplace_back(u, v);
    };

    long budget = m;
    long clique_budget = std::lround(planted_fraction * static_cast<double>(m));
    clique_budget = std::clamp<long>(clique_budget, 0, m);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    for (int pos = 0; pos < n && clique_budget > 0; pos += clique_size) {
        int group = std::min(clique_size, n - pos);
        for (int i = 0; i < group && clique_budget > 0; ++i) {
            for (int j = i + 1; j < group && clique_budget > 0; ++j) {
                add_edge(order[pos + i], order[pos + j]);
                --clique_budget;
                --budget;
            }
        }
    }

    // Random fill; rejection sampling with a dense fallback.
    long attempts_left = 200 * (budget + 1);
    while (budget > 0 && attempts_left > 0) {
        --attempts_left;
        int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 1);
        if (u == v || present[static_cast<std::size_t>(u) * n + v]) continue;
        add_edge(std::min(u, v), std::max(u, v));
        --budget;
    }
    if (budget > 0) {
        std::vector<std::pair<int, int>> free_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!present[static_cast<std::size_t>(i) * n + j])
                    free_pairs.emplace_back(i, j);
        rng.shuffle(free_pairs);
        for (std::size_t i = 0; budget > 0 && i < free_pairs.size(); ++i) {
            add_edge(free_pairs[i].first, free_pairs[i].second);
            --budget;
        }
    }
    return Graph(n, std::move(edges));
}

int draw_node_count(const GeneratorConfig& config, Rng& rng) {
    if (config.node_min < 1 || config.node_min > config.node_max)
        throw spec_error("invalid node count range [" +
                         std::to_string(config.node_min) + ", " +
                         std::to_string(config.node_max) + "]");
    return rng.uniform_int(config.node_min, config.node_max);
}

} // namespace

std::string_view to_string(SynthKind kind) {
    return kind == SynthKind::syn_degree ? "syn-degree" : "syn-cc";
}

std::optional<SynthKind> parse_synth_kind(std::string_view s) {
    if (s == "syn-degree" || s == "syndegree") return SynthKind::syn_degree;
    if (s == "syn-cc" || s == "syncc") return SynthKind::syn_cc;
    return std::nullopt;
}

double resolve_tolerance(const GeneratorConfig& config, SynthKind kind) {
    if (config.tolerance) {
        if (!(*config.tolerance > 0.0))
            throw spec_error("realization tolerance must be > 0");
        return *config.tolerance;
    }
    return kind == SynthKind::syn_degree ? 0.5 : 0.05;
}

UniformFamily resolve_target_family(const GeneratorConfig& config,
                                    SynthKind kind) {
    if (config.target_family) return *config.target_family;
    if (kind == SynthKind::syn_degree) return UniformFamily{3.0, 13.0};
    return UniformFamily{0.15, 0.6};
}

PropertyName controlled_property(SynthKind kind) {
    return kind == SynthKind::syn_degree ? PropertyName::avg_degree
                                         : PropertyName::avg_cc;
}

Graph graph_for_degree_target(int n, double d_target,
                              const GeneratorConfig& config,
                              std::uint64_t seed) {
    if (n < 2)
        throw spec_error("degree target needs at least 2 nodes, got " +
                         std::to_string(n));
    if (!(d_target > 0.0) || d_target > static_cast<double>(n - 1))
        throw spec_error("infeasible degree target " +
                         std::to_string(d_target) + " for n = " +
                         std::to_string(n) + " (need 0 < d <= n-1)");
    double eps = resolve_tolerance(config, SynthKind::syn_degree);
    double p = d_target / (n - 1);

    std::optional<Graph> best;
    double best_err = 0.0;
    for (int attempt = 0; attempt < std::max(1, config.max_retries); ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        Graph g = er_graph(n, p, rng);
        double err = std::abs(g.average_degree() - d_target);
        if (!best || err < best_err) {
            best_err = err;
            best = std::move(g);
        }
        if (best_err <= eps) break;
    }
    return *std::move(best);
}

Graph graph_for_cc_target(double cc_target, double degree_level,
                          const GeneratorConfig& config, std::uint64_t seed) {
    if (cc_target < 0.0 || cc_target > 1.0)
        throw spec_error("clustering target " + std::to_string(cc_target) +
                         " outside [0, 1]");
    if (!(degree_level > 0.0))
        throw spec_error("degree level must be > 0, got " +
                         std::to_string(degree_level));

    Rng node_rng(derive_seed(seed, 0));
    int n = draw_node_count(config, node_rng);
    if (degree_level > static_cast<double>(n - 1))
        throw spec_error("degree level " + std::to_string(degree_level) +
                         " infeasible for n = " + std::to_string(n));
    long m = std::lround(0.5 * degree_level * n);
    m = std::clamp<long>(m, 1, static_cast<long>(n) * (n - 1) / 2);
    int clique_size = std::max(3, static_cast<int>(std::lround(degree_level)) + 1);
    double eps = resolve_tolerance(config, SynthKind::syn_cc);

    std::optional<Graph> best;
    double best_err = 0.0;
    double best_cc = 0.0;
    double lo = 0.0, hi = 1.0;
    // The knob is quantized to edge-budget steps of 1/m and each probe is a
    // fresh realization, so once the bracket tightens below the quantum we
    // re-widen it and keep resampling around the boundary.
    double quantum = 1.0 / static_cast<double>(m);
    int retries = std::max(2, config.max_retries);
    for (int iter = 0; iter < retries; ++iter) {
        double knob = iter == 0 ? 0.0 : iter == 1 ? 1.0 : 0.5 * (lo + hi);
        Rng rng(derive_seed(seed, 16 + static_cast<std::uint64_t>(iter)));
        Graph g = planted_clique_graph(n, m, clique_size, knob, rng);
        double cc = average_clustering(g);
        double err = std::abs(cc - cc_target);
        if (!best || err < best_err) {
            best_err = err;
            best_cc = cc;
            best = std::move(g);
        }
        if (best_err <= eps) return *std::move(best);
        if (cc < cc_target)
            lo = knob;
        else
            hi = knob;
        if (hi - lo < quantum) {
            lo = std::max(0.0, knob - 2.0 * quantum);
            hi = std::min(1.0, knob + 2.0 * quantum);
        }
    }
    throw spec_error("unreachable clustering target " +
                     std::to_string(cc_target) + " (closest realized " +
                     std::to_string(best_cc) + ", off by " +
                     std::to_string(best_err) + " > tolerance " +
                     std::to_string(eps) + " after " +
                     std::to_string(retries) + " attempts)");
}

SyntheticDataset build_synthetic_dataset(SynthKind kind, double r,
                                         int sample_count, int classes,
                                         GeneratorConfig config, int jobs) {
    SyntheticDataset ds;
    ds.kind = kind;
    ds.config = config;
    ds.spec.properties = {PropertySpec{resolve_target_family(config, kind), r}};
    ds.spec.label_classes = classes;
    ds.spec.sigma_y = 1.0;
    ds.spec.sample_count = sample_count;
    // Bounded residual keeps the min-max label split near the median.
    ds.spec.residual_family = UniformFamily{0.0, 1.0};
    validate_spec(ds.spec);

    CorrelatedTable table =
        generate_correlated_table(ds.spec, derive_seed(config.seed, 0));

    std::size_t n_samples = static_cast<std::size_t>(sample_count);
    std::vector<std::optional<Graph>> graphs(n_samples);
    parallel_for(jobs, n_samples, [&](std::size_t i) {
        std::uint64_t graph_seed = derive_seed(config.seed, 1 + i);
        double target = table.property_targets[0][i];
        if (kind == SynthKind::syn_degree) {
            Rng rng(derive_seed(graph_seed, 0));
            int n = draw_node_count(config, rng);
            graphs[i] = graph_for_degree_target(n, target, config,
                                                derive_seed(graph_seed, 1));
        } else {
            graphs[i] = graph_for_cc_target(target, config.degree_level,
                                            config, graph_seed);
        }
    });

    ds.graphs.reserve(n_samples);
    for (auto& g : graphs) ds.graphs.push_back(*std::move(g));
    ds.labels = table.labels;
    ds.target_properties = std::move(table.property_targets);
    ds.realized_properties = property_sequences(ds.graphs, jobs);
    return ds;
}

RealizationReport verify_realized_correlation(const SyntheticDataset& ds,
                                              PropertyName property) {
    RealizationReport report;
    report.property = property;
    report.target_r = property == controlled_property(ds.kind)
                          ? ds.spec.properties[0].target_r
                          : 0.0;
    std::vector<double> y(ds.labels.begin(), ds.labels.end());
    report.realized_r =
        pearson(sequence_for(ds.realized_properties, property), y);
    if (report.realized_r && report.target_r != 0.0)
        report.attenuation = *report.realized_r / report.target_r;
    return report;
}

RealizationReport verify_realized_correlation(const SyntheticDataset& ds,
                                              std::string_view property) {
    auto parsed = parse_property(property);
    if (!parsed)
        throw spec_error("unknown property '" + std::string(property) + "'");
    return verify_realized_correlation(ds, *parsed);
}

} // namespace graphmark
