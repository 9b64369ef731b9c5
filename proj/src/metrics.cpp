#include "graphmark/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "graphmark/errors.hpp"

namespace graphmark {

namespace {

void check_compatible(const ResultRecord& a, const ResultRecord& b) {
    if (a.dataset != b.dataset)
        throw spec_error("mismatched records: datasets '" + a.dataset +
                         "' vs '" + b.dataset + "'");
    if (a.info_type != b.info_type)
        throw spec_error("mismatched records: info types differ for methods '" +
                         a.method + "' and '" + b.method + "'");
    if (a.metric != b.metric)
        throw spec_error("mismatched records: metrics differ for methods '" +
                         a.method + "' and '" + b.method + "'");
}

} // namespace

std::string_view to_string(InfoType t) { return t == InfoType::S ? "S" : "A"; }

std::string_view to_string(Metric m) {
    return m == Metric::accuracy ? "accuracy" : "auc_roc";
}

std::optional<InfoType> parse_info_type(std::string_view s) {
    if (s == "S") return InfoType::S;
    if (s == "A") return InfoType::A;
    return std::nullopt;
}

std::optional<Metric> parse_metric(std::string_view s) {
    if (s == "accuracy") return Metric::accuracy;
    if (s == "auc_roc" || s == "auc") return Metric::auc_roc;
    return std::nullopt;
}

bool is_baseline_name(std::string_view method) {
    std::string lower(method);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return lower.rfind("baseline", 0) == 0;
}

GapRecord performance_gap(const ResultRecord& graph_method,
                          const ResultRecord& baseline) {
    check_compatible(graph_method, baseline);
    GapRecord gap;
    gap.info_type = graph_method.info_type;
    gap.graph_method = graph_method;
    gap.baseline = baseline;
    gap.delta = graph_method.mean - baseline.mean;
    gap.r_star = std::min(graph_method.mean, baseline.mean);
    return gap;
}

GapRecord select_best_gap(const ResultRecord& baseline,
                          std::span<const ResultRecord> graph_methods) {
    if (graph_methods.empty())
        throw spec_error("no graph-method records for dataset '" +
                         baseline.dataset + "' type " +
                         std::string(to_string(baseline.info_type)));
    const ResultRecord* best = nullptr;
    for (const auto& record : graph_methods) {
        check_compatible(record, baseline);
        if (!best) {
            best = &record;
            continue;
        }
        double cand = std::abs(record.mean - baseline.mean);
        double cur = std::abs(best->mean - baseline.mean);
        if (cand > cur ||
            (cand == cur && (record.mean > best->mean ||
                             (record.mean == best->mean &&
                              record.method < best->method)))) {
            best = &record;
        }
    }
    return performance_gap(*best, baseline);
}

GapRecord select_best_gap(std::span<const ResultRecord> records) {
    const ResultRecord* baseline = nullptr;
    std::vector<ResultRecord> graph_methods;
    for (const auto& record : records) {
        if (is_baseline_name(record.method)) {
            if (baseline)
                throw spec_error("multiple baseline records for dataset '" +
                                 record.dataset + "' type " +
                                 std::string(to_string(record.info_type)));
            baseline = &record;
        } else {
            graph_methods.push_back(record);
        }
    }
    if (!baseline) throw spec_error("no baseline record in record set");
    return select_best_gap(*baseline, graph_methods);
}

double complexity_factor(double r_star, int class_count) {
    if (class_count < 2)
        throw spec_error("class count must be >= 2, got " +
                         std::to_string(class_count));
    return (1.0 - r_star) / (1.0 - 1.0 / class_count);
}

EffectivenessReport effectiveness(std::span<const GapRecord> gaps,
                                  int class_count,
                                  const std::string& dataset) {
    if (class_count < 2)
        throw spec_error("class count must be >= 2, got " +
                         std::to_string(class_count));
    EffectivenessReport report;
    report.dataset = dataset;
    report.class_count = class_count;
    for (const auto& gap : gaps) {
        if (report.per_type.count(gap.info_type))
            throw spec_error("more than one gap supplied for type " +
                             std::string(to_string(gap.info_type)));
        if (gap.r_star <= 0.0)
            throw spec_error("R* must be positive for effectiveness, got " +
                             std::to_string(gap.r_star));
        TypeEffect effect;
        effect.gap = gap;
        effect.lambda = complexity_factor(gap.r_star, class_count);
        effect.contribution = std::abs(gap.delta) /
                              (gap.r_star * (class_count - 1)) * effect.lambda;
        report.total += effect.contribution;
        report.per_type.emplace(gap.info_type, std::move(effect));
    }
    return report;
}

std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y) {
    if (x.size() != y.size())
        throw spec_error("pearson: length mismatch (" +
                         std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
    if (x.size() < 2) throw spec_error("pearson: need at least 2 samples");
    std::size_t n = x.size();
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

namespace {

// Average ranks, ties receive the mean of the ranks they occupy.
std::vector<double> average_ranks(std::span<const double> v) {
    std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        double mean_rank = 0.5 * (static_cast<double>(i) + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

} // namespace

std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y) {
    if (x.size() != y.size())
        throw spec_error("spearman: length mismatch");
    if (x.size() < 2) throw spec_error("spearman: need at least 2 samples");
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    return pearson(rx, ry);
}

std::map<PropertyName, std::optional<double>> property_label_correlations(
    const std::array<PropertySequence, 8>& sequences,
    std::span<const int> labels) {
    std::vector<double> y(labels.begin(), labels.end());
    std::map<PropertyName, std::optional<double>> out;
    for (const auto& seq : sequences) {
        out[seq.property] = pearson(seq.values, y);
    }
    return out;
}

std::map<PropertyName, std::optional<double>> property_label_correlations(
    const std::vector<Graph>& graphs, std::span<const int> labels, int jobs) {
    if (graphs.size() != labels.size())
        throw spec_error("labels length does not match graph count");
    return property_label_correlations(property_sequences(graphs, jobs),
                                       labels);
}

} // namespace graphmark
