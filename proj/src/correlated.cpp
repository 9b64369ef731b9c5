#include "graphmark/correlated.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "graphmark/errors.hpp"
#include "graphmark/rng.hpp"

namespace graphmark {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

double sum_r_squared(const CorrelationSpec& spec) {
    double total = 0.0;
    for (const auto& p : spec.properties) total += p.target_r * p.target_r;
    return total;
}

} // namespace

void validate_spec(const CorrelationSpec& spec) {
    if (spec.properties.empty())
        throw spec_error("constraint violation: need at least one property");
    if (spec.label_classes < 2)
        throw spec_error("constraint violation: label_classes = " +
                         std::to_string(spec.label_classes) + ", need >= 2");
    if (!(spec.sigma_y > 0.0))
        throw spec_error("constraint violation: sigma_y = " +
                         std::to_string(spec.sigma_y) + ", need > 0");
    if (spec.sample_count < 2)
        throw spec_error("constraint violation: sample_count = " +
                         std::to_string(spec.sample_count) + ", need >= 2");
    for (std::size_t k = 0; k < spec.properties.size(); ++k) {
        const auto& p = spec.properties[k];
        if (p.target_r < -1.0 || p.target_r > 1.0)
            throw spec_error("constraint violation: target_r[" +
                             std::to_string(k + 1) + "] = " +
                             std::to_string(p.target_r) + " outside [-1, 1]");
        if (const auto* g = std::get_if<GaussianFamily>(&p.family)) {
            if (!(g->stddev > 0.0))
                throw spec_error("constraint violation: property " +
                                 std::to_string(k + 1) +
                                 " Gaussian stddev must be > 0, got " +
                                 std::to_string(g->stddev));
        } else {
            const auto& u = std::get<UniformFamily>(p.family);
            if (!(u.lo < u.hi))
                throw spec_error("constraint violation: property " +
                                 std::to_string(k + 1) +
                                 " Uniform needs a < b, got [" +
                                 std::to_string(u.lo) + ", " +
                                 std::to_string(u.hi) + "]");
        }
    }
    double rr = sum_r_squared(spec);
    if (rr > 1.0 + 1e-12)
        throw spec_error("constraint violation: sum of squared target "
                         "correlations = " + std::to_string(rr) +
                         " exceeds 1");
}

LatentMatrix sample_latents(const CorrelationSpec& spec, std::uint64_t seed) {
    std::size_t count = spec.properties.size() + 1;
    std::size_t n = static_cast<std::size_t>(spec.sample_count);
    LatentMatrix out;
    out.latents.assign(count, std::vector<double>(n));

    for (std::size_t k = 0; k < count; ++k) {
        Rng rng(derive_seed(seed, k));
        auto& seq = out.latents[k];
        const DistributionFamily& family =
            k == 0 ? spec.residual_family : spec.properties[k - 1].family;
        bool gaussian = std::holds_alternative<GaussianFamily>(family);
        if (gaussian) {
            for (auto& v : seq) v = rng.normal();
        } else {
            for (auto& v : seq) v = rng.uniform(-kSqrt3, kSqrt3);
        }
    }
    return out;
}

std::vector<std::vector<double>> realize_properties(
    const CorrelationSpec& spec, const LatentMatrix& latents) {
    if (latents.latents.size() != spec.properties.size() + 1)
        throw internal_error("latent count does not match spec");
    std::vector<std::vector<double>> out(spec.properties.size());
    for (std::size_t k = 0; k < spec.properties.size(); ++k) {
        const auto& latent = latents.latents[k + 1];
        out[k].resize(latent.size());
        double center, scale;
        if (const auto* g = std::get_if<GaussianFamily>(&spec.properties[k].family)) {
            center = g->mean;
            scale = g->stddev;
        } else {
            const auto& u = std::get<UniformFamily>(spec.properties[k].family);
            center = 0.5 * (u.lo + u.hi);
            scale = (u.hi - u.lo) / std::sqrt(12.0);
        }
        for (std::size_t i = 0; i < latent.size(); ++i)
            out[k][i] = center + scale * latent[i];
    }
    return out;
}

std::vector<double> compose_label_variable(const CorrelationSpec& spec,
                                           const LatentMatrix& latents) {
    if (latents.latents.size() != spec.properties.size() + 1)
        throw internal_error("latent count does not match spec");
    double residual = 1.0 - sum_r_squared(spec);
    double residual_coef = residual > 0.0 ? std::sqrt(residual) : 0.0;

    std::size_t n = latents.latents[0].size();
    std::vector<double> y(n, 0.0);
    for (std::size_t k = 0; k < spec.properties.size(); ++k) {
        double r = spec.properties[k].target_r;
        const auto& latent = latents.latents[k + 1];
        for (std::size_t i = 0; i < n; ++i) y[i] += r * latent[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = spec.sigma_y * (y[i] + residual_coef * latents.latents[0][i]);
    }
    return y;
}

std::vector<int> discretize_labels(std::span<const double> y, int classes) {
    if (y.size() < 2)
        throw spec_error("discretize_labels: need at least 2 samples");
    if (classes < 2)
        throw spec_error("discretize_labels: class count must be >= 2, got " +
                         std::to_string(classes));
    auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
    double lo = *lo_it, hi = *hi_it;
    if (lo == hi)
        throw data_error("discretize_labels: degenerate input, all values "
                         "equal " + std::to_string(lo));
    std::vector<int> labels(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        double norm = (y[i] - lo) / (hi - lo);
        int label = static_cast<int>(std::floor(norm * classes));
        labels[i] = std::min(label, classes - 1);
    }
    return labels;
}

CorrelatedTable generate_correlated_table(const CorrelationSpec& spec,
                                          std::uint64_t seed) {
    validate_spec(spec);
    auto latents = sample_latents(spec, seed);
    CorrelatedTable table;
    table.property_targets = realize_properties(spec, latents);
    table.continuous_label = compose_label_variable(spec, latents);
    table.labels = discretize_labels(table.continuous_label, spec.label_classes);
    return table;
}

void write_table_csv(const CorrelatedTable& table, std::ostream& out) {
    std::size_t k_count = table.property_targets.size();
    for (std::size_t k = 0; k < k_count; ++k) out << "p_" << (k + 1) << ",";
    out << "y_cont,label\n";
    out.precision(17);
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
        for (std::size_t k = 0; k < k_count; ++k)
            out << table.property_targets[k][i] << ",";
        out << table.continuous_label[i] << "," << table.labels[i] << "\n";
    }
}

} // namespace graphmark
