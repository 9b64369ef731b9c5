#ifndef GRAPHMARK_CORRELATED_HPP
#define GRAPHMARK_CORRELATED_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

namespace graphmark {

struct GaussianFamily {
    double mean = 0.0;
    double stddev = 1.0;
};

struct UniformFamily {
    double lo = 0.0;
    double hi = 1.0;
};

using DistributionFamily = std::variant<GaussianFamily, UniformFamily>;

// One property target distribution plus its desired Pearson correlation
// with the label variable.
struct PropertySpec {
    DistributionFamily family;
    double target_r = 0.0;
};

struct CorrelationSpec {
    std::vector<PropertySpec> properties; // K >= 1
    int label_classes = 2;                // C >= 2
    double sigma_y = 1.0;
    int sample_count = 0;                 // N >= 2
    // Shape of the extra independent latent n_0 (only the family matters;
    // the latent is always unit variance). Bounded support keeps min-max
    // label discretization balanced.
    DistributionFamily residual_family = GaussianFamily{0.0, 1.0};
};

// Throws spec_error naming the offending quantity; admissibility requires
// sum of target_r^2 <= 1.
void validate_spec(const CorrelationSpec& spec);

// Unit-variance latent sequences. latents[0] is the extra independent
// latent of the label composition (standard normal); latents[k] for
// k = 1..K follows the family of property k (Gaussian -> standard normal,
// Uniform -> uniform on [-sqrt(3), sqrt(3)]).
struct LatentMatrix {
    std::vector<std::vector<double>> latents;
};

LatentMatrix sample_latents(const CorrelationSpec& spec, std::uint64_t seed);

// Property target sequences: mu + sigma * n_k per family.
std::vector<std::vector<double>> realize_properties(const CorrelationSpec& spec,
                                                    const LatentMatrix& latents);

// Continuous label variable: sigma_y (sum n_k r_k + n_0 sqrt(1 - sum r_k^2)).
std::vector<double> compose_label_variable(const CorrelationSpec& spec,
                                           const LatentMatrix& latents);

// Min-max normalize to [0,1], scale by the class count, floor, and clamp the
// top value to C-1. Throws on constant input.
std::vector<int> discretize_labels(std::span<const double> y, int classes);

struct CorrelatedTable {
    std::vector<std::vector<double>> property_targets; // K sequences
    std::vector<double> continuous_label;
    std::vector<int> labels;
};

CorrelatedTable generate_correlated_table(const CorrelationSpec& spec,
                                          std::uint64_t seed);

// CSV with columns p_1..p_K, y_cont, label.
void write_table_csv(const CorrelatedTable& table, std::ostream& out);

} // namespace graphmark

#endif // GRAPHMARK_CORRELATED_HPP
