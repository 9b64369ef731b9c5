#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

#include "graphmark/errors.hpp"
#include "graphmark/regression.hpp"
#include "graphmark/rng.hpp"
#include "graphmark/synth.hpp"

using namespace graphmark;

TEST_CASE("split_into_subsets partitions evenly") {
    std::vector<int> labels;
    for (int i = 0; i < 4096; ++i) labels.push_back(i % 2);
    auto subsets = split_into_subsets(labels, 10, 1);
    REQUIRE(subsets.size() == 10);
    std::set<int> seen;
    for (const auto& subset : subsets) {
        CHECK(subset.size() >= 409);
        CHECK(subset.size() <= 410);
        for (int idx : subset) CHECK(seen.insert(idx).second); // disjoint
    }
    CHECK(seen.size() == labels.size()); // union covers everything

    std::vector<int> small(40, 0);
    CHECK_THROWS_AS(split_into_subsets(small, 10, 1), spec_error);
}

TEST_CASE("dataset_features on a degenerate all-K3 subset") {
    std::vector<Graph> graphs(120, make_complete(3));
    std::vector<int> labels;
    for (int i = 0; i < 120; ++i) labels.push_back(i % 2);
    auto ds = PreparedDataset::prepare("k3s", std::move(graphs),
                                       std::move(labels));
    std::vector<int> all(120);
    for (int i = 0; i < 120; ++i) all[static_cast<std::size_t>(i)] = i;
    auto features = dataset_features(ds, all);

    // Every property is constant: stds 0, correlations flagged and encoded 0.
    for (std::size_t p = 0; p < 8; ++p) {
        CHECK(features.values[3 * p + 1] == doctest::Approx(0.0));
        CHECK(features.values[3 * p + 2] == doctest::Approx(0.0));
    }
    CHECK(features.undefined_correlations.size() == 8);
    CHECK(features.values[24] == doctest::Approx(std::log10(120.0)));
    CHECK(features.values[25] == doctest::Approx(2.0));

    // Stable order.
    auto again = dataset_features(ds, all);
    CHECK(again.values == features.values);

    // Single-class subset rejected.
    std::vector<int> evens;
    for (int i = 0; i < 120; i += 2) evens.push_back(i);
    CHECK_THROWS_AS(dataset_features(ds, evens), spec_error);
}

TEST_CASE("avg_cc correlation dominates on a Syn-CC subset") {
    GeneratorConfig config;
    config.seed = 17;
    auto synth = build_synthetic_dataset(SynthKind::syn_cc, 0.9, 512, 2,
                                         config, 2);
    auto ds = PreparedDataset::prepare("syncc", synth.graphs, synth.labels, 2);
    std::vector<int> all(512);
    for (int i = 0; i < 512; ++i) all[static_cast<std::size_t>(i)] = i;
    auto features = dataset_features(ds, all);
    double cc_corr = std::abs(features.values[3 * 3 + 2]); // avg_cc slot
    for (std::size_t p = 0; p < 8; ++p) {
        if (p == 3) continue;
        CHECK(cc_corr >= std::abs(features.values[3 * p + 2]));
    }
}

TEST_CASE("ridge recovers a linear target and ignores noise targets") {
    Rng rng(97);
    Eigen::MatrixXd x(300, 26);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = rng.normal();
    Eigen::VectorXd y = 3.0 * x.col(4).array() + 0.5;

    auto model = ridge_fit(x, y, 1e-8);
    Eigen::VectorXd fitted = ridge_predict(model, x);
    std::vector<double> fv(fitted.data(), fitted.data() + fitted.size());
    std::vector<double> yv(y.data(), y.data() + y.size());
    CHECK(pearson(fv, yv).value() >= 0.999);

    // Pure noise target: out-of-sample correlation stays near zero.
    Eigen::VectorXd noise(300);
    for (Eigen::Index i = 0; i < noise.size(); ++i) noise[i] = rng.normal();
    auto noise_model = ridge_fit(x.topRows(200), noise.head(200), 1.0);
    Eigen::VectorXd predictions = ridge_predict(noise_model, x.bottomRows(100));
    std::vector<double> pv(predictions.data(),
                           predictions.data() + predictions.size());
    std::vector<double> nv(noise.data() + 200, noise.data() + 300);
    CHECK(std::abs(pearson(pv, nv).value()) <= 0.3);

    CHECK_THROWS_AS(ridge_fit(x, y, 0.0), spec_error);
}

TEST_CASE("evaluate_regression statistics") {
    std::vector<double> targets;
    Rng rng(101);
    for (int i = 0; i < 40; ++i) targets.push_back(rng.normal());
    auto self = evaluate_regression(targets, targets, 10000, 3);
    CHECK(self.pearson == doctest::Approx(1.0));
    CHECK(self.spearman == doctest::Approx(1.0));
    CHECK(self.p_value <= 1e-4);

    std::vector<double> shuffled = targets;
    Rng shuffle_rng(5);
    shuffle_rng.shuffle(shuffled);
    auto chance = evaluate_regression(shuffled, targets, 10000, 3);
    CHECK(chance.p_value > 0.05);

    CHECK_THROWS_AS(evaluate_regression(std::vector<double>{1.0, 2.0},
                                        std::vector<double>{1.0, 2.0}, 100, 1),
                    spec_error);
}

TEST_CASE("effectiveness regression pipeline on a small sweep") {
    // Three tiny Syn-CC datasets are enough to exercise the plumbing; the
    // full nine-dataset run lives in the acceptance suite.
    GeneratorConfig config;
    std::vector<PreparedDataset> datasets;
    std::uint64_t seed = 300;
    for (double r : {0.15, 0.5, 0.85}) {
        config.seed = seed++;
        auto synth = build_synthetic_dataset(SynthKind::syn_cc, r, 600, 2,
                                             config, 2);
        datasets.push_back(PreparedDataset::prepare(
            "syncc_r" + std::to_string(r), synth.graphs, synth.labels, 2));
    }
    auto summary = run_effectiveness_regression(datasets, 10, 3, 1.0, 5, 77, 2);
    CHECK(summary.samples.size() == 30);
    CHECK(summary.repeats.size() == 3);
    CHECK(summary.fitted.size() == 30);

    // Targets must match a direct recomputation (no cached drift).
    auto roster = fast_roster();
    const auto& sample = summary.samples[0];
    auto subsets = split_into_subsets(datasets[0].labels, 10, derive_seed(77, 0));
    PreparedDataset subset;
    subset.name = "recheck";
    subset.class_count = datasets[0].class_count;
    for (int idx : subsets[0]) {
        subset.graphs.push_back(datasets[0].graphs[static_cast<std::size_t>(idx)]);
        subset.labels.push_back(datasets[0].labels[static_cast<std::size_t>(idx)]);
    }
    for (std::size_t p = 0; p < kAllProperties.size(); ++p) {
        subset.properties[p].property = kAllProperties[p];
        for (int idx : subsets[0])
            subset.properties[p].values.push_back(
                datasets[0].properties[p].values[static_cast<std::size_t>(idx)]);
    }
    auto recomputed = measure_gaps(subset, roster, 5, derive_seed(77, 10000),
                                   Metric::accuracy);
    CHECK(sample.target == doctest::Approx(recomputed.report.total));

    // Determinism of the whole pipeline.
    auto again = run_effectiveness_regression(datasets, 10, 3, 1.0, 5, 77, 1);
    CHECK(again.pearson_mean == doctest::Approx(summary.pearson_mean));
    for (std::size_t i = 0; i < summary.samples.size(); ++i)
        CHECK(again.samples[i].target ==
              doctest::Approx(summary.samples[i].target));
}

TEST_CASE("feature names are exactly 26 and ordered") {
    auto names = FeatureVector26::names();
    CHECK(names.front() == "nodes_mean");
    CHECK(names[1] == "nodes_std");
    CHECK(names[2] == "nodes_label_corr");
    CHECK(names[24] == "log10_graph_count");
    CHECK(names[25] == "class_count");
}
