#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"

#include "graphmark/classifiers.hpp"
#include "graphmark/cross_validation.hpp"
#include "graphmark/errors.hpp"
#include "graphmark/evaluation.hpp"
#include "graphmark/rng.hpp"

#include "oracles.hpp"

using namespace graphmark;
namespace gt = graphmark::testing;

namespace {

// Class 0: sparse paths, class 1: complete graphs. Separable by average
// degree alone. Sizes cycle deterministically so every fold sees every
// size (WL colors of complete graphs are size-specific).
PreparedDataset degree_separable_toy(int per_class) {
    std::vector<Graph> graphs;
    std::vector<int> labels;
    for (int i = 0; i < per_class; ++i) {
        graphs.push_back(make_path(6 + i % 4));
        labels.push_back(0);
    }
    for (int i = 0; i < per_class; ++i) {
        graphs.push_back(make_complete(6 + i % 4));
        labels.push_back(1);
    }
    return PreparedDataset::prepare("toy", std::move(graphs),
                                    std::move(labels));
}

} // namespace

TEST_CASE("stratified k-fold balance and determinism") {
    std::vector<int> labels;
    for (int i = 0; i < 100; ++i) labels.push_back(i < 50 ? 0 : 1);
    auto plan = stratified_kfold(labels, 10, 3);
    for (int fold = 0; fold < 10; ++fold) {
        auto idx = plan.fold_indices(fold);
        CHECK(idx.size() == 10);
        int ones = 0;
        for (int i : idx) ones += labels[static_cast<std::size_t>(i)];
        CHECK(ones == 5);
    }

    auto again = stratified_kfold(labels, 10, 3);
    CHECK(again.assignments == plan.assignments);
    auto different = stratified_kfold(labels, 10, 4);
    CHECK(different.assignments != plan.assignments);

    std::vector<int> tiny{0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS(stratified_kfold(tiny, 10, 1), spec_error);
}

TEST_CASE("stratification stays within one sample of global proportions") {
    Rng rng(61);
    std::vector<int> labels;
    for (int i = 0; i < 173; ++i) labels.push_back(rng.uniform_int(0, 2));
    for (int c = 0; c < 3; ++c)
        while (std::count(labels.begin(), labels.end(), c) < 5)
            labels.push_back(c);
    auto plan = stratified_kfold(labels, 5, 9);
    std::map<int, int> class_total;
    for (int l : labels) class_total[l] += 1;
    for (int fold = 0; fold < 5; ++fold) {
        std::map<int, int> in_fold;
        for (int i : plan.fold_indices(fold))
            in_fold[labels[static_cast<std::size_t>(i)]] += 1;
        for (const auto& [label, total] : class_total) {
            double expected = static_cast<double>(total) / 5.0;
            CHECK(std::abs(in_fold[label] - expected) <= 1.0);
        }
    }
}

TEST_CASE("hypergrid expands in deterministic order") {
    HyperGrid grid;
    grid.values["alpha"] = {0.001, 0.1};
    grid.values["wl_h"] = {1, 2, 3};
    auto points = grid.points();
    REQUIRE(points.size() == 6);
    CHECK(points[0].at("alpha") == 0.001);
    CHECK(points[0].at("wl_h") == 1);
    CHECK(points[5].at("alpha") == 0.1);
    CHECK(points[5].at("wl_h") == 3);

    HyperGrid empty;
    CHECK(empty.points().size() == 1);
}

TEST_CASE("degree baseline separates degree-separable classes") {
    auto toy = degree_separable_toy(30);
    auto roster = fast_roster();
    auto runner = make_runner(toy, roster[0]);
    auto result = run_risk_assessment(*runner, toy.labels, toy.class_count,
                                      roster[0].grid, 10, 5);
    CHECK(result.mean_accuracy >= 0.99);
}

TEST_CASE("constant features fall back to the majority class") {
    std::vector<Graph> graphs;
    std::vector<int> labels;
    for (int i = 0; i < 40; ++i) {
        graphs.push_back(make_cycle(6));
        labels.push_back(i < 28 ? 0 : 1); // 70/30
    }
    auto ds = PreparedDataset::prepare("const", std::move(graphs),
                                       std::move(labels));
    Eigen::MatrixXd x(40, 1);
    for (int i = 0; i < 40; ++i) x(i, 0) = 6.0;
    FeatureClassifier clf;
    FeatureModelConfig config;
    clf.fit(x, ds.labels, 2, config);
    CHECK(clf.degenerate_features());
    auto predictions = clf.predict(x);
    for (int p : predictions) CHECK(p == 0);
}

TEST_CASE("risk assessment on shuffled labels hovers at chance") {
    Rng rng(71);
    std::vector<Graph> graphs;
    std::vector<int> labels;
    for (int i = 0; i < 300; ++i) {
        graphs.push_back(gt::random_graph(rng, rng.uniform_int(8, 20),
                                          rng.uniform(0.2, 0.5)));
        labels.push_back(i % 2);
    }
    rng.shuffle(labels);
    auto ds = PreparedDataset::prepare("shuffled", std::move(graphs),
                                       std::move(labels));
    auto roster = fast_roster();
    auto runner = make_runner(ds, roster[1]);
    auto result = run_risk_assessment(*runner, ds.labels, ds.class_count,
                                      roster[1].grid, 10, 13);
    CHECK(result.mean_accuracy > 0.40);
    CHECK(result.mean_accuracy < 0.60);
}

TEST_CASE("risk assessment is deterministic") {
    auto toy = degree_separable_toy(15);
    auto roster = fast_roster();
    auto r1 = make_runner(toy, roster[1]);
    auto r2 = make_runner(toy, roster[1]);
    auto a = run_risk_assessment(*r1, toy.labels, toy.class_count,
                                 roster[1].grid, 5, 17);
    auto b = run_risk_assessment(*r2, toy.labels, toy.class_count,
                                 roster[1].grid, 5, 17);
    CHECK(a.fold_accuracy == b.fold_accuracy);
    CHECK(a.selected == b.selected);
}

TEST_CASE("kernel ridge reproduces training labels on the identity kernel") {
    Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(6, 6);
    std::vector<int> y{0, 1, 2, 0, 1, 2};
    KernelRidge ridge;
    ridge.fit(identity, y, 3, 1e-9);
    auto predictions = ridge.predict(identity);
    CHECK(predictions == y);

    CHECK_THROWS_AS(ridge.fit(identity, y, 3, 0.0), spec_error);
}

TEST_CASE("WL + ridge solves the degree-separable toy set end to end") {
    auto toy = degree_separable_toy(20);
    std::vector<ModelSpec> roster = default_roster();
    auto runner = make_runner(toy, roster[2]); // wl_kernel
    auto result = run_risk_assessment(*runner, toy.labels, toy.class_count,
                                      roster[2].grid, 5, 23);
    CHECK(result.mean_accuracy >= 0.99);
}

TEST_CASE("compute_auc") {
    std::vector<double> perfect{0.1, 0.2, 0.8, 0.9};
    std::vector<int> labels{0, 0, 1, 1};
    CHECK(compute_auc(perfect, labels) == doctest::Approx(1.0));

    std::vector<double> scores{0.1, 0.4, 0.35, 0.8};
    CHECK(compute_auc(scores, labels) == doctest::Approx(0.75));

    Rng rng(83);
    std::vector<double> random_scores(1000);
    std::vector<int> random_labels(1000);
    for (int i = 0; i < 1000; ++i) {
        random_scores[static_cast<std::size_t>(i)] = rng.uniform01();
        random_labels[static_cast<std::size_t>(i)] = i % 2;
    }
    CHECK(compute_auc(random_scores, random_labels) ==
          doctest::Approx(0.5).epsilon(0.1));

    std::vector<int> single{1, 1, 1, 1};
    CHECK_THROWS_AS(compute_auc(perfect, single), spec_error);
}

TEST_CASE("measure_gaps produces a full report on the toy set") {
    auto toy = degree_separable_toy(25);
    auto roster = fast_roster();
    auto measurement = measure_gaps(toy, roster, 5, 31);
    CHECK(measurement.records.size() == 2);
    REQUIRE(measurement.gaps.size() == 1);
    CHECK(measurement.gaps[0].baseline.method == "baseline_degree");
    CHECK(measurement.report.class_count == 2);
    // Both methods solve the toy set, so the gap is tiny.
    CHECK(std::abs(measurement.gaps[0].delta) <= 0.05);

    // Roster sanity: duplicate baselines rejected.
    auto bad = roster;
    bad[1].baseline = true;
    CHECK_THROWS_AS(measure_gaps(toy, bad, 5, 31), spec_error);
}

TEST_CASE("roster JSON round-trip and validation") {
    auto roster = default_roster();
    auto doc = roster_to_json(roster);
    auto parsed = parse_roster(doc);
    REQUIRE(parsed.size() == roster.size());
    for (std::size_t i = 0; i < roster.size(); ++i) {
        CHECK(parsed[i].name == roster[i].name);
        CHECK(parsed[i].kind == roster[i].kind);
        CHECK(parsed[i].baseline == roster[i].baseline);
        CHECK(parsed[i].grid.values == roster[i].grid.values);
    }

    nlohmann::json bad{{"models", nlohmann::json::array(
                                      {{{"kind", "not_a_model"}}})}};
    CHECK_THROWS_WITH_AS(parse_roster(bad), doctest::Contains("unknown roster"),
                         spec_error);
}
