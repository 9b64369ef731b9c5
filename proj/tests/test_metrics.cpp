#include <cmath>

#include "doctest.h"

#include "graphmark/errors.hpp"
#include "graphmark/metrics.hpp"
#include "graphmark/rng.hpp"

#include "oracles.hpp"

using namespace graphmark;

namespace {

ResultRecord rec(const std::string& method, InfoType type, double mean,
                 const std::string& dataset = "MUTAG") {
    ResultRecord r;
    r.dataset = dataset;
    r.method = method;
    r.info_type = type;
    r.mean = mean;
    return r;
}

} // namespace

TEST_CASE("performance gap from Table-2-style records") {
    auto gap = performance_gap(rec("GIN_S", InfoType::S, 0.8671),
                               rec("baseline_S", InfoType::S, 0.7918));
    CHECK(gap.delta == doctest::Approx(0.0753));
    CHECK(gap.r_star == doctest::Approx(0.7918));

    auto equal = performance_gap(rec("GIN_S", InfoType::S, 0.5),
                                 rec("baseline_S", InfoType::S, 0.5));
    CHECK(equal.delta == doctest::Approx(0.0));

    // Graph method worse than the baseline: signed delta is negative.
    auto worse = performance_gap(rec("GIN_A", InfoType::A, 0.7097, "PROTEINS"),
                                 rec("baseline_A", InfoType::A, 0.7424,
                                     "PROTEINS"));
    CHECK(worse.delta == doctest::Approx(-0.0327));
    CHECK(worse.r_star == doctest::Approx(0.7097));

    CHECK_THROWS_AS(performance_gap(rec("a", InfoType::S, 0.5, "X"),
                                    rec("b", InfoType::S, 0.5, "Y")),
                    spec_error);
    CHECK_THROWS_AS(performance_gap(rec("a", InfoType::S, 0.5),
                                    rec("b", InfoType::A, 0.5)),
                    spec_error);
}

TEST_CASE("select_best_gap picks the largest absolute gap") {
    auto baseline = rec("baseline_S", InfoType::S, 0.7918);
    std::vector<ResultRecord> methods{
        rec("WL-GK", InfoType::S, 0.8623),
        rec("GIN", InfoType::S, 0.8671),
        rec("GCN", InfoType::S, 0.8286),
    };
    auto best = select_best_gap(baseline, methods);
    CHECK(best.graph_method.method == "GIN");
    CHECK(best.delta == doctest::Approx(0.0753));

    // Single method is selected.
    std::vector<ResultRecord> single{rec("GIN", InfoType::S, 0.6)};
    CHECK(select_best_gap(baseline, single).graph_method.method == "GIN");

    // Equal |delta| above and below: higher mean wins.
    auto base50 = rec("baseline", InfoType::S, 0.5);
    std::vector<ResultRecord> tied{rec("below", InfoType::S, 0.4),
                                   rec("above", InfoType::S, 0.6)};
    CHECK(select_best_gap(base50, tied).graph_method.method == "above");

    CHECK_THROWS_AS(select_best_gap(baseline, {}), spec_error);
}

TEST_CASE("select_best_gap by method-name convention") {
    std::vector<ResultRecord> records{
        rec("baseline_S", InfoType::S, 0.7918),
        rec("GIN", InfoType::S, 0.8671),
        rec("WL-GK", InfoType::S, 0.8623),
    };
    auto best = select_best_gap(records);
    CHECK(best.graph_method.method == "GIN");
    CHECK(best.baseline.method == "baseline_S");

    std::vector<ResultRecord> no_base{rec("GIN", InfoType::S, 0.9)};
    CHECK_THROWS_AS(select_best_gap(no_base), spec_error);
}

TEST_CASE("complexity factor") {
    CHECK(complexity_factor(1.0, 2) == doctest::Approx(0.0));
    CHECK(complexity_factor(0.5, 2) == doctest::Approx(1.0));
    CHECK(complexity_factor(0.55, 10) == doctest::Approx(0.5));
    CHECK_THROWS_AS(complexity_factor(0.5, 1), spec_error);
}

TEST_CASE("effectiveness reproduces the MUTAG value") {
    auto gap_a = performance_gap(rec("GIN_A", InfoType::A, 0.8407),
                                 rec("baseline_A", InfoType::A, 0.8370));
    auto gap_s = performance_gap(rec("GIN_S", InfoType::S, 0.8671),
                                 rec("baseline_S", InfoType::S, 0.7918));
    std::vector<GapRecord> gaps{gap_a, gap_s};
    auto report = effectiveness(gaps, 2, "MUTAG");
    CHECK(std::abs(report.total - 0.0410) < 0.0005);
    CHECK(report.per_type.size() == 2);

    // Both deltas zero -> zero effectiveness.
    std::vector<GapRecord> zero{
        performance_gap(rec("m", InfoType::S, 0.7),
                        rec("baseline", InfoType::S, 0.7))};
    CHECK(effectiveness(zero, 2).total == doctest::Approx(0.0));

    // Same gap and R*, more classes -> smaller effectiveness.
    std::vector<GapRecord> one{
        performance_gap(rec("m", InfoType::S, 0.8),
                        rec("baseline", InfoType::S, 0.7))};
    CHECK(effectiveness(one, 2).total > effectiveness(one, 10).total);

    // Zero R* guard.
    std::vector<GapRecord> degenerate{
        performance_gap(rec("m", InfoType::S, 0.1),
                        rec("baseline", InfoType::S, 0.0))};
    CHECK_THROWS_AS(effectiveness(degenerate, 2), spec_error);
}

TEST_CASE("lambda and effectiveness monotonicity properties") {
    // P1: lambda affine decreasing in r_star; P2-P4 on the effectiveness.
    for (int classes = 2; classes <= 10; ++classes) {
        double prev = -1.0;
        for (double r_star = 1.0; r_star >= 1.0 / classes - 1e-9;
             r_star -= 0.05) {
            double lambda = complexity_factor(r_star, classes);
            CHECK(lambda > prev);
            prev = lambda;
        }
    }

    auto eff = [](double delta, double r_star, int classes) {
        std::vector<GapRecord> gaps{
            performance_gap(rec("m", InfoType::S, r_star + delta),
                            rec("baseline", InfoType::S, r_star))};
        return effectiveness(gaps, classes).total;
    };
    CHECK(eff(0.2, 0.5, 2) > eff(0.1, 0.5, 2));           // P2
    CHECK(eff(0.1, 0.4, 2) > eff(0.1, 0.6, 2));           // P3
    CHECK(eff(0.1, 0.5, 2) > eff(0.1, 0.5, 3));           // P4
}

TEST_CASE("pearson correlation") {
    std::vector<double> x{1, 2, 3, 4};
    std::vector<double> y{2, 4, 5, 9};
    // Hand computation: cov*n = 11, sxx = 5, syy = 26, r = 11/sqrt(130).
    CHECK(pearson(x, y).value() ==
          doctest::Approx(11.0 / std::sqrt(130.0)).epsilon(1e-10));
    CHECK(pearson(x, x).value() == doctest::Approx(1.0));
    std::vector<double> neg{-1, -2, -3, -4};
    CHECK(pearson(x, neg).value() == doctest::Approx(-1.0));

    std::vector<double> constant{3, 3, 3, 3};
    CHECK_FALSE(pearson(x, constant).has_value());
    CHECK_THROWS_AS(pearson(x, std::vector<double>{1.0}), spec_error);
}

TEST_CASE("pearson affine invariance") {
    Rng rng(23);
    std::vector<double> x(40), y(40);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.normal();
        y[i] = 0.5 * x[i] + rng.normal();
    }
    double base = pearson(x, y).value();
    std::vector<double> scaled(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = 3.0 * x[i] + 7.0;
    CHECK(pearson(scaled, y).value() == doctest::Approx(base).epsilon(1e-12));
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = -2.0 * x[i] + 1.0;
    CHECK(pearson(scaled, y).value() == doctest::Approx(-base).epsilon(1e-12));
}

TEST_CASE("spearman rank correlation") {
    std::vector<double> x{1, 2, 3};
    std::vector<double> monotone{10, 20, 80};
    CHECK(spearman(x, monotone).value() == doctest::Approx(1.0));
    std::vector<double> reversed{5, 4, 0};
    CHECK(spearman(x, reversed).value() == doctest::Approx(-1.0));
    std::vector<double> swapped{1, 3, 2};
    CHECK(spearman(x, swapped).value() == doctest::Approx(0.5));
}

TEST_CASE("property-label correlations flag constants and see planted signal") {
    // Labels follow node count exactly: nodes-correlation must be maximal.
    std::vector<Graph> graphs;
    std::vector<int> labels;
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        int n = i < 15 ? 4 : 9;
        graphs.push_back(graphmark::testing::random_graph(rng, n, 0.5));
        labels.push_back(i < 15 ? 0 : 1);
    }
    auto corr = property_label_correlations(graphs, labels);
    CHECK(corr.at(PropertyName::nodes).value() == doctest::Approx(1.0));

    // Constant property (nodes) flagged as undefined.
    std::vector<Graph> fixed;
    std::vector<int> fixed_labels;
    for (int i = 0; i < 20; ++i) {
        fixed.push_back(graphmark::testing::random_graph(rng, 6, 0.5));
        fixed_labels.push_back(i % 2);
    }
    auto fixed_corr = property_label_correlations(fixed, fixed_labels);
    CHECK_FALSE(fixed_corr.at(PropertyName::nodes).has_value());
}
