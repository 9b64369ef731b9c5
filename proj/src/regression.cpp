#include "graphmark/regression.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "graphmark/errors.hpp"
#include "graphmark/parallel.hpp"
#include "graphmark/rng.hpp"

namespace graphmark {

std::vector<std::vector<int>> split_into_subsets(std::span<const int> labels,
                                                 int parts,
                                                 std::uint64_t seed) {
    if (parts < 2) throw spec_error("need at least 2 subsets");
    constexpr int kMinSubsetSize = 50;
    if (static_cast<long>(labels.size()) <
        static_cast<long>(parts) * kMinSubsetSize)
        throw spec_error("dataset too small to split: " +
                         std::to_string(labels.size()) + " samples < " +
                         std::to_string(parts) + " x " +
                         std::to_string(kMinSubsetSize));

    std::map<int, std::vector<int>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i)
        by_class[labels[i]].push_back(static_cast<int>(i));

    std::vector<std::vector<int>> subsets(static_cast<std::size_t>(parts));
    std::uint64_t stream = 0;
    // One rolling cursor across classes keeps the subset sizes within one of
    // each other globally, not just per class.
    std::size_t cursor = 0;
    for (auto& [label, members] : by_class) {
        Rng rng(derive_seed(seed, stream++));
        rng.shuffle(members);
        for (int member : members) {
            subsets[cursor].push_back(member);
            cursor = (cursor + 1) % static_cast<std::size_t>(parts);
        }
    }
    for (auto& subset : subsets) std::sort(subset.begin(), subset.end());
    return subsets;
}

std::array<std::string, 26> FeatureVector26::names() {
    std::array<std::string, 26> out;
    std::size_t i = 0;
    for (PropertyName p : kAllProperties) {
        std::string base(property_name(p));
        out[i++] = base + "_mean";
        out[i++] = base + "_std";
        out[i++] = base + "_label_corr";
    }
    out[i++] = "log10_graph_count";
    out[i++] = "class_count";
    return out;
}

FeatureVector26 dataset_features(const PreparedDataset& dataset,
                                 std::span<const int> subset) {
    if (subset.size() < 2)
        throw spec_error("subset needs at least 2 samples");
    std::vector<double> label_values;
    label_values.reserve(subset.size());
    std::set<int> classes;
    for (int idx : subset) {
        int l = dataset.labels[static_cast<std::size_t>(idx)];
        classes.insert(l);
        label_values.push_back(static_cast<double>(l));
    }
    if (classes.size() < 2)
        throw spec_error("subset has a single class; need >= 2");

    FeatureVector26 out;
    std::size_t slot = 0;
    std::vector<double> values(subset.size());
    for (std::size_t p = 0; p < kAllProperties.size(); ++p) {
        const auto& seq = dataset.properties[p].values;
        for (std::size_t i = 0; i < subset.size(); ++i)
            values[i] = seq[static_cast<std::size_t>(subset[i])];
        double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                      static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= static_cast<double>(values.size());
        out.values[slot++] = mean;
        out.values[slot++] = std::sqrt(var);
        auto corr = pearson(values, label_values);
        if (!corr) out.undefined_correlations.push_back(kAllProperties[p]);
        out.values[slot++] = corr.value_or(0.0);
    }
    out.values[slot++] = std::log10(static_cast<double>(subset.size()));
    out.values[slot++] = static_cast<double>(classes.size());
    return out;
}

RidgeModel ridge_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                     double alpha) {
    if (!(alpha > 0.0))
        throw spec_error("ridge requires alpha > 0, got " +
                         std::to_string(alpha));
    if (x.rows() != y.size())
        throw spec_error("ridge: rows do not match target count");
    if (x.rows() < 2) throw spec_error("ridge: need at least 2 samples");

    RidgeModel model;
    model.mean = x.colwise().mean();
    model.scale.resize(x.cols());
    Eigen::MatrixXd z = x;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        double var =
            (x.col(j).array() - model.mean[j]).square().sum() / x.rows();
        double sd = std::sqrt(var);
        model.scale[j] = sd > 1e-12 ? sd : 1.0;
        z.col(j) = (x.col(j).array() - model.mean[j]) / model.scale[j];
    }
    double y_mean = y.mean();
    Eigen::VectorXd yc = y.array() - y_mean;

    Eigen::MatrixXd gram = z.transpose() * z;
    gram.diagonal().array() += alpha;
    model.weights = gram.ldlt().solve(z.transpose() * yc);
    model.intercept = y_mean;
    return model;
}

Eigen::VectorXd ridge_predict(const RidgeModel& model,
                              const Eigen::MatrixXd& x) {
    Eigen::MatrixXd z = x;
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        z.col(j) = (x.col(j).array() - model.mean[j]) / model.scale[j];
    return (z * model.weights).array() + model.intercept;
}

RegressionEval evaluate_regression(std::span<const double> predictions,
                                   std::span<const double> targets,
                                   int permutations, std::uint64_t seed) {
    if (predictions.size() != targets.size())
        throw spec_error("evaluate_regression: length mismatch");
    if (predictions.size() < 3)
        throw spec_error("evaluate_regression: need at least 3 samples, got " +
                         std::to_string(predictions.size()));

    RegressionEval eval;
    eval.pearson = pearson(predictions, targets).value_or(0.0);
    eval.spearman = spearman(predictions, targets).value_or(0.0);

    // Permutation test: shuffle the targets, count |r| at least as large.
    std::vector<double> shuffled(targets.begin(), targets.end());
    Rng rng(seed);
    int as_large = 0;
    double threshold = std::abs(eval.pearson);
    for (int it = 0; it < permutations; ++it) {
        rng.shuffle(shuffled);
        double r = pearson(predictions, shuffled).value_or(0.0);
        if (std::abs(r) >= threshold - 1e-15) ++as_large;
    }
    eval.p_value = (1.0 + as_large) / (1.0 + permutations);
    return eval;
}

RegressionSummary run_effectiveness_regression(
    std::span<const PreparedDataset> datasets, int parts, int repeats,
    double alpha, int cv_folds, std::uint64_t seed, int jobs) {
    if (datasets.size() < 2)
        throw spec_error("regression needs at least 2 datasets");
    if (repeats < 1) throw spec_error("repeats must be >= 1");

    RegressionSummary summary;

    // Per-dataset subsets and per-subset (features, effectiveness target).
    struct Job {
        std::size_t dataset;
        int subset_index;
        std::vector<int> indices;
    };
    std::vector<Job> jobs_list;
    for (std::size_t d = 0; d < datasets.size(); ++d) {
        auto subsets = split_into_subsets(datasets[d].labels, parts,
                                          derive_seed(seed, d));
        for (int s = 0; s < parts; ++s)
            jobs_list.push_back({d, s, std::move(subsets[static_cast<std::size_t>(s)])});
    }

    std::vector<RegressionSample> samples(jobs_list.size());
    auto roster = fast_roster();
    parallel_for(jobs, jobs_list.size(), [&](std::size_t i) {
        const Job& job = jobs_list[i];
        const PreparedDataset& parent = datasets[job.dataset];

        PreparedDataset subset;
        subset.name = parent.name + "#" + std::to_string(job.subset_index);
        subset.labels.reserve(job.indices.size());
        subset.graphs.reserve(job.indices.size());
        for (int idx : job.indices) {
            subset.graphs.push_back(parent.graphs[static_cast<std::size_t>(idx)]);
            subset.labels.push_back(parent.labels[static_cast<std::size_t>(idx)]);
        }
        subset.class_count = parent.class_count;
        for (std::size_t p = 0; p < kAllProperties.size(); ++p) {
            subset.properties[p].property = kAllProperties[p];
            subset.properties[p].values.reserve(job.indices.size());
            for (int idx : job.indices)
                subset.properties[p].values.push_back(
                    parent.properties[p].values[static_cast<std::size_t>(idx)]);
        }

        RegressionSample sample;
        sample.source = parent.name;
        sample.subset_index = job.subset_index;
        sample.features = dataset_features(parent, job.indices);
        auto measurement =
            measure_gaps(subset, roster, cv_folds,
                         derive_seed(seed, 10000 + i), Metric::accuracy);
        sample.target = measurement.report.total;
        samples[i] = std::move(sample);
    });
    summary.samples = samples;

    Eigen::MatrixXd x(static_cast<Eigen::Index>(samples.size()), 26);
    Eigen::VectorXd y(static_cast<Eigen::Index>(samples.size()));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (int j = 0; j < 26; ++j)
            x(static_cast<Eigen::Index>(i), j) =
                samples[i].features.values[static_cast<std::size_t>(j)];
        y[static_cast<Eigen::Index>(i)] = samples[i].target;
    }

    // Dataset-stratified 70/30 repeats: whole datasets go to train or test,
    // so no subset of a test dataset leaks into training.
    std::size_t dataset_count = datasets.size();
    std::size_t train_count = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(0.7 * static_cast<double>(
                                                         dataset_count))));
    if (train_count >= dataset_count) train_count = dataset_count - 1;

    std::vector<double> pearsons, spearmans, p_values;
    for (int rep = 0; rep < repeats; ++rep) {
        std::vector<std::size_t> order(dataset_count);
        std::iota(order.begin(), order.end(), 0);
        Rng rng(derive_seed(seed, 20000 + static_cast<std::uint64_t>(rep)));
        rng.shuffle(order);

        std::vector<bool> in_train(dataset_count, false);
        RegressionRepeat repeat;
        for (std::size_t i = 0; i < dataset_count; ++i) {
            if (i < train_count) {
                in_train[order[i]] = true;
                repeat.train_datasets.push_back(datasets[order[i]].name);
            } else {
                repeat.test_datasets.push_back(datasets[order[i]].name);
            }
        }
        std::sort(repeat.train_datasets.begin(), repeat.train_datasets.end());
        std::sort(repeat.test_datasets.begin(), repeat.test_datasets.end());

        std::vector<Eigen::Index> train_rows, test_rows;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (in_train[jobs_list[i].dataset])
                train_rows.push_back(static_cast<Eigen::Index>(i));
            else
                test_rows.push_back(static_cast<Eigen::Index>(i));
        }

        Eigen::MatrixXd x_train(static_cast<Eigen::Index>(train_rows.size()), 26);
        Eigen::VectorXd y_train(static_cast<Eigen::Index>(train_rows.size()));
        for (std::size_t i = 0; i < train_rows.size(); ++i) {
            x_train.row(static_cast<Eigen::Index>(i)) = x.row(train_rows[i]);
            y_train[static_cast<Eigen::Index>(i)] = y[train_rows[i]];
        }
        RidgeModel model = ridge_fit(x_train, y_train, alpha);

        Eigen::MatrixXd x_test(static_cast<Eigen::Index>(test_rows.size()), 26);
        std::vector<double> targets(test_rows.size());
        for (std::size_t i = 0; i < test_rows.size(); ++i) {
            x_test.row(static_cast<Eigen::Index>(i)) = x.row(test_rows[i]);
            targets[i] = y[test_rows[i]];
        }
        Eigen::VectorXd predictions = ridge_predict(model, x_test);
        std::vector<double> pred_vec(predictions.data(),
                                     predictions.data() + predictions.size());
        repeat.eval = evaluate_regression(
            pred_vec, targets, 10000,
            derive_seed(seed, 30000 + static_cast<std::uint64_t>(rep)));
        pearsons.push_back(repeat.eval.pearson);
        spearmans.push_back(repeat.eval.spearman);
        p_values.push_back(repeat.eval.p_value);
        summary.repeats.push_back(std::move(repeat));

        if (rep == 0) {
            Eigen::VectorXd all_fitted = ridge_predict(model, x);
            summary.fitted.assign(all_fitted.data(),
                                  all_fitted.data() + all_fitted.size());
            summary.was_test.assign(samples.size(), false);
            for (Eigen::Index row : test_rows)
                summary.was_test[static_cast<std::size_t>(row)] = true;
        }
    }

    auto mean_of = [](const std::vector<double>& v) {
        return std::accumulate(v.begin(), v.end(), 0.0) /
               static_cast<double>(v.size());
    };
    summary.pearson_mean = mean_of(pearsons);
    summary.spearman_mean = mean_of(spearmans);
    summary.p_value_mean = mean_of(p_values);
    summary.p_value_max = *std::max_element(p_values.begin(), p_values.end());
    double var = 0.0;
    for (double p : pearsons)
        var += (p - summary.pearson_mean) * (p - summary.pearson_mean);
    summary.pearson_std = std::sqrt(var / static_cast<double>(pearsons.size()));
    return summary;
}

} // namespace graphmark
