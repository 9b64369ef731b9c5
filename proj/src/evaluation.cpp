#include "graphmark/evaluation.hpp"

#include <algorithm>

#include <Eigen/Dense>

#include "graphmark/classifiers.hpp"
#include "graphmark/errors.hpp"
#include "graphmark/kernels.hpp"
#include "graphmark/rng.hpp"

namespace graphmark {

namespace {

Eigen::MatrixXd feature_matrix(const PreparedDataset& ds,
                               bool degree_only) {
    Eigen::Index n = static_cast<Eigen::Index>(ds.graphs.size());
    Eigen::MatrixXd x(n, degree_only ? 1 : 8);
    if (degree_only) {
        const auto& degrees = sequence_for(ds.properties, PropertyName::avg_degree);
        for (Eigen::Index i = 0; i < n; ++i)
            x(i, 0) = degrees[static_cast<std::size_t>(i)];
        return x;
    }
    for (std::size_t p = 0; p < kAllProperties.size(); ++p) {
        const auto& seq = ds.properties[p].values;
        for (Eigen::Index i = 0; i < n; ++i)
            x(i, static_cast<Eigen::Index>(p)) = seq[static_cast<std::size_t>(i)];
    }
    return x;
}

class FeatureRunner final : public ModelRunner {
public:
    FeatureRunner(const PreparedDataset& ds, bool degree_only)
        : dataset_(ds), features_(feature_matrix(ds, degree_only)) {}

    void fit(std::span<const int> train_indices, const GridPoint& point) override {
        FeatureModelConfig config;
        config.learning_rate = grid_value(point, "lr", 0.1);
        config.epochs = static_cast<int>(grid_value(point, "epochs", 500));
        config.hidden_units = static_cast<int>(grid_value(point, "hidden", 0));
        config.seed = derive_seed(0x5eed, static_cast<std::uint64_t>(
                                              config.hidden_units));
        classifier_.fit(rows(train_indices), labels_of(train_indices),
                        dataset_.class_count, config);
    }

    std::vector<int> predict(std::span<const int> indices) override {
        return classifier_.predict(rows(indices));
    }

    std::vector<double> decision_scores(std::span<const int> indices) override {
        return classifier_.decision_scores(rows(indices));
    }

private:
    Eigen::MatrixXd rows(std::span<const int> indices) const {
        Eigen::MatrixXd out(static_cast<Eigen::Index>(indices.size()),
                            features_.cols());
        for (std::size_t i = 0; i < indices.size(); ++i)
            out.row(static_cast<Eigen::Index>(i)) = features_.row(indices[i]);
        return out;
    }

    std::vector<int> labels_of(std::span<const int> indices) const {
        std::vector<int> out;
        out.reserve(indices.size());
        for (int idx : indices)
            out.push_back(dataset_.labels[static_cast<std::size_t>(idx)]);
        return out;
    }

    const PreparedDataset& dataset_;
    Eigen::MatrixXd features_;
    FeatureClassifier classifier_;
};

class KernelRunner final : public ModelRunner {
public:
    KernelRunner(const PreparedDataset& ds, ModelKind kind)
        : dataset_(ds), kind_(kind) {}

    void fit(std::span<const int> train_indices, const GridPoint& point) override {
        int h = static_cast<int>(grid_value(point, "wl_h", 2));
        double alpha = grid_value(point, "alpha", 0.1);
        const Eigen::MatrixXd& k_full = kernel_for(h);
        train_indices_.assign(train_indices.begin(), train_indices.end());

        Eigen::MatrixXd k_train(train_indices_.size(), train_indices_.size());
        for (std::size_t i = 0; i < train_indices_.size(); ++i)
            for (std::size_t j = 0; j < train_indices_.size(); ++j)
                k_train(static_cast<Eigen::Index>(i),
                        static_cast<Eigen::Index>(j)) =
                    k_full(train_indices_[i], train_indices_[j]);

        std::vector<int> y;
        y.reserve(train_indices_.size());
        for (int idx : train_indices_)
            y.push_back(dataset_.labels[static_cast<std::size_t>(idx)]);
        ridge_.fit(k_train, y, dataset_.class_count, alpha);
        fitted_h_ = h;
    }

    std::vector<int> predict(std::span<const int> indices) override {
        return ridge_.predict(cross(indices));
    }

    std::vector<double> decision_scores(std::span<const int> indices) override {
        return ridge_.decision_scores(cross(indices));
    }

private:
    const Eigen::MatrixXd& kernel_for(int h) {
        int key = kind_ == ModelKind::sp_kernel ? -1 : h;
        auto it = kernels_.find(key);
        if (it == kernels_.end()) {
            Eigen::MatrixXd k = kind_ == ModelKind::sp_kernel
                                    ? sp_kernel(dataset_.graphs)
                                    : wl_kernel(dataset_.graphs, h);
            it = kernels_.emplace(key, std::move(k)).first;
        }
        return it->second;
    }

    Eigen::MatrixXd cross(std::span<const int> indices) {
        const Eigen::MatrixXd& k_full = kernel_for(fitted_h_);
        Eigen::MatrixXd out(static_cast<Eigen::Index>(indices.size()),
                            static_cast<Eigen::Index>(train_indices_.size()));
        for (std::size_t i = 0; i < indices.size(); ++i)
            for (std::size_t j = 0; j < train_indices_.size(); ++j)
                out(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(j)) =
                    k_full(indices[i], train_indices_[j]);
        return out;
    }

    const PreparedDataset& dataset_;
    ModelKind kind_;
    std::map<int, Eigen::MatrixXd> kernels_;
    std::vector<int> train_indices_;
    KernelRidge ridge_;
    int fitted_h_ = 2;
};

std::string_view kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::degree_baseline: return "degree_baseline";
        case ModelKind::property_features: return "property_features";
        case ModelKind::wl_kernel: return "wl_kernel";
        case ModelKind::sp_kernel: return "sp_kernel";
    }
    throw internal_error("unknown model kind");
}

std::optional<ModelKind> parse_kind(std::string_view s) {
    if (s == "degree_baseline") return ModelKind::degree_baseline;
    if (s == "property_features") return ModelKind::property_features;
    if (s == "wl_kernel") return ModelKind::wl_kernel;
    if (s == "sp_kernel") return ModelKind::sp_kernel;
    return std::nullopt;
}

HyperGrid logistic_grid() {
    HyperGrid grid;
    grid.values["lr"] = {0.1, 0.01};
    return grid;
}

HyperGrid ridge_grid(bool with_wl) {
    HyperGrid grid;
    grid.values["alpha"] = {1e-3, 1e-1, 10.0};
    if (with_wl) grid.values["wl_h"] = {1.0, 2.0, 3.0};
    return grid;
}

} // namespace

PreparedDataset PreparedDataset::prepare(std::string name,
                                         std::vector<Graph> graphs,
                                         std::vector<int> labels, int jobs) {
    if (graphs.size() != labels.size())
        throw spec_error("labels length does not match graph count");
    PreparedDataset ds;
    ds.name = std::move(name);
    ds.graphs = std::move(graphs);
    ds.labels = std::move(labels);
    int max_label = 0;
    for (int l : ds.labels) {
        if (l < 0) throw spec_error("labels must be non-negative");
        max_label = std::max(max_label, l);
    }
    ds.class_count = max_label + 1;
    ds.properties = property_sequences(ds.graphs, jobs);
    return ds;
}

std::vector<ModelSpec> default_roster() {
    std::vector<ModelSpec> roster;
    roster.push_back({"baseline_degree", ModelKind::degree_baseline,
                      InfoType::S, true, logistic_grid()});
    roster.push_back({"property_features", ModelKind::property_features,
                      InfoType::S, false, logistic_grid()});
    roster.push_back({"wl_kernel", ModelKind::wl_kernel, InfoType::S, false,
                      ridge_grid(true)});
    roster.push_back({"sp_kernel", ModelKind::sp_kernel, InfoType::S, false,
                      ridge_grid(false)});
    return roster;
}

std::vector<ModelSpec> fast_roster() {
    std::vector<ModelSpec> roster;
    roster.push_back({"baseline_degree", ModelKind::degree_baseline,
                      InfoType::S, true, logistic_grid()});
    roster.push_back({"property_features", ModelKind::property_features,
                      InfoType::S, false, logistic_grid()});
    return roster;
}

std::vector<ModelSpec> parse_roster(const nlohmann::json& doc) {
    if (!doc.contains("models") || !doc["models"].is_array())
        throw spec_error("roster document needs a 'models' array");
    std::vector<ModelSpec> roster;
    for (const auto& entry : doc["models"]) {
        ModelSpec spec;
        if (!entry.contains("kind") || !entry["kind"].is_string())
            throw spec_error("roster entry needs a string 'kind'");
        auto kind = parse_kind(entry["kind"].get<std::string>());
        if (!kind)
            throw spec_error("unknown roster entry kind '" +
                             entry["kind"].get<std::string>() + "'");
        spec.kind = *kind;
        spec.name = entry.value("name", std::string(kind_name(spec.kind)));
        spec.baseline = entry.value("baseline", spec.kind ==
                                                    ModelKind::degree_baseline);
        if (entry.contains("info_type")) {
            auto t = parse_info_type(entry["info_type"].get<std::string>());
            if (!t) throw spec_error("roster entry info_type must be S or A");
            spec.info_type = *t;
        }
        if (entry.contains("grid")) {
            for (const auto& [key, vals] : entry["grid"].items()) {
                if (!vals.is_array())
                    throw spec_error("grid entry '" + key +
                                     "' must be an array");
                for (const auto& v : vals)
                    spec.grid.values[key].push_back(v.get<double>());
            }
        } else {
            spec.grid = (spec.kind == ModelKind::wl_kernel ||
                         spec.kind == ModelKind::sp_kernel)
                            ? ridge_grid(spec.kind == ModelKind::wl_kernel)
                            : logistic_grid();
        }
        roster.push_back(std::move(spec));
    }
    if (roster.empty()) throw spec_error("roster has no models");
    return roster;
}

nlohmann::json roster_to_json(std::span<const ModelSpec> roster) {
    nlohmann::json models = nlohmann::json::array();
    for (const auto& spec : roster) {
        nlohmann::json entry;
        entry["name"] = spec.name;
        entry["kind"] = std::string(kind_name(spec.kind));
        entry["info_type"] = std::string(to_string(spec.info_type));
        entry["baseline"] = spec.baseline;
        nlohmann::json grid;
        for (const auto& [key, vals] : spec.grid.values) grid[key] = vals;
        entry["grid"] = grid;
        models.push_back(entry);
    }
    return nlohmann::json{{"models", models}};
}

std::unique_ptr<ModelRunner> make_runner(const PreparedDataset& dataset,
                                         const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::degree_baseline:
            return std::make_unique<FeatureRunner>(dataset, true);
        case ModelKind::property_features:
            return std::make_unique<FeatureRunner>(dataset, false);
        case ModelKind::wl_kernel:
        case ModelKind::sp_kernel:
            return std::make_unique<KernelRunner>(dataset, spec.kind);
    }
    throw internal_error("unknown model kind");
}

GapMeasurement measure_gaps(const PreparedDataset& dataset,
                            std::span<const ModelSpec> roster, int k,
                            std::uint64_t seed, Metric metric) {
    if (roster.empty()) throw spec_error("roster has no models");
    if (metric == Metric::auc_roc && dataset.class_count != 2)
        throw spec_error("auc_roc requires a binary dataset");

    GapMeasurement out;
    std::map<InfoType, ResultRecord> baselines;
    std::map<InfoType, std::vector<ResultRecord>> graph_methods;

    for (std::size_t mi = 0; mi < roster.size(); ++mi) {
        const ModelSpec& spec = roster[mi];
        auto runner = make_runner(dataset, spec);
        ModelResult res = run_risk_assessment(*runner, dataset.labels,
                                              dataset.class_count, spec.grid,
                                              k, derive_seed(seed, mi));
        ResultRecord record;
        record.dataset = dataset.name;
        record.method = spec.name;
        record.info_type = spec.info_type;
        record.metric = metric;
        record.mean = metric == Metric::accuracy ? res.mean_accuracy
                                                 : res.mean_auc;
        record.std_dev = metric == Metric::accuracy ? res.std_accuracy
                                                    : res.std_auc;
        out.records.push_back(record);
        out.model_results.emplace(spec.name, std::move(res));

        if (spec.baseline) {
            if (baselines.count(spec.info_type))
                throw spec_error("roster has more than one baseline for type " +
                                 std::string(to_string(spec.info_type)));
            baselines.emplace(spec.info_type, record);
        } else {
            graph_methods[spec.info_type].push_back(record);
        }
    }

    for (const auto& [type, baseline] : baselines) {
        auto it = graph_methods.find(type);
        if (it == graph_methods.end())
            throw spec_error("no graph-aware method for type " +
                             std::string(to_string(type)));
        out.gaps.push_back(select_best_gap(baseline, it->second));
    }
    for (const auto& [type, methods] : graph_methods) {
        if (!baselines.count(type))
            throw spec_error("no baseline for type " +
                             std::string(to_string(type)));
    }
    out.report = effectiveness(out.gaps, dataset.class_count, dataset.name);
    return out;
}

} // namespace graphmark
