#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphmark/correlated.hpp"
#include "graphmark/errors.hpp"
#include "graphmark/evaluation.hpp"
#include "graphmark/metrics.hpp"
#include "graphmark/parallel.hpp"
#include "graphmark/regression.hpp"
#include "graphmark/results_io.hpp"
#include "graphmark/rng.hpp"
#include "graphmark/synth.hpp"
#include "graphmark/tu_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace graphmark;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct OutputMode {
    bool force_json = false;
    bool force_table = false;

    bool json_output() const {
        if (force_json) return true;
        if (force_table) return false;
        return isatty(STDOUT_FILENO) == 0;
    }
};

void add_output_flags(CLI::App* cmd, OutputMode& mode) {
    auto* j = cmd->add_flag("--json", mode.force_json,
                            "force machine-readable JSON output");
    cmd->add_flag("--table", mode.force_table,
                  "force human-readable table output")
        ->excludes(j);
}

void print_seed(std::uint64_t seed) {
    std::cerr << "seed: " << seed << "\n";
}

std::string format_double(double v, int digits = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, v);
    return buffer;
}

std::string format_r(double r) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", r);
    return buffer;
}

std::vector<double> parse_r_list(const std::string& text) {
    std::vector<double> out;
    auto parse_one = [](const std::string& s) {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw spec_error("cannot parse correlation '" + s + "'");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        // start:stop:step sweep.
        std::vector<std::string> parts;
        std::size_t begin = 0;
        for (;;) {
            auto colon = text.find(':', begin);
            parts.push_back(text.substr(begin, colon - begin));
            if (colon == std::string::npos) break;
            begin = colon + 1;
        }
        if (parts.size() != 3)
            throw spec_error("sweep must be start:stop:step, got '" + text +
                             "'");
        double start = parse_one(parts[0]);
        double stop = parse_one(parts[1]);
        double step = parse_one(parts[2]);
        if (!(step > 0.0)) throw spec_error("sweep step must be > 0");
        for (double r = start; r <= stop + 1e-9; r += step)
            out.push_back(std::round(r * 1e9) / 1e9);
    } else {
        std::size_t begin = 0;
        for (;;) {
            auto comma = text.find(',', begin);
            out.push_back(parse_one(text.substr(begin, comma - begin)));
            if (comma == std::string::npos) break;
            begin = comma + 1;
        }
    }
    if (out.empty()) throw spec_error("empty correlation list");
    return out;
}

std::pair<int, int> parse_int_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw spec_error("range must be lo:hi, got '" + text + "'");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

json generation_spec_json(SynthKind kind, double r, int n, int classes,
                          std::uint64_t dataset_seed,
                          const GeneratorConfig& config) {
    UniformFamily family = resolve_target_family(config, kind);
    json spec;
    spec["kind"] = std::string(to_string(kind));
    spec["target_r"] = r;
    spec["sample_count"] = n;
    spec["classes"] = classes;
    spec["seed"] = dataset_seed;
    spec["node_range"] = {config.node_min, config.node_max};
    spec["tolerance"] = resolve_tolerance(config, kind);
    spec["max_retries"] = config.max_retries;
    spec["degree_level"] = config.degree_level;
    spec["target_family"] = {{"lo", family.lo}, {"hi", family.hi}};
    return spec;
}

int cmd_generate(const std::string& kind_text, const std::string& r_list,
                 int n, int classes, std::uint64_t seed,
                 const std::string& out_dir, const std::string& node_range,
                 double degree_level, const std::string& target_range,
                 double tolerance, int max_retries, int jobs,
                 const OutputMode& mode) {
    auto kind = parse_synth_kind(kind_text);
    if (!kind) throw spec_error("unknown dataset kind '" + kind_text + "'");
    auto rs = parse_r_list(r_list);

    GeneratorConfig config;
    if (!node_range.empty()) {
        auto [lo, hi] = parse_int_range(node_range);
        config.node_min = lo;
        config.node_max = hi;
    }
    config.degree_level = degree_level;
    if (tolerance > 0.0) config.tolerance = tolerance;
    config.max_retries = max_retries;
    if (!target_range.empty()) {
        auto colon = target_range.find(':');
        if (colon == std::string::npos)
            throw spec_error("target range must be lo:hi");
        config.target_family =
            UniformFamily{std::stod(target_range.substr(0, colon)),
                          std::stod(target_range.substr(colon + 1))};
    }

    print_seed(seed);
    fs::create_directories(out_dir);

    json rows = json::array();
    for (double r : rs) {
        std::uint64_t dataset_seed =
            derive_seed(seed, static_cast<std::uint64_t>(
                                  std::llround(r * 1000.0)));
        GeneratorConfig dataset_config = config;
        dataset_config.seed = dataset_seed;
        auto ds = build_synthetic_dataset(*kind, r, n, classes,
                                          dataset_config, jobs);

        std::string name = (*kind == SynthKind::syn_degree ? "syndegree_r"
                                                           : "syncc_r") +
                           std::string(format_r(r));
        fs::path dir = fs::path(out_dir) / name;
        fs::create_directories(dir);
        write_tu(ds.graphs, ds.labels, dir / name);

        DatasetManifest manifest;
        manifest.name = name;
        manifest.graph_count = n;
        manifest.class_count = classes;
        manifest.has_attributes = false;
        manifest.source = "synthetic";
        manifest.generation_spec = generation_spec_json(
            *kind, r, n, classes, dataset_seed, dataset_config);
        write_manifest(manifest, dir / "manifest.json");

        auto controlled = verify_realized_correlation(
            ds, controlled_property(*kind));
        auto degree = verify_realized_correlation(ds, PropertyName::avg_degree);
        json row;
        row["dataset"] = name;
        row["target_r"] = r;
        row["realized_r"] = controlled.realized_r
                                ? json(*controlled.realized_r)
                                : json(nullptr);
        row["attenuation"] = controlled.attenuation
                                 ? json(*controlled.attenuation)
                                 : json(nullptr);
        row["degree_label_r"] =
            degree.realized_r ? json(*degree.realized_r) : json(nullptr);
        rows.push_back(row);
    }

    if (mode.json_output()) {
        json doc;
        doc["seed"] = seed;
        doc["datasets"] = rows;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("%-18s %9s %11s %12s %15s\n", "dataset", "target_r",
                    "realized_r", "attenuation", "degree_label_r");
        for (const auto& row : rows) {
            auto opt = [&](const char* key) {
                return row[key].is_null()
                           ? std::string("undefined")
                           : format_double(row[key].get<double>(), 4);
            };
            std::printf("%-18s %9s %11s %12s %15s\n",
                        row["dataset"].get<std::string>().c_str(),
                        format_r(row["target_r"].get<double>()).c_str(),
                        opt("realized_r").c_str(), opt("attenuation").c_str(),
                        opt("degree_label_r").c_str());
        }
    }
    return kExitOk;
}

int cmd_corr(const std::string& data_path, int jobs, const OutputMode& mode) {
    auto ds = read_tu(data_path);
    auto correlations =
        property_label_correlations(ds.graphs, ds.labels, jobs);
    if (mode.json_output()) {
        json doc;
        doc["dataset"] = ds.manifest.name;
        json entries;
        for (const auto& [property, r] : correlations)
            entries[std::string(property_name(property))] =
                r ? json(*r) : json(nullptr);
        doc["correlations"] = entries;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("property-label correlations for %s\n",
                    ds.manifest.name.c_str());
        std::printf("%-12s %10s\n", "property", "pearson");
        for (PropertyName property : kAllProperties) {
            auto r = correlations.at(property);
            std::printf("%-12s %10s\n",
                        std::string(property_name(property)).c_str(),
                        r ? format_double(*r, 4).c_str() : "undefined");
        }
    }
    return kExitOk;
}

json report_to_json(const EffectivenessReport& report) {
    json doc;
    doc["dataset"] = report.dataset;
    doc["class_count"] = report.class_count;
    json types;
    for (const auto& [type, effect] : report.per_type) {
        json entry;
        entry["graph_method"] = effect.gap.graph_method.method;
        entry["baseline"] = effect.gap.baseline.method;
        entry["delta"] = effect.gap.delta;
        entry["r_star"] = effect.gap.r_star;
        entry["lambda"] = effect.lambda;
        entry["contribution"] = effect.contribution;
        types[std::string(to_string(type))] = entry;
    }
    doc["per_type"] = types;
    doc["effectiveness"] = report.total;
    return doc;
}

void print_report_table(const EffectivenessReport& report) {
    std::printf("dataset %s (|Y| = %d)\n", report.dataset.c_str(),
                report.class_count);
    std::printf("  %-4s %-22s %-18s %9s %8s %8s %13s\n", "type",
                "graph_method", "baseline", "delta", "R*", "lambda",
                "contribution");
    for (const auto& [type, effect] : report.per_type) {
        std::printf("  %-4s %-22s %-18s %9s %8s %8s %13s\n",
                    std::string(to_string(type)).c_str(),
                    effect.gap.graph_method.method.c_str(),
                    effect.gap.baseline.method.c_str(),
                    format_double(effect.gap.delta, 4).c_str(),
                    format_double(effect.gap.r_star, 4).c_str(),
                    format_double(effect.lambda, 4).c_str(),
                    format_double(effect.contribution, 4).c_str());
    }
    std::printf("  effectiveness = %s\n", format_double(report.total, 4).c_str());
}

int cmd_effectiveness(const std::string& results_path, bool percent,
                      int classes, const std::string& metric_text,
                      bool plot_data, const OutputMode& mode) {
    auto metric = parse_metric(metric_text);
    if (!metric) throw spec_error("unknown metric '" + metric_text + "'");
    auto records = read_results(results_path, percent);
    if (records.empty())
        throw spec_error("results file contains no records: " + results_path);

    // dataset -> type -> records of the chosen metric.
    std::map<std::string, std::map<InfoType, std::vector<ResultRecord>>> grouped;
    for (const auto& record : records) {
        if (record.metric != *metric) continue;
        grouped[record.dataset][record.info_type].push_back(record);
    }
    if (grouped.empty())
        throw spec_error("no records with metric '" + metric_text + "' in " +
                         results_path);

    std::vector<EffectivenessReport> reports;
    for (const auto& [dataset, by_type] : grouped) {
        std::vector<GapRecord> gaps;
        for (const auto& [type, type_records] : by_type)
            gaps.push_back(select_best_gap(type_records));
        reports.push_back(effectiveness(gaps, classes, dataset));
    }

    if (plot_data) {
        std::printf("# dataset effectiveness_A effectiveness_S total\n");
        for (const auto& report : reports) {
            auto contribution = [&](InfoType t) {
                auto it = report.per_type.find(t);
                return it == report.per_type.end() ? 0.0
                                                   : it->second.contribution;
            };
            std::printf("%s %s %s %s\n", report.dataset.c_str(),
                        format_double(contribution(InfoType::A), 6).c_str(),
                        format_double(contribution(InfoType::S), 6).c_str(),
                        format_double(report.total, 6).c_str());
        }
        return kExitOk;
    }

    if (mode.json_output()) {
        json doc = json::array();
        for (const auto& report : reports) doc.push_back(report_to_json(report));
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& report : reports) print_report_table(report);
    }
    return kExitOk;
}

PreparedDataset load_prepared(const fs::path& path, int jobs) {
    auto ds = read_tu(path);
    return PreparedDataset::prepare(ds.manifest.name, std::move(ds.graphs),
                                    std::move(ds.labels), jobs);
}

std::vector<ModelSpec> load_roster(const std::string& roster_path) {
    if (roster_path.empty()) return default_roster();
    if (roster_path == "fast") return fast_roster();
    std::ifstream in(roster_path);
    if (!in) throw data_error("missing file: " + roster_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw data_error("malformed roster " + roster_path + ": " + e.what());
    }
    return parse_roster(doc);
}

json measurement_to_json(const GapMeasurement& measurement) {
    json doc;
    json records = json::array();
    for (const auto& record : measurement.records) {
        json r;
        r["dataset"] = record.dataset;
        r["method"] = record.method;
        r["info_type"] = std::string(to_string(record.info_type));
        r["metric"] = std::string(to_string(record.metric));
        r["mean"] = record.mean;
        r["std"] = record.std_dev;
        records.push_back(r);
    }
    doc["records"] = records;
    doc["report"] = report_to_json(measurement.report);
    return doc;
}

int cmd_evaluate(const std::string& data_path, const std::string& sweep_dir,
                 const std::string& roster_path, int k, std::uint64_t seed,
                 const std::string& metric_text, const std::string& out_path,
                 int jobs, bool plot_data, const OutputMode& mode) {
    auto metric = parse_metric(metric_text);
    if (!metric) throw spec_error("unknown metric '" + metric_text + "'");
    auto roster = load_roster(roster_path);
    print_seed(seed);

    std::vector<fs::path> dataset_paths;
    if (!sweep_dir.empty()) {
        if (!fs::is_directory(sweep_dir))
            throw data_error("sweep path is not a directory: " + sweep_dir);
        for (const auto& entry : fs::directory_iterator(sweep_dir))
            if (entry.is_directory()) dataset_paths.push_back(entry.path());
        std::sort(dataset_paths.begin(), dataset_paths.end());
        if (dataset_paths.empty())
            throw data_error("no dataset directories under " + sweep_dir);
    } else {
        if (data_path.empty())
            throw spec_error("evaluate needs --data or --sweep");
        dataset_paths.emplace_back(data_path);
    }

    std::vector<ResultRecord> all_records;
    json sweep_rows = json::array();
    std::vector<json> docs;
    for (const auto& path : dataset_paths) {
        auto prepared = load_prepared(path, jobs);
        auto measurement = measure_gaps(prepared, roster, k,
                                        derive_seed(seed, 0), *metric);
        all_records.insert(all_records.end(), measurement.records.begin(),
                           measurement.records.end());

        std::optional<double> target_r;
        fs::path manifest_path = path / "manifest.json";
        if (fs::exists(manifest_path)) {
            auto manifest = read_manifest(manifest_path);
            if (manifest.generation_spec &&
                manifest.generation_spec->contains("target_r"))
                target_r = (*manifest.generation_spec)["target_r"].get<double>();
        }

        const GapRecord& gap = measurement.gaps.front();
        json row;
        row["dataset"] = prepared.name;
        row["target_r"] = target_r ? json(*target_r) : json(nullptr);
        row["baseline"] = gap.baseline.mean;
        row["graph_method"] = gap.graph_method.mean;
        row["gap"] = gap.delta;
        row["effectiveness"] = measurement.report.total;
        sweep_rows.push_back(row);
        docs.push_back(measurement_to_json(measurement));

        if (!plot_data && !mode.json_output()) {
            print_report_table(measurement.report);
            for (const auto& record : measurement.records)
                std::printf("    %-22s %-4s %s +- %s\n", record.method.c_str(),
                            std::string(to_string(record.info_type)).c_str(),
                            format_double(record.mean, 4).c_str(),
                            format_double(record.std_dev, 4).c_str());
        }
    }

    if (!out_path.empty()) write_results(all_records, fs::path(out_path));

    if (plot_data) {
        std::printf("# r baseline graph_method gap effectiveness\n");
        for (const auto& row : sweep_rows) {
            std::string r = row["target_r"].is_null()
                                ? std::string("nan")
                                : format_r(row["target_r"].get<double>());
            std::printf("%s %s %s %s %s\n", r.c_str(),
                        format_double(row["baseline"].get<double>(), 6).c_str(),
                        format_double(row["graph_method"].get<double>(), 6).c_str(),
                        format_double(row["gap"].get<double>(), 6).c_str(),
                        format_double(row["effectiveness"].get<double>(), 6).c_str());
        }
    } else if (mode.json_output()) {
        json doc;
        doc["seed"] = seed;
        doc["datasets"] = docs.size() == 1 ? docs.front() : json(docs);
        std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_regress(const std::string& datasets_dir, int parts, int repeats,
                double alpha, int k, std::uint64_t seed,
                const std::string& out_csv, const std::string& out_json,
                int jobs, const OutputMode& mode) {
    if (!fs::is_directory(datasets_dir))
        throw data_error("datasets path is not a directory: " + datasets_dir);
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(datasets_dir))
        if (entry.is_directory()) paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    if (paths.size() < 2)
        throw data_error("need at least 2 dataset directories under " +
                         datasets_dir);
    print_seed(seed);

    std::vector<PreparedDataset> datasets;
    datasets.reserve(paths.size());
    for (const auto& path : paths) datasets.push_back(load_prepared(path, jobs));

    auto summary = run_effectiveness_regression(datasets, parts, repeats,
                                                alpha, k, seed, jobs);

    json doc;
    doc["regressor"] = "ridge";
    doc["alpha"] = alpha;
    doc["repeats"] = repeats;
    doc["seed"] = seed;
    doc["pearson_mean"] = summary.pearson_mean;
    doc["pearson_std"] = summary.pearson_std;
    doc["spearman_mean"] = summary.spearman_mean;
    doc["p_value_mean"] = summary.p_value_mean;
    doc["p_value_max"] = summary.p_value_max;
    json per_repeat = json::array();
    for (const auto& repeat : summary.repeats) {
        json r;
        r["pearson"] = repeat.eval.pearson;
        r["spearman"] = repeat.eval.spearman;
        r["p_value"] = repeat.eval.p_value;
        r["train_datasets"] = repeat.train_datasets;
        r["test_datasets"] = repeat.test_datasets;
        per_repeat.push_back(r);
    }
    doc["per_repeat"] = per_repeat;

    if (!out_json.empty()) {
        std::ofstream out(out_json);
        if (!out) throw data_error("io failure: cannot open " + out_json);
        out << doc.dump(2) << "\n";
    }
    if (!out_csv.empty()) {
        std::ofstream out(out_csv);
        if (!out) throw data_error("io failure: cannot open " + out_csv);
        out << "source,subset";
        for (const auto& name : FeatureVector26::names()) out << "," << name;
        out << ",target,prediction,role\n";
        out.precision(17);
        for (std::size_t i = 0; i < summary.samples.size(); ++i) {
            const auto& sample = summary.samples[i];
            out << sample.source << "," << sample.subset_index;
            for (double v : sample.features.values) out << "," << v;
            out << "," << sample.target << "," << summary.fitted[i] << ","
                << (summary.was_test[i] ? "test" : "train") << "\n";
        }
    }

    if (mode.json_output()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("ridge regression over %zu datasets x %d subsets\n",
                    datasets.size(), parts);
        std::printf("  pearson  %s +- %s\n",
                    format_double(summary.pearson_mean, 4).c_str(),
                    format_double(summary.pearson_std, 4).c_str());
        std::printf("  spearman %s\n",
                    format_double(summary.spearman_mean, 4).c_str());
        std::printf("  p-value  mean %s  max %s\n",
                    format_double(summary.p_value_mean, 6).c_str(),
                    format_double(summary.p_value_max, 6).c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-classification benchmark effectiveness toolkit"};
    app.require_subcommand(1);

    std::string default_out = ".";
    if (const char* env = std::getenv("GRAPHMARK_OUT_DIR")) default_out = env;

    // generate
    auto* generate = app.add_subcommand(
        "generate", "synthesize correlation-controlled datasets");
    std::string gen_kind = "syn-cc";
    std::string gen_r_list = "0.1:0.9:0.1";
    int gen_n = 4096;
    int gen_classes = 2;
    std::uint64_t gen_seed = 42;
    std::string gen_out = default_out;
    std::string gen_node_range;
    double gen_degree_level = 3.0;
    std::string gen_target_range;
    double gen_tolerance = 0.0;
    int gen_max_retries = 24;
    int gen_jobs = default_jobs();
    OutputMode gen_mode;
    generate->add_option("--kind", gen_kind, "syn-degree or syn-cc");
    generate->add_option("--r-list", gen_r_list,
                         "correlations: comma list or start:stop:step");
    generate->add_option("--n", gen_n, "graphs per dataset");
    generate->add_option("--classes", gen_classes, "label classes");
    generate->add_option("--seed", gen_seed, "master seed");
    generate->add_option("--out", gen_out, "output directory");
    generate->add_option("--node-range", gen_node_range,
                         "node count range lo:hi (default 20:60)");
    generate->add_option("--degree-level", gen_degree_level,
                         "held-constant degree for syn-cc");
    generate->add_option("--target-range", gen_target_range,
                         "uniform range lo:hi of the controlled property");
    generate->add_option("--tolerance", gen_tolerance,
                         "per-graph realization tolerance");
    generate->add_option("--max-retries", gen_max_retries,
                         "resampling/bisection attempts per graph");
    generate->add_option("--jobs", gen_jobs, "worker threads");
    add_output_flags(generate, gen_mode);

    // corr
    auto* corr = app.add_subcommand(
        "corr", "property-label correlation report for a dataset");
    std::string corr_data;
    int corr_jobs = default_jobs();
    OutputMode corr_mode;
    corr->add_option("--data", corr_data, "TU dataset directory or prefix")
        ->required();
    corr->add_option("--jobs", corr_jobs, "worker threads");
    add_output_flags(corr, corr_mode);

    // effectiveness
    auto* eff = app.add_subcommand(
        "effectiveness", "compute effectiveness from a result-record file");
    std::string eff_results;
    bool eff_percent = false;
    int eff_classes = 2;
    std::string eff_metric = "accuracy";
    bool eff_plot = false;
    OutputMode eff_mode;
    eff->add_option("--results", eff_results, "JSONL result records")
        ->required();
    eff->add_flag("--percent", eff_percent,
                  "inputs are on the 0-100 percent scale");
    eff->add_option("--classes", eff_classes, "label classes |Y|");
    eff->add_option("--metric", eff_metric, "accuracy or auc");
    eff->add_flag("--plot-data", eff_plot, "emit plain x/y columns");
    add_output_flags(eff, eff_mode);

    // evaluate
    auto* evaluate = app.add_subcommand(
        "evaluate", "measure performance gaps on a dataset");
    std::string eval_data;
    std::string eval_sweep;
    std::string eval_roster;
    int eval_k = 10;
    std::uint64_t eval_seed = 42;
    std::string eval_metric = "accuracy";
    std::string eval_out;
    int eval_jobs = default_jobs();
    bool eval_plot = false;
    OutputMode eval_mode;
    evaluate->add_option("--data", eval_data, "TU dataset directory or prefix");
    evaluate->add_option("--sweep", eval_sweep,
                         "directory of dataset directories");
    evaluate->add_option("--roster", eval_roster,
                         "roster JSON file, or 'fast' for the quick roster");
    evaluate->add_option("--k", eval_k, "outer folds");
    evaluate->add_option("--seed", eval_seed, "master seed");
    evaluate->add_option("--metric", eval_metric, "accuracy or auc");
    evaluate->add_option("--out", eval_out, "write result records (JSONL)");
    evaluate->add_option("--jobs", eval_jobs, "worker threads");
    evaluate->add_flag("--plot-data", eval_plot, "emit plain x/y columns");
    add_output_flags(evaluate, eval_mode);

    // regress
    auto* regress = app.add_subcommand(
        "regress", "predict effectiveness from dataset statistics");
    std::string reg_dir;
    int reg_parts = 10;
    int reg_repeats = 10;
    double reg_alpha = 1.0;
    int reg_k = 10;
    std::uint64_t reg_seed = 42;
    std::string reg_out_csv;
    std::string reg_out_json;
    int reg_jobs = default_jobs();
    OutputMode reg_mode;
    regress->add_option("--datasets", reg_dir,
                        "directory of dataset directories")
        ->required();
    regress->add_option("--parts", reg_parts, "subsets per dataset");
    regress->add_option("--repeats", reg_repeats, "train/test repeats");
    regress->add_option("--alpha", reg_alpha, "ridge regularization");
    regress->add_option("--k", reg_k, "folds for per-subset gap measurement");
    regress->add_option("--seed", reg_seed, "master seed");
    regress->add_option("--out-csv", reg_out_csv, "per-sample CSV output");
    regress->add_option("--out-json", reg_out_json, "summary JSON output");
    regress->add_option("--jobs", reg_jobs, "worker threads");
    add_output_flags(regress, reg_mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed())
            return cmd_generate(gen_kind, gen_r_list, gen_n, gen_classes,
                                gen_seed, gen_out, gen_node_range,
                                gen_degree_level, gen_target_range,
                                gen_tolerance, gen_max_retries, gen_jobs,
                                gen_mode);
        if (corr->parsed()) return cmd_corr(corr_data, corr_jobs, corr_mode);
        if (eff->parsed())
            return cmd_effectiveness(eff_results, eff_percent, eff_classes,
                                     eff_metric, eff_plot, eff_mode);
        if (evaluate->parsed())
            return cmd_evaluate(eval_data, eval_sweep, eval_roster, eval_k,
                                eval_seed, eval_metric, eval_out, eval_jobs,
                                eval_plot, eval_mode);
        if (regress->parsed())
            return cmd_regress(reg_dir, reg_parts, reg_repeats, reg_alpha,
                               reg_k, reg_seed, reg_out_csv, reg_out_json,
                               reg_jobs, reg_mode);
    } catch (const spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
