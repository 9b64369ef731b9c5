#include "graphmark/results_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "graphmark/errors.hpp"

namespace graphmark {

namespace {

ResultRecord record_from_json(const nlohmann::json& j, bool percent,
                              long line_no) {
    auto fail = [line_no](const std::string& field, const std::string& why) {
        throw data_error("schema violation at record " +
                         std::to_string(line_no) + ": field '" + field + "' " +
                         why);
    };
    ResultRecord r;
    for (const char* field : {"dataset", "method", "info_type", "metric",
                              "mean", "std"}) {
        if (!j.contains(field)) fail(field, "is missing");
    }
    if (!j["dataset"].is_string()) fail("dataset", "must be a string");
    if (!j["method"].is_string()) fail("method", "must be a string");
    r.dataset = j["dataset"].get<std::string>();
    r.method = j["method"].get<std::string>();

    if (!j["info_type"].is_string()) fail("info_type", "must be a string");
    auto type = parse_info_type(j["info_type"].get<std::string>());
    if (!type) fail("info_type", "must be 'S' or 'A'");
    r.info_type = *type;

    if (!j["metric"].is_string()) fail("metric", "must be a string");
    auto metric = parse_metric(j["metric"].get<std::string>());
    if (!metric) fail("metric", "must be 'accuracy' or 'auc_roc'");
    r.metric = *metric;

    if (!j["mean"].is_number()) fail("mean", "must be a number");
    if (!j["std"].is_number()) fail("std", "must be a number");
    r.mean = j["mean"].get<double>();
    r.std_dev = j["std"].get<double>();
    if (percent) {
        r.mean /= 100.0;
        r.std_dev /= 100.0;
    }
    if (r.mean < 0.0 || r.mean > 1.0)
        fail("mean", "= " + std::to_string(r.mean) + " outside [0, 1]" +
                         (percent ? " after percent normalization" : ""));
    if (r.std_dev < 0.0) fail("std", "must be >= 0");
    return r;
}

} // namespace

std::vector<ResultRecord> read_results(std::istream& in, bool percent) {
    std::vector<ResultRecord> records;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw data_error("malformed record at line " +
                             std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(record_from_json(j, percent, line_no));
    }
    return records;
}

std::vector<ResultRecord> read_results(const std::filesystem::path& path,
                                       bool percent) {
    std::ifstream in(path);
    if (!in) throw data_error("missing file: " + path.string());
    return read_results(in, percent);
}

void write_results(std::span<const ResultRecord> records, std::ostream& out) {
    for (const auto& r : records) {
        nlohmann::json j;
        j["dataset"] = r.dataset;
        j["method"] = r.method;
        j["info_type"] = std::string(to_string(r.info_type));
        j["metric"] = std::string(to_string(r.metric));
        j["mean"] = r.mean;
        j["std"] = r.std_dev;
        out << j.dump() << "\n";
    }
}

void write_results(std::span<const ResultRecord> records,
                   const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw data_error("io failure: cannot open " + path.string());
    write_results(records, out);
    if (!out.flush()) throw data_error("io failure while writing " + path.string());
}

} // namespace graphmark
