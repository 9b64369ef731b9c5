#include "graphmark/tu_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "graphmark/errors.hpp"

namespace graphmark {

namespace fs = std::filesystem;

namespace {

std::ifstream open_or_throw(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw data_error("missing file: " + file.string());
    return in;
}

bool parse_int(std::string_view token, long& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t' ||
                            *(last - 1) == '\r'))
        --last;
    if (first == last) return false;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

// Lines of single integers; returns empty vector only for an empty file.
std::vector<long> read_int_column(const fs::path& file) {
    auto in = open_or_throw(file);
    std::vector<long> values;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        long v;
        if (!parse_int(line, v))
            throw data_error("malformed line " + std::to_string(line_no) +
                             " in " + file.string() + ": '" + line + "'");
        values.push_back(v);
    }
    return values;
}

fs::path resolve_prefix(const fs::path& path) {
    if (fs::is_directory(path)) {
        std::vector<fs::path> hits;
        for (const auto& entry : fs::directory_iterator(path)) {
            std::string name = entry.path().filename().string();
            if (name.size() > 6 && name.substr(name.size() - 6) == "_A.txt")
                hits.push_back(entry.path());
        }
        if (hits.empty())
            throw data_error("missing file: no *_A.txt under " + path.string());
        if (hits.size() > 1)
            throw data_error("ambiguous dataset directory " + path.string() +
                             ": multiple *_A.txt files");
        std::string stem = hits[0].filename().string();
        stem.resize(stem.size() - 6);
        return path / stem;
    }
    return path;
}

} // namespace

TuDataset read_tu(const fs::path& path) {
    fs::path prefix = resolve_prefix(path);
    std::string base = prefix.string();

    auto indicator = read_int_column(fs::path(base + "_graph_indicator.txt"));
    auto raw_labels = read_int_column(fs::path(base + "_graph_labels.txt"));
    if (indicator.empty())
        throw data_error("empty graph indicator: " + base +
                         "_graph_indicator.txt");
    if (raw_labels.empty())
        throw data_error("empty label file: " + base + "_graph_labels.txt");

    long graph_count = static_cast<long>(raw_labels.size());
    long node_count = static_cast<long>(indicator.size());

    // Node -> graph assignment; graphs must be 1..G.
    std::vector<std::vector<long>> graph_nodes(
        static_cast<std::size_t>(graph_count));
    for (long node = 0; node < node_count; ++node) {
        long g = indicator[static_cast<std::size_t>(node)];
        if (g < 1 || g > graph_count)
            throw data_error("inconsistent indicator: node " +
                             std::to_string(node + 1) + " assigned to graph " +
                             std::to_string(g) + " but label file declares " +
                             std::to_string(graph_count) + " graphs");
        graph_nodes[static_cast<std::size_t>(g - 1)].push_back(node);
    }
    for (long g = 0; g < graph_count; ++g) {
        if (graph_nodes[static_cast<std::size_t>(g)].empty())
            throw data_error("inconsistent indicator: graph " +
                             std::to_string(g + 1) + " has no nodes");
    }

    // Global node id -> (graph, local id); global ids are 1-based.
    std::vector<long> node_graph(static_cast<std::size_t>(node_count));
    std::vector<int> node_local(static_cast<std::size_t>(node_count));
    for (long g = 0; g < graph_count; ++g) {
        const auto& nodes = graph_nodes[static_cast<std::size_t>(g)];
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            node_graph[static_cast<std::size_t>(nodes[i])] = g;
            node_local[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
        }
    }

    // Edges.
    fs::path a_file(base + "_A.txt");
    auto in = open_or_throw(a_file);
    std::vector<std::vector<std::pair<int, int>>> edges(
        static_cast<std::size_t>(graph_count));
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto comma = line.find(',');
        long u, v;
        bool ok = comma != std::string::npos &&
                  parse_int(std::string_view(line).substr(0, comma), u) &&
                  parse_int(std::string_view(line).substr(comma + 1), v);
        if (!ok)
            throw data_error("malformed line " + std::to_string(line_no) +
                             " in " + a_file.string() + ": '" + line + "'");
        if (u < 1 || u > node_count || v < 1 || v > node_count)
            throw data_error("dangling node id at line " +
                             std::to_string(line_no) + " in " +
                             a_file.string() + ": (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
        long gu = node_graph[static_cast<std::size_t>(u - 1)];
        long gv = node_graph[static_cast<std::size_t>(v - 1)];
        if (gu != gv)
            throw data_error("inconsistent indicator: edge at line " +
                             std::to_string(line_no) + " crosses graphs " +
                             std::to_string(gu + 1) + " and " +
                             std::to_string(gv + 1));
        edges[static_cast<std::size_t>(gu)].emplace_back(
            node_local[static_cast<std::size_t>(u - 1)],
            node_local[static_cast<std::size_t>(v - 1)]);
    }

    // Label remap, preserving sorted original order.
    std::set<long> unique_labels(raw_labels.begin(), raw_labels.end());
    if (unique_labels.size() < 2)
        throw data_error("dataset has fewer than 2 classes");
    std::map<long, int> remap;
    std::vector<int> originals;
    for (long l : unique_labels) {
        remap[l] = static_cast<int>(originals.size());
        originals.push_back(static_cast<int>(l));
    }

    TuDataset ds;
    ds.graphs.reserve(static_cast<std::size_t>(graph_count));
    for (long g = 0; g < graph_count; ++g) {
        try {
            ds.graphs.emplace_back(
                static_cast<int>(graph_nodes[static_cast<std::size_t>(g)].size()),
                std::move(edges[static_cast<std::size_t>(g)]));
        } catch (const data_error& e) {
            throw data_error("graph " + std::to_string(g + 1) + " in " + base +
                             ": " + e.what());
        }
        ds.labels.push_back(remap.at(raw_labels[static_cast<std::size_t>(g)]));
    }
    ds.original_labels = std::move(originals);

    // Optional node labels, stored but unused by the structural models.
    fs::path nl_file(base + "_node_labels.txt");
    if (fs::exists(nl_file)) {
        auto node_label_col = read_int_column(nl_file);
        if (static_cast<long>(node_label_col.size()) != node_count)
            throw data_error("inconsistent node label file: " +
                             std::to_string(node_label_col.size()) +
                             " entries for " + std::to_string(node_count) +
                             " nodes");
        ds.node_labels.assign(static_cast<std::size_t>(graph_count), {});
        for (long g = 0; g < graph_count; ++g)
            ds.node_labels[static_cast<std::size_t>(g)].resize(
                graph_nodes[static_cast<std::size_t>(g)].size());
        for (long node = 0; node < node_count; ++node) {
            long g = node_graph[static_cast<std::size_t>(node)];
            ds.node_labels[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(
                              node_local[static_cast<std::size_t>(node)])] =
                static_cast<int>(node_label_col[static_cast<std::size_t>(node)]);
        }
    }

    ds.manifest.name = prefix.filename().string();
    ds.manifest.graph_count = static_cast<int>(graph_count);
    ds.manifest.class_count = static_cast<int>(unique_labels.size());
    ds.manifest.has_attributes = !ds.node_labels.empty();
    ds.manifest.source = "tu-file";
    return ds;
}

void write_tu(const std::vector<Graph>& graphs, std::span<const int> labels,
              const fs::path& prefix) {
    if (graphs.empty()) throw spec_error("cannot write empty dataset");
    if (graphs.size() != labels.size())
        throw spec_error("labels length does not match graph count");
    std::set<int> classes(labels.begin(), labels.end());
    if (classes.size() < 2)
        throw spec_error("dataset must have at least 2 classes, got " +
                         std::to_string(classes.size()));

    fs::path dir = prefix.parent_path();
    if (!dir.empty()) fs::create_directories(dir);
    std::string base = prefix.string();

    std::ofstream a_out(base + "_A.txt");
    std::ofstream ind_out(base + "_graph_indicator.txt");
    std::ofstream lab_out(base + "_graph_labels.txt");
    if (!a_out || !ind_out || !lab_out)
        throw data_error("io failure: cannot open output files under " + base);

    long offset = 0;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        const Graph& graph = graphs[g];
        for (int u = 0; u < graph.node_count(); ++u) {
            for (int v : graph.neighbors(u)) {
                a_out << (offset + u + 1) << ", " << (offset + v + 1) << "\n";
            }
            ind_out << (g + 1) << "\n";
        }
        lab_out << labels[g] << "\n";
        offset += graph.node_count();
    }
    if (!a_out.flush() || !ind_out.flush() || !lab_out.flush())
        throw data_error("io failure while writing " + base);
}

void write_manifest(const DatasetManifest& manifest, const fs::path& path) {
    nlohmann::json j;
    j["name"] = manifest.name;
    j["graph_count"] = manifest.graph_count;
    j["class_count"] = manifest.class_count;
    j["has_attributes"] = manifest.has_attributes;
    j["source"] = manifest.source;
    if (manifest.generation_spec) j["generation_spec"] = *manifest.generation_spec;
    std::ofstream out(path);
    if (!out) throw data_error("io failure: cannot open " + path.string());
    out << j.dump(2) << "\n";
}

DatasetManifest read_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("missing file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw data_error("malformed manifest " + path.string() + ": " +
                         e.what());
    }
    DatasetManifest m;
    try {
        m.name = j.at("name").get<std::string>();
        m.graph_count = j.at("graph_count").get<int>();
        m.class_count = j.at("class_count").get<int>();
        m.has_attributes = j.at("has_attributes").get<bool>();
        m.source = j.at("source").get<std::string>();
        if (j.contains("generation_spec")) m.generation_spec = j["generation_spec"];
    } catch (const nlohmann::json::exception& e) {
        throw data_error("schema violation in manifest " + path.string() +
                         ": " + e.what());
    }
    if (m.graph_count < 1)
        throw data_error("schema violation in manifest: graph_count must be "
                         ">= 1");
    if (m.class_count < 2)
        throw data_error("schema violation in manifest: class_count must be "
                         ">= 2");
    return m;
}

} // namespace graphmark
