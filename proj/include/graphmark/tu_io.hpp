#ifndef GRAPHMARK_TU_IO_HPP
#define GRAPHMARK_TU_IO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphmark/graph.hpp"

namespace graphmark {

struct DatasetManifest {
    std::string name;
    int graph_count = 0;
    int class_count = 0;
    bool has_attributes = false;
    std::string source = "tu-file"; // "tu-file" or "synthetic"
    std::optional<nlohmann::json> generation_spec;
};

struct TuDataset {
    std::vector<Graph> graphs;
    std::vector<int> labels; // remapped to 0..|Y|-1
    DatasetManifest manifest;
    std::vector<int> original_labels;            // sorted-unique originals
    std::vector<std::vector<int>> node_labels;   // per graph; empty if absent
};

// Reads <prefix>_A.txt, <prefix>_graph_indicator.txt, <prefix>_graph_labels.txt
// (and optional <prefix>_node_labels.txt). `path` is either the file prefix or
// a directory containing exactly one *_A.txt.
TuDataset read_tu(const std::filesystem::path& path);

// Writes the three TU files in canonical form: 1-indexed global node ids,
// each undirected edge emitted in both directions, ascending order.
void write_tu(const std::vector<Graph>& graphs, std::span<const int> labels,
              const std::filesystem::path& prefix);

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path);
DatasetManifest read_manifest(const std::filesystem::path& path);

} // namespace graphmark

#endif // GRAPHMARK_TU_IO_HPP
