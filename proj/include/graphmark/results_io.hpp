#ifndef GRAPHMARK_RESULTS_IO_HPP
#define GRAPHMARK_RESULTS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphmark/records.hpp"

namespace graphmark {

// JSON-lines result records. With `percent` set, means and stds are divided
// by 100 at ingestion; the internal scale is always fractional.
std::vector<ResultRecord> read_results(const std::filesystem::path& path,
                                       bool percent = false);
std::vector<ResultRecord> read_results(std::istream& in, bool percent = false);

void write_results(std::span<const ResultRecord> records,
                   const std::filesystem::path& path);
void write_results(std::span<const ResultRecord> records, std::ostream& out);

} // namespace graphmark

#endif // GRAPHMARK_RESULTS_IO_HPP
