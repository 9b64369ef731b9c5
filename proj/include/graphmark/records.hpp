#ifndef GRAPHMARK_RECORDS_HPP
#define GRAPHMARK_RECORDS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace graphmark {

// Which information a method was allowed to use: structural (S) or
// attributed (A).
enum class InfoType { S, A };

enum class Metric { accuracy, auc_roc };

std::string_view to_string(InfoType t);
std::string_view to_string(Metric m);
std::optional<InfoType> parse_info_type(std::string_view s);
std::optional<Metric> parse_metric(std::string_view s);

// One method's evaluation score on one dataset. `mean` is always stored on
// the fractional scale [0, 1].
struct ResultRecord {
    std::string dataset;
    std::string method;
    InfoType info_type = InfoType::S;
    Metric metric = Metric::accuracy;
    double mean = 0.0;
    double std_dev = 0.0;

    bool operator==(const ResultRecord&) const = default;
};

// Records whose method name starts with "baseline" play the baseline role
// when a results file carries no explicit role field.
bool is_baseline_name(std::string_view method);

} // namespace graphmark

#endif // GRAPHMARK_RECORDS_HPP
