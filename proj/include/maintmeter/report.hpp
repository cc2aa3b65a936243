// Deterministic serialization of snapshots, classifications, statistics,
// and trend series: JSON, CSV, Markdown, and a dependency-free SVG line
// chart. Stable key ordering, 9-significant-digit numbers, LF endings.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maintmeter/record.hpp"
#include "maintmeter/references.hpp"
#include "maintmeter/trend.hpp"

namespace maintmeter {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolName = "maintmeter 1.0.0";

struct ClassificationResult {
    Level level = Level::File;
    std::string entity;
    std::string metric;
    double value = 0.0;
    std::vector<std::pair<std::string, std::string>> labels;  // (source, label)
};

struct LevelMetricStats {
    Level level = Level::File;
    std::string metric;
    StatSummary summary;
};

struct AnalysisReport {
    std::vector<std::string> inputs;
    std::vector<MetricRecord> records;
    std::vector<ClassificationResult> classifications;
    std::vector<LevelMetricStats> stats;
    std::vector<std::string> diagnostics;
};

/// One classification per record whose (metric, level) has at least one
/// source group in the registry; keeps record order.
std::vector<ClassificationResult> classify_records(
    const std::vector<MetricRecord>& records, const ReferenceRegistry& registry);

/// Distribution summaries grouped by (level, metric).
std::vector<LevelMetricStats> stats_by_metric(
    const std::vector<MetricRecord>& records);

enum class ReportFormat { Json, Csv, Markdown };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// 9 significant digits, shortest form ("%.9g").
std::string format_number(double value);

std::string emit_report(const AnalysisReport& report, ReportFormat format);

/// `version,value` rows, one per point; missing points leave value empty.
std::string emit_trend_csv(const TimeSeries& series);

/// Standalone 800x400 chart; one polyline per contiguous run of points,
/// missing points break the line. Throws UsageError when nothing is
/// plottable.
std::string emit_trend_svg(const std::vector<TimeSeries>& series_list);

}  // namespace maintmeter
