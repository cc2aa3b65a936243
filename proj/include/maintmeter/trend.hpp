// Multi-version ingestion and trend machinery: snapshot a source tree into
// metric records, summarize value distributions, and build per-selector
// time series across an ordered version sequence.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maintmeter/errors.hpp"
#include "maintmeter/record.hpp"

namespace maintmeter {

struct StatSummary {
    std::size_t count = 0;
    // remaining fields are meaningful only when count > 0
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // population
    double q1 = 0.0;
    double q3 = 0.0;
};

/// Median and quartiles use inclusive linear interpolation at rank (n-1)*p.
StatSummary summarize_stats(std::vector<double> values);

const std::vector<std::string>& default_source_extensions();

struct SnapshotOptions {
    std::vector<std::string> extensions = default_source_extensions();
};

/// All metric records for one version of a tree.
struct VersionSnapshot {
    std::string version_label;
    std::vector<MetricRecord> records;  // sorted by (level, entity, metric)
    std::map<std::string, std::vector<std::string>> directory_index;
    std::vector<std::string> diagnostics;
    std::size_t file_count = 0;
    std::size_t degraded_count = 0;
};

/// Lex, structure, and measure every selected file under `root`.
/// Throws InputError when the root is missing or unreadable; single
/// unreadable files become diagnostics.
VersionSnapshot snapshot_tree(const std::filesystem::path& root,
                              const std::string& version_label,
                              const SnapshotOptions& options = {});

enum class Aggregator { Mean, Max, Total };

std::optional<Aggregator> parse_aggregator(std::string_view name);
std::string_view aggregator_name(Aggregator agg);

struct SeriesSelector {
    std::string metric;
    Level level = Level::File;
    std::string directory_glob = "**";
    Aggregator agg = Aggregator::Max;
};

std::string describe_selector(const SeriesSelector& selector);

struct SeriesPoint {
    std::string version;
    double value = 0.0;
    bool missing = true;
};

struct TimeSeries {
    SeriesSelector selector;
    std::vector<SeriesPoint> points;  // one per snapshot, caller's order
};

/// One point per snapshot; selections with no matching records produce
/// missing points. Throws UsageError for unknown metric ids.
TimeSeries build_series(const std::vector<VersionSnapshot>& snapshots,
                        const SeriesSelector& selector);

/// Path glob: `*` and `?` stay within one path segment, `**` crosses
/// segments.
bool glob_match(std::string_view pattern, std::string_view path);

}  // namespace maintmeter
