#include "maintmeter/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

namespace maintmeter {

namespace {

void json_escape_to(std::string& out, std::string_view text) {
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
}

std::string json_string(std::string_view text) {
    std::string out = "\"";
    json_escape_to(out, text);
    out += "\"";
    return out;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string md_cell(std::string_view text) {
    std::string out;
    for (const char c : text) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

// classification labels joined for lookups keyed by record identity
using LabelIndex =
    std::map<std::tuple<int, std::string, std::string>,
             const std::vector<std::pair<std::string, std::string>>*>;

LabelIndex index_labels(const std::vector<ClassificationResult>& classifications) {
    LabelIndex index;
    for (const ClassificationResult& c : classifications) {
        index[{static_cast<int>(c.level), c.entity, c.metric}] = &c.labels;
    }
    return index;
}

std::string emit_json(const AnalysisReport& report) {
    std::string out;
    out += "{\n";
    out += "  \"schemaVersion\": " + std::to_string(kSchemaVersion) + ",\n";
    out += "  \"tool\": " + json_string(kToolName) + ",\n";

    out += "  \"inputs\": [";
    for (std::size_t i = 0; i < report.inputs.size(); ++i) {
        out += (i ? ", " : "") + json_string(report.inputs[i]);
    }
    out += "],\n";

    out += "  \"records\": [";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const MetricRecord& r = report.records[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"level\": " + json_string(level_name(r.level)) +
               ", \"entity\": " + json_string(r.entity) +
               ", \"metric\": " + json_string(r.metric) +
               ", \"value\": " + format_number(r.value) + "}";
    }
    out += report.records.empty() ? "],\n" : "\n  ],\n";

    out += "  \"classifications\": [";
    for (std::size_t i = 0; i < report.classifications.size(); ++i) {
        const ClassificationResult& c = report.classifications[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"level\": " + json_string(level_name(c.level)) +
               ", \"entity\": " + json_string(c.entity) +
               ", \"metric\": " + json_string(c.metric) +
               ", \"value\": " + format_number(c.value) + ", \"labels\": [";
        for (std::size_t k = 0; k < c.labels.size(); ++k) {
            out += (k ? ", " : "");
            out += "{\"source\": " + json_string(c.labels[k].first) +
                   ", \"label\": " + json_string(c.labels[k].second) + "}";
        }
        out += "]}";
    }
    out += report.classifications.empty() ? "],\n" : "\n  ],\n";

    out += "  \"stats\": [";
    for (std::size_t i = 0; i < report.stats.size(); ++i) {
        const LevelMetricStats& s = report.stats[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"level\": " + json_string(level_name(s.level)) +
               ", \"metric\": " + json_string(s.metric) +
               ", \"count\": " + std::to_string(s.summary.count);
        if (s.summary.count > 0) {
            out += ", \"min\": " + format_number(s.summary.min) +
                   ", \"max\": " + format_number(s.summary.max) +
                   ", \"mean\": " + format_number(s.summary.mean) +
                   ", \"median\": " + format_number(s.summary.median) +
                   ", \"stddev\": " + format_number(s.summary.stddev) +
                   ", \"q1\": " + format_number(s.summary.q1) +
                   ", \"q3\": " + format_number(s.summary.q3);
        }
        out += "}";
    }
    out += report.stats.empty() ? "],\n" : "\n  ],\n";

    out += "  \"diagnostics\": [";
    for (std::size_t i = 0; i < report.diagnostics.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += json_string(report.diagnostics[i]);
    }
    out += report.diagnostics.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string emit_csv(const AnalysisReport& report) {
    const LabelIndex labels = index_labels(report.classifications);
    std::string out = "level,entity,metric,value,source,label\n";
    for (const MetricRecord& r : report.records) {
        const std::string prefix = std::string(level_name(r.level)) + "," +
                                   csv_field(r.entity) + "," + csv_field(r.metric) +
                                   "," + format_number(r.value);
        const auto it = labels.find({static_cast<int>(r.level), r.entity, r.metric});
        if (it == labels.end()) {
            out += prefix + ",,\n";
            continue;
        }
        for (const auto& [source, label] : *it->second) {
            out += prefix + "," + csv_field(source) + "," + csv_field(label) + "\n";
        }
    }
    return out;
}

std::string emit_markdown(const AnalysisReport& report) {
    std::string out = "# maintmeter report\n";
    if (!report.inputs.empty()) {
        out += "\nInputs:";
        for (const std::string& input : report.inputs) {
            out += " `" + input + "`";
        }
        out += "\n";
    }

    // one table per (level, metric group)
    for (const Level level :
         {Level::File, Level::Function, Level::Class, Level::Directory}) {
        for (const MetricGroup group : {MetricGroup::Size, MetricGroup::Complexity,
                                        MetricGroup::ObjectOriented}) {
            std::set<std::string> metrics;
            std::map<std::string, std::map<std::string, double>> rows;  // entity → metric → value
            for (const MetricRecord& r : report.records) {
                if (r.level != level) continue;
                if (metric_group(r.metric) != group) continue;
                metrics.insert(r.metric);
                rows[r.entity][r.metric] = r.value;
            }
            if (rows.empty()) continue;
            out += "\n## " + std::string(level_name(level)) + " metrics (" +
                   std::string(metric_group_name(group)) + ")\n\n";
            out += "| entity |";
            for (const std::string& m : metrics) out += " " + md_cell(m) + " |";
            out += "\n|---|";
            for (std::size_t i = 0; i < metrics.size(); ++i) out += "---:|";
            out += "\n";
            for (const auto& [entity, values] : rows) {
                out += "| " + md_cell(entity) + " |";
                for (const std::string& m : metrics) {
                    const auto it = values.find(m);
                    out += it == values.end() ? " |"
                                              : " " + format_number(it->second) + " |";
                }
                out += "\n";
            }
        }
    }

    if (!report.classifications.empty()) {
        out += "\n## classifications\n\n";
        out += "| level | entity | metric | value | source | label |\n";
        out += "|---|---|---|---:|---|---|\n";
        for (const ClassificationResult& c : report.classifications) {
            for (const auto& [source, label] : c.labels) {
                out += "| " + std::string(level_name(c.level)) + " | " +
                       md_cell(c.entity) + " | " + md_cell(c.metric) + " | " +
                       format_number(c.value) + " | " + md_cell(source) + " | " +
                       md_cell(label) + " |\n";
            }
        }
    }

    if (!report.diagnostics.empty()) {
        out += "\n## diagnostics\n\n";
        for (const std::string& d : report.diagnostics) {
            out += "- " + d + "\n";
        }
    }
    return out;
}

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::vector<ClassificationResult> classify_records(
    const std::vector<MetricRecord>& records, const ReferenceRegistry& registry) {
    std::vector<ClassificationResult> out;
    for (const MetricRecord& r : records) {
        auto labels = classify_value(registry, r.metric, r.level, r.value);
        if (labels.empty()) continue;
        out.push_back({r.level, r.entity, r.metric, r.value, std::move(labels)});
    }
    return out;
}

std::vector<LevelMetricStats> stats_by_metric(const std::vector<MetricRecord>& records) {
    std::map<std::pair<int, std::string>, std::vector<double>> groups;
    for (const MetricRecord& r : records) {
        groups[{static_cast<int>(r.level), r.metric}].push_back(r.value);
    }
    std::vector<LevelMetricStats> out;
    out.reserve(groups.size());
    for (auto& [key, values] : groups) {
        out.push_back({static_cast<Level>(key.first), key.second,
                       summarize_stats(std::move(values))});
    }
    return out;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "md" || name == "markdown") return ReportFormat::Markdown;
    return std::nullopt;
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return emit_json(report);
        case ReportFormat::Csv: return emit_csv(report);
        case ReportFormat::Markdown: return emit_markdown(report);
    }
    throw UsageError("unknown report format");
}

std::string emit_trend_csv(const TimeSeries& series) {
    std::string out = "version,value\n";
    for (const SeriesPoint& p : series.points) {
        out += csv_field(p.version) + ",";
        if (!p.missing) out += format_number(p.value);
        out += "\n";
    }
    return out;
}

std::string emit_trend_svg(const std::vector<TimeSeries>& series_list) {
    std::size_t points = 0;
    std::size_t plottable = 0;
    for (const TimeSeries& s : series_list) {
        points = std::max(points, s.points.size());
        for (const SeriesPoint& p : s.points) {
            if (!p.missing) ++plottable;
        }
    }
    if (series_list.empty() || plottable == 0) {
        throw UsageError("trend chart needs at least one non-missing point");
    }

    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (const TimeSeries& s : series_list) {
        for (const SeriesPoint& p : s.points) {
            if (p.missing) continue;
            lo = first ? p.value : std::min(lo, p.value);
            hi = first ? p.value : std::max(hi, p.value);
            first = false;
        }
    }
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    } else {
        const double pad = (hi - lo) * 0.05;
        lo -= pad;
        hi += pad;
    }

    constexpr double kWidth = 800, kHeight = 400;
    constexpr double kLeft = 60, kRight = 640, kTop = 20, kBottom = 350;
    const auto x_of = [&](std::size_t i) {
        if (points <= 1) return (kLeft + kRight) / 2.0;
        return kLeft + (kRight - kLeft) * static_cast<double>(i) /
                           static_cast<double>(points - 1);
    };
    const auto y_of = [&](double v) {
        return kBottom - (v - lo) / (hi - lo) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           format_number(kWidth) + " " + format_number(kHeight) +
           "\" font-family=\"sans-serif\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) + "\" x2=\"" +
           coord(kLeft) + "\" y2=\"" + coord(kBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" +
           coord(kRight) + "\" y2=\"" + coord(kBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // y-axis ticks
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        const double y = y_of(v);
        svg += "<line x1=\"" + coord(kLeft - 4) + "\" y1=\"" + coord(y) + "\" x2=\"" +
               coord(kLeft) + "\" y2=\"" + coord(y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + coord(kLeft - 8) + "\" y=\"" + coord(y + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + format_number(v) +
               "</text>\n";
    }
    // x-axis version labels, from the longest series
    const TimeSeries* labels_from = &series_list.front();
    for (const TimeSeries& s : series_list) {
        if (s.points.size() > labels_from->points.size()) labels_from = &s;
    }
    for (std::size_t i = 0; i < labels_from->points.size(); ++i) {
        const double x = x_of(i);
        svg += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" +
               coord(x) + "\" y2=\"" + coord(kBottom + 4) + "\" stroke=\"black\"/>\n";
        std::string xml;
        for (const char c : labels_from->points[i].version) {
            if (c == '&') xml += "&amp;";
            else if (c == '<') xml += "&lt;";
            else if (c == '>') xml += "&gt;";
            else xml += c;
        }
        svg += "<text x=\"" + coord(x) + "\" y=\"" + coord(kBottom + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\">" + xml + "</text>\n";
    }
    // series
    for (std::size_t si = 0; si < series_list.size(); ++si) {
        const TimeSeries& s = series_list[si];
        const std::string color(kPalette[si % kPalette.size()]);
        std::vector<std::pair<double, double>> run;
        const auto flush = [&]() {
            if (run.size() >= 2) {
                svg += "<polyline fill=\"none\" stroke=\"" + color +
                       "\" stroke-width=\"1.5\" points=\"";
                for (std::size_t k = 0; k < run.size(); ++k) {
                    svg += (k ? " " : "") + coord(run[k].first) + "," +
                           coord(run[k].second);
                }
                svg += "\"/>\n";
            }
            run.clear();
        };
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (s.points[i].missing) {
                flush();
                continue;
            }
            const double x = x_of(i);
            const double y = y_of(s.points[i].value);
            run.emplace_back(x, y);
            svg += "<circle cx=\"" + coord(x) + "\" cy=\"" + coord(y) +
                   "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        }
        flush();
        // legend entry
        const double ly = kTop + 14 + 18 * static_cast<double>(si);
        svg += "<line x1=\"" + coord(kRight + 12) + "\" y1=\"" + coord(ly - 4) +
               "\" x2=\"" + coord(kRight + 34) + "\" y2=\"" + coord(ly - 4) +
               "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        std::string xml;
        for (const char c : describe_selector(s.selector)) {
            if (c == '&') xml += "&amp;";
            else if (c == '<') xml += "&lt;";
            else if (c == '>') xml += "&gt;";
            else xml += c;
        }
        svg += "<text x=\"" + coord(kRight + 40) + "\" y=\"" + coord(ly) +
               "\" font-size=\"11\">" + xml + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace maintmeter
