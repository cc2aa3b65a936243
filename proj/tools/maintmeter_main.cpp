// maintmeter command-line driver: analyze a tree, build trends across
// trees, or gate CI on classification labels.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maintmeter/errors.hpp"
#include "maintmeter/references.hpp"
#include "maintmeter/report.hpp"
#include "maintmeter/trend.hpp"

namespace fs = std::filesystem;
using namespace maintmeter;

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (const char c : text) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

ReferenceRegistry resolve_registry(const std::string& refs_flag) {
    std::string path = refs_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("MAINTMETER_REFS")) path = env;
    }
    if (path.empty()) return built_in_references();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read reference file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return load_references(text);
}

SnapshotOptions resolve_options(const std::string& extensions_flag) {
    SnapshotOptions options;
    if (extensions_flag.empty()) return options;
    options.extensions.clear();
    for (std::string ext : split_list(extensions_flag)) {
        if (!ext.empty() && ext.front() != '.') ext.insert(ext.begin(), '.');
        options.extensions.push_back(ext);
    }
    if (options.extensions.empty()) {
        throw UsageError("--extensions needs at least one extension");
    }
    return options;
}

std::set<Level> resolve_levels(const std::vector<std::string>& level_flags) {
    std::set<Level> levels;
    if (level_flags.empty()) {
        return {Level::File, Level::Function, Level::Class, Level::Directory};
    }
    for (const std::string& name : level_flags) {
        const auto level = parse_level(name);
        if (!level) throw UsageError("unknown level '" + name + "'");
        levels.insert(*level);
    }
    return levels;
}

void write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write output file '" + out_path + "'");
    out << payload;
}

void print_diagnostics(const std::vector<std::string>& diagnostics) {
    for (const std::string& d : diagnostics) std::cerr << d << "\n";
}

AnalysisReport build_analysis(const std::string& path_arg,
                              const ReferenceRegistry& registry,
                              const std::set<Level>& levels,
                              const SnapshotOptions& options) {
    VersionSnapshot snapshot = snapshot_tree(path_arg, path_arg, options);
    if (snapshot.file_count > 0 && snapshot.degraded_count == snapshot.file_count) {
        print_diagnostics(snapshot.diagnostics);
        throw InputError("all files under '" + path_arg + "' are degraded");
    }
    AnalysisReport report;
    report.inputs = {path_arg};
    for (MetricRecord& rec : snapshot.records) {
        if (levels.count(rec.level)) report.records.push_back(std::move(rec));
    }
    report.classifications = classify_records(report.records, registry);
    report.stats = stats_by_metric(report.records);
    report.diagnostics = snapshot.diagnostics;
    return report;
}

std::string version_label_for(const std::string& arg,
                              const std::vector<std::string>& all_args) {
    fs::path p = fs::path(arg).lexically_normal();
    std::string s = p.generic_string();
    while (s.size() > 1 && s.back() == '/') s.pop_back();
    std::string base = fs::path(s).filename().generic_string();
    if (base.empty()) return s;
    // fall back to the full argument when basenames collide
    int hits = 0;
    for (const std::string& other : all_args) {
        fs::path q = fs::path(other).lexically_normal();
        std::string t = q.generic_string();
        while (t.size() > 1 && t.back() == '/') t.pop_back();
        if (fs::path(t).filename().generic_string() == base) ++hits;
    }
    return hits > 1 ? s : base;
}

int run_analyze(const std::string& path, const std::string& refs,
                const std::vector<std::string>& level_flags,
                const std::string& format_name, const std::string& out_path,
                const std::string& extensions) {
    const auto format = parse_report_format(format_name);
    if (!format) throw UsageError("unknown format '" + format_name + "'");
    const ReferenceRegistry registry = resolve_registry(refs);
    const AnalysisReport report = build_analysis(
        path, registry, resolve_levels(level_flags), resolve_options(extensions));
    print_diagnostics(report.diagnostics);
    write_payload(emit_report(report, *format), out_path);
    return 0;
}

int run_trend(const std::vector<std::string>& paths, const std::string& metric,
              const std::string& level_name_arg, const std::string& glob,
              const std::string& agg_name, const std::string& format_name,
              const std::string& out_path, const std::string& extensions) {
    if (paths.size() < 2) throw UsageError("trend needs at least two tree paths");
    if (!metric_known(metric)) throw UsageError("unknown metric id '" + metric + "'");
    const auto level = parse_level(level_name_arg);
    if (!level) throw UsageError("unknown level '" + level_name_arg + "'");
    const auto agg = parse_aggregator(agg_name);
    if (!agg) throw UsageError("unknown aggregator '" + agg_name + "'");
    if (format_name != "csv" && format_name != "svg") {
        throw UsageError("unknown trend format '" + format_name + "'");
    }
    const SnapshotOptions options = resolve_options(extensions);

    std::vector<VersionSnapshot> snapshots;
    snapshots.reserve(paths.size());
    for (const std::string& path : paths) {
        snapshots.push_back(
            snapshot_tree(path, version_label_for(path, paths), options));
        print_diagnostics(snapshots.back().diagnostics);
    }
    SeriesSelector selector{metric, *level, glob, *agg};
    const TimeSeries series = build_series(snapshots, selector);
    write_payload(format_name == "csv" ? emit_trend_csv(series)
                                       : emit_trend_svg({series}),
                  out_path);
    return 0;
}

int run_gate(const std::string& path, const std::string& fail_on,
             const std::string& refs, const std::vector<std::string>& level_flags,
             const std::string& extensions) {
    const std::vector<std::string> fail_labels = split_list(fail_on);
    if (fail_labels.empty()) throw UsageError("--fail-on needs at least one label");
    const std::set<std::string> fail_set(fail_labels.begin(), fail_labels.end());
    const ReferenceRegistry registry = resolve_registry(refs);
    const AnalysisReport report = build_analysis(
        path, registry, resolve_levels(level_flags), resolve_options(extensions));
    print_diagnostics(report.diagnostics);
    int violations = 0;
    for (const ClassificationResult& c : report.classifications) {
        for (const auto& [source, label] : c.labels) {
            if (!fail_set.count(label)) continue;
            ++violations;
            std::cout << level_name(c.level) << " " << c.entity << " " << c.metric
                      << " " << format_number(c.value) << " [" << source << ": "
                      << label << "]\n";
        }
    }
    if (violations > 0) {
        std::cerr << "gate: " << violations << " violation(s)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maintainability metrics for C-family source trees"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    std::string path;
    std::string refs;
    std::vector<std::string> levels;
    std::string format = "json";
    std::string out_path;
    std::string extensions;

    CLI::App* analyze = app.add_subcommand("analyze", "measure one source tree");
    analyze->add_option("path", path, "tree root")->required();
    analyze->add_option("--refs", refs, "reference band JSON file");
    analyze->add_option("--level", levels, "restrict to level (repeatable)");
    analyze->add_option("--format", format, "json|csv|md");
    analyze->add_option("--out", out_path, "write payload to file");
    analyze->add_option("--extensions", extensions, "comma-separated extension list");

    std::vector<std::string> trend_paths;
    std::string metric;
    std::string trend_level;
    std::string select_glob = "**";
    std::string agg;
    std::string trend_format = "csv";

    CLI::App* trend = app.add_subcommand("trend", "metric series across versions");
    trend->add_option("paths", trend_paths, "ordered version tree roots")->required();
    trend->add_option("--metric", metric, "metric id")->required();
    trend->add_option("--level", trend_level, "file|function|class|directory")
        ->required();
    trend->add_option("--select", select_glob, "directory glob (default **)");
    trend->add_option("--agg", agg, "mean|max|total")->required();
    trend->add_option("--format", trend_format, "csv|svg");
    trend->add_option("--out", out_path, "write payload to file");
    trend->add_option("--extensions", extensions, "comma-separated extension list");

    std::string fail_on;
    CLI::App* gate = app.add_subcommand("gate", "fail on forbidden labels");
    gate->add_option("path", path, "tree root")->required();
    gate->add_option("--fail-on", fail_on, "comma-separated labels")->required();
    gate->add_option("--refs", refs, "reference band JSON file");
    gate->add_option("--level", levels, "restrict to level (repeatable)");
    gate->add_option("--extensions", extensions, "comma-separated extension list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) {
            return run_analyze(path, refs, levels, format, out_path, extensions);
        }
        if (app.got_subcommand(trend)) {
            return run_trend(trend_paths, metric, trend_level, select_glob, agg,
                             trend_format, out_path, extensions);
        }
        return run_gate(path, fail_on, refs, levels, extensions);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RegistryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
