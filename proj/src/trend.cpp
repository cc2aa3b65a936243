#include "maintmeter/trend.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

#include "maintmeter/lexer.hpp"
#include "maintmeter/metrics_complexity.hpp"
#include "maintmeter/metrics_oo.hpp"
#include "maintmeter/metrics_size.hpp"
#include "maintmeter/structure.hpp"

namespace fs = std::filesystem;

namespace maintmeter {

namespace {

double percentile(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double rank = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const auto hi = static_cast<std::size_t>(std::ceil(rank));
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

std::string directory_of(const std::string& relative_path) {
    const auto slash = relative_path.rfind('/');
    return slash == std::string::npos ? std::string(".")
                                      : relative_path.substr(0, slash);
}

bool in_subtree(const std::string& dir, const std::string& file_path) {
    if (dir == ".") return true;
    return file_path.size() > dir.size() + 1 &&
           file_path.compare(0, dir.size(), dir) == 0 &&
           file_path[dir.size()] == '/';
}

struct FunctionMeasurements {
    int cc = 1;
    double volume = 0.0;
    int sloc = 0;
};

class SnapshotBuilder {
public:
    SnapshotBuilder(const fs::path& root, std::string label,
                    const SnapshotOptions& options)
        : root_(root), options_(options) {
        snapshot_.version_label = std::move(label);
    }

    VersionSnapshot build() {
        collect_files();
        lex_files();
        graph_ = extract_entities(units_);
        link_hierarchy(graph_);
        for (const auto& diag : graph_.diagnostics) {
            snapshot_.diagnostics.push_back(diag);
        }
        measure_files_and_functions();
        measure_classes();
        measure_directories();
        std::sort(snapshot_.records.begin(), snapshot_.records.end(),
                  [](const MetricRecord& a, const MetricRecord& b) {
                      return std::tuple(static_cast<int>(a.level), a.entity, a.metric) <
                             std::tuple(static_cast<int>(b.level), b.entity, b.metric);
                  });
        std::sort(snapshot_.diagnostics.begin(), snapshot_.diagnostics.end());
        return std::move(snapshot_);
    }

private:
    const fs::path& root_;
    const SnapshotOptions& options_;
    VersionSnapshot snapshot_;
    std::vector<SourceUnit> units_;
    std::vector<std::string> relative_paths_;
    EntityGraph graph_;
    std::map<std::string, std::size_t> unit_by_path_;
    std::map<std::size_t, FunctionMeasurements> fn_measurements_;

    void collect_files() {
        std::error_code ec;
        const auto status = fs::status(root_, ec);
        if (ec || !fs::is_directory(status)) {
            throw InputError("cannot read tree root '" + root_.string() + "'");
        }
        fs::recursive_directory_iterator it(
            root_, fs::directory_options::skip_permission_denied, ec);
        if (ec) {
            throw InputError("cannot read tree root '" + root_.string() + "'");
        }
        for (const auto& entry : it) {
            std::error_code entry_ec;
            if (!entry.is_regular_file(entry_ec) || entry_ec) continue;
            const std::string ext = entry.path().extension().string();
            if (std::find(options_.extensions.begin(), options_.extensions.end(),
                          ext) == options_.extensions.end()) {
                continue;
            }
            relative_paths_.push_back(
                entry.path().lexically_relative(root_).generic_string());
        }
        std::sort(relative_paths_.begin(), relative_paths_.end());
    }

    void lex_files() {
        for (const std::string& rel : relative_paths_) {
            std::ifstream in(root_ / rel, std::ios::binary);
            if (!in) {
                snapshot_.diagnostics.push_back(rel + ": unreadable; skipped");
                continue;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            SourceUnit unit = lex_source(buf.str(), rel);
            for (const LexError& err : unit.errors) {
                snapshot_.diagnostics.push_back(rel + ":" + std::to_string(err.line) +
                                                ": " + err.message);
            }
            unit_by_path_[rel] = units_.size();
            units_.push_back(std::move(unit));
        }
        snapshot_.file_count = units_.size();
    }

    void add(Level level, const std::string& entity, const std::string& path,
             std::string_view metric, double value) {
        snapshot_.records.push_back(
            {level, entity, path, std::string(metric), value});
    }

    void measure_files_and_functions() {
        // function indexes grouped by file, in extraction order
        std::map<std::string, std::vector<std::size_t>> functions_by_file;
        for (std::size_t idx = 0; idx < graph_.functions.size(); ++idx) {
            functions_by_file[graph_.functions[idx].file].push_back(idx);
        }
        for (const SourceUnit& unit : units_) {
            const FileSizeRecord fsz = measure_file_size(unit, graph_);
            if (fsz.degraded) ++snapshot_.degraded_count;
            const std::string& path = unit.path;
            add(Level::File, path, path, metric::kLinesInFile, fsz.lines_in_file);
            add(Level::File, path, path, metric::kSloc, fsz.sloc);
            add(Level::File, path, path, metric::kCloc, fsz.cloc);
            add(Level::File, path, path, metric::kCommentRatio, fsz.comment_ratio);
            add(Level::File, path, path, metric::kStatements, fsz.statements);
            add(Level::File, path, path, metric::kFunctionsInFile,
                fsz.functions_in_file);
            add(Level::File, path, path, metric::kDeclarationsInFile,
                fsz.declarations_in_file);
            add(Level::File, path, path, metric::kVariablesInFile,
                fsz.variables_in_file);
            add(Level::File, path, path, metric::kFileSize,
                static_cast<double>(fsz.file_size_bytes));
            const HalsteadMeasures file_h = halstead_measures(unit.tokens);
            add(Level::File, path, path, metric::kHpv, file_h.volume);
            add(Level::File, path, path, metric::kHpd, file_h.difficulty);
            add(Level::File, path, path, metric::kHme, file_h.effort);
            add(Level::File, path, path, metric::kHic, file_h.intelligent_content);

            const auto fns = functions_by_file.find(path);
            if (fns == functions_by_file.end()) continue;
            std::vector<int> ccs;
            double volume_sum = 0.0;
            double sloc_sum = 0.0;
            for (std::size_t idx : fns->second) {
                const FunctionEntity& fn = graph_.functions[idx];
                const FunctionSizeRecord size = measure_function_size(fn, unit);
                const FunctionComplexityRecord cx =
                    measure_function_complexity(fn, size.sloc_in_function);
                fn_measurements_[idx] = {cx.cc, cx.halstead.volume,
                                         size.sloc_in_function};
                ccs.push_back(cx.cc);
                volume_sum += cx.halstead.volume;
                sloc_sum += size.sloc_in_function;

                const std::string entity =
                    path + ":" + std::to_string(fn.start_line) + ":" + fn.name;
                add(Level::Function, entity, path, metric::kLinesInFunction,
                    size.lines_in_function);
                add(Level::Function, entity, path, metric::kSloc,
                    size.sloc_in_function);
                add(Level::Function, entity, path, metric::kVariablesInFunction,
                    size.variables_in_function);
                add(Level::Function, entity, path, metric::kMccc, cx.cc);
                add(Level::Function, entity, path, metric::kMcec, cx.essential);
                add(Level::Function, entity, path, metric::kMcdd,
                    cx.decision_density);
                add(Level::Function, entity, path, metric::kMced,
                    cx.essential_density);
                add(Level::Function, entity, path, metric::kHpv, cx.halstead.volume);
                add(Level::Function, entity, path, metric::kHpd,
                    cx.halstead.difficulty);
                add(Level::Function, entity, path, metric::kHme, cx.halstead.effort);
                add(Level::Function, entity, path, metric::kHic,
                    cx.halstead.intelligent_content);
            }
            const AggregateComplexityRecord agg = aggregate_complexity(ccs);
            if (!agg.empty) {
                add(Level::File, path, path, metric::kAcc, agg.avg_cc);
                add(Level::File, path, path, metric::kMcmcc, agg.max_cc);
                add(Level::File, path, path, metric::kTcc,
                    static_cast<double>(agg.total_cc));
                const auto n = static_cast<double>(fns->second.size());
                const double mi = maintainability_index(
                    {volume_sum / n, agg.avg_cc, sloc_sum / n, fsz.comment_ratio});
                add(Level::File, path, path, metric::kMi, mi);
            }
        }
    }

    void measure_classes() {
        std::map<std::size_t, int> method_cc;
        for (const auto& [idx, m] : fn_measurements_) method_cc[idx] = m.cc;
        for (const auto& [name, cls] : graph_.classes) {
            if (cls.on_cycle) {
                snapshot_.diagnostics.push_back(
                    cls.file + ": class '" + name +
                    "' is on an inheritance cycle; metrics omitted");
                continue;
            }
            const auto ck = compute_ck(cls, graph_, method_cc);
            if (!ck) continue;
            add(Level::Class, name, cls.file, metric::kWmc,
                static_cast<double>(ck->wmc));
            add(Level::Class, name, cls.file, metric::kDit, ck->dit);
            add(Level::Class, name, cls.file, metric::kNoc, ck->noc);
            add(Level::Class, name, cls.file, metric::kCbo, ck->cbo);
            add(Level::Class, name, cls.file, metric::kRfc, ck->rfc);
            add(Level::Class, name, cls.file, metric::kLcom,
                static_cast<double>(ck->lcom));
            if (cls.methods.empty()) continue;
            std::vector<int> ccs;
            std::vector<Token> concatenated;
            for (std::size_t idx : cls.methods) {
                if (auto it = fn_measurements_.find(idx); it != fn_measurements_.end()) {
                    ccs.push_back(it->second.cc);
                }
                const auto& body = graph_.functions[idx].body_tokens;
                concatenated.insert(concatenated.end(), body.begin(), body.end());
            }
            const AggregateComplexityRecord agg = aggregate_complexity(ccs);
            if (!agg.empty) {
                add(Level::Class, name, cls.file, metric::kAcc, agg.avg_cc);
                add(Level::Class, name, cls.file, metric::kMcmcc, agg.max_cc);
                add(Level::Class, name, cls.file, metric::kTcc,
                    static_cast<double>(agg.total_cc));
            }
            const HalsteadMeasures h = halstead_measures(concatenated);
            add(Level::Class, name, cls.file, metric::kHpv, h.volume);
            add(Level::Class, name, cls.file, metric::kHpd, h.difficulty);
            add(Level::Class, name, cls.file, metric::kHme, h.effort);
            add(Level::Class, name, cls.file, metric::kHic, h.intelligent_content);
        }
    }

    void measure_directories() {
        std::map<std::string, std::vector<std::string>> dirs;
        for (const SourceUnit& unit : units_) {
            std::string dir = directory_of(unit.path);
            while (true) {
                dirs[dir].push_back(unit.path);
                if (dir == ".") break;
                dir = directory_of(dir);
            }
        }
        snapshot_.directory_index = dirs;

        // per-file tallies reused for the subtree sums
        std::map<std::string, FileSizeRecord> file_sizes;
        for (const SourceUnit& unit : units_) {
            file_sizes[unit.path] = measure_file_size(unit, graph_);
        }
        for (const auto& [dir, files] : dirs) {
            double lines = 0, sloc = 0, cloc = 0, statements = 0, bytes = 0;
            double functions = 0, declarations = 0, variables = 0;
            for (const std::string& f : files) {
                const FileSizeRecord& fsz = file_sizes[f];
                lines += fsz.lines_in_file;
                sloc += fsz.sloc;
                cloc += fsz.cloc;
                statements += fsz.statements;
                bytes += static_cast<double>(fsz.file_size_bytes);
                functions += fsz.functions_in_file;
                declarations += fsz.declarations_in_file;
                variables += fsz.variables_in_file;
            }
            double classes = 0;
            for (const auto& [name, cls] : graph_.classes) {
                if (in_subtree(dir, cls.file)) ++classes;
            }
            add(Level::Directory, dir, dir, metric::kFiles,
                static_cast<double>(files.size()));
            add(Level::Directory, dir, dir, metric::kLines, lines);
            add(Level::Directory, dir, dir, metric::kSloc, sloc);
            add(Level::Directory, dir, dir, metric::kCloc, cloc);
            add(Level::Directory, dir, dir, metric::kStatements, statements);
            add(Level::Directory, dir, dir, metric::kBytes, bytes);
            add(Level::Directory, dir, dir, metric::kFunctions, functions);
            add(Level::Directory, dir, dir, metric::kClasses, classes);
            add(Level::Directory, dir, dir, metric::kDeclarations, declarations);
            add(Level::Directory, dir, dir, metric::kVariables, variables);

            std::vector<int> ccs;
            for (const auto& [idx, m] : fn_measurements_) {
                if (in_subtree(dir, graph_.functions[idx].file)) {
                    ccs.push_back(m.cc);
                }
            }
            const AggregateComplexityRecord agg = aggregate_complexity(ccs);
            if (!agg.empty) {
                add(Level::Directory, dir, dir, metric::kAcc, agg.avg_cc);
                add(Level::Directory, dir, dir, metric::kMcmcc, agg.max_cc);
                add(Level::Directory, dir, dir, metric::kTcc,
                    static_cast<double>(agg.total_cc));
            }
        }
    }
};

}  // namespace

StatSummary summarize_stats(std::vector<double> values) {
    StatSummary s;
    s.count = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
    s.median = percentile(values, 0.5);
    s.q1 = percentile(values, 0.25);
    s.q3 = percentile(values, 0.75);
    return s;
}

const std::vector<std::string>& default_source_extensions() {
    static const std::vector<std::string> exts = {
        ".h", ".hh", ".hpp", ".c", ".cc", ".cpp", ".cxx", ".icc",
    };
    return exts;
}

VersionSnapshot snapshot_tree(const fs::path& root, const std::string& version_label,
                              const SnapshotOptions& options) {
    return SnapshotBuilder(root, version_label, options).build();
}

std::optional<Aggregator> parse_aggregator(std::string_view name) {
    if (name == "mean") return Aggregator::Mean;
    if (name == "max") return Aggregator::Max;
    if (name == "total") return Aggregator::Total;
    return std::nullopt;
}

std::string_view aggregator_name(Aggregator agg) {
    switch (agg) {
        case Aggregator::Mean: return "mean";
        case Aggregator::Max: return "max";
        case Aggregator::Total: return "total";
    }
    return "max";
}

std::string describe_selector(const SeriesSelector& selector) {
    std::string out(aggregator_name(selector.agg));
    out += " ";
    out += selector.metric;
    out += " @ ";
    out += level_name(selector.level);
    out += " [";
    out += selector.directory_glob;
    out += "]";
    return out;
}

TimeSeries build_series(const std::vector<VersionSnapshot>& snapshots,
                        const SeriesSelector& selector) {
    if (!metric_known(selector.metric)) {
        throw UsageError("unknown metric id '" + selector.metric + "'");
    }
    TimeSeries series;
    series.selector = selector;
    for (const VersionSnapshot& snap : snapshots) {
        SeriesPoint point;
        point.version = snap.version_label;
        double sum = 0.0;
        double best = 0.0;
        std::size_t n = 0;
        for (const MetricRecord& rec : snap.records) {
            if (rec.level != selector.level || rec.metric != selector.metric) continue;
            if (!glob_match(selector.directory_glob, rec.path)) continue;
            sum += rec.value;
            best = n == 0 ? rec.value : std::max(best, rec.value);
            ++n;
        }
        if (n > 0) {
            point.missing = false;
            switch (selector.agg) {
                case Aggregator::Mean:
                    point.value = sum / static_cast<double>(n);
                    break;
                case Aggregator::Max:
                    point.value = best;
                    break;
                case Aggregator::Total:
                    point.value = sum;
                    break;
            }
        }
        series.points.push_back(std::move(point));
    }
    return series;
}

bool glob_match(std::string_view pattern, std::string_view path) {
    if (pattern.empty()) return path.empty();
    if (pattern.substr(0, 2) == "**") {
        std::string_view rest = pattern.substr(2);
        for (std::size_t k = 0; k <= path.size(); ++k) {
            if (glob_match(rest, path.substr(k))) return true;
        }
        if (!rest.empty() && rest.front() == '/') {
            // `a/**/b` also matches `a/b`
            for (std::size_t k = 0; k <= path.size(); ++k) {
                if (glob_match(rest.substr(1), path.substr(k))) return true;
            }
        }
        return false;
    }
    if (path.empty()) return pattern == "*";
    const char pc = pattern.front();
    if (pc == '*') {
        // any run of non-separator characters, shortest first
        for (std::size_t k = 0; k <= path.size(); ++k) {
            if (glob_match(pattern.substr(1), path.substr(k))) return true;
            if (k < path.size() && path[k] == '/') break;
        }
        return false;
    }
    if (pc == '?') {
        if (path.front() == '/') return false;
        return glob_match(pattern.substr(1), path.substr(1));
    }
    if (pc != path.front()) return false;
    return glob_match(pattern.substr(1), path.substr(1));
}

}  // namespace maintmeter
