// Metric record primitives shared by every metric-producing module.
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace maintmeter {

/// Granularity a metric value is attached to.
enum class Level { File, Function, Class, Directory };

std::string_view level_name(Level level);
std::optional<Level> parse_level(std::string_view name);

enum class MetricGroup { Size, Complexity, ObjectOriented };

std::string_view metric_group_name(MetricGroup group);

// Canonical metric identifiers. Reports, reference bands, and trend
// selectors all key on these strings.
namespace metric {

// size group, file level
inline constexpr std::string_view kLinesInFile = "LinesInFile";
inline constexpr std::string_view kSloc = "SLOC";
inline constexpr std::string_view kCloc = "CLOC";
inline constexpr std::string_view kCommentRatio = "CommentRatio";
inline constexpr std::string_view kStatements = "Statements";
inline constexpr std::string_view kFunctionsInFile = "FunctionsInFile";
inline constexpr std::string_view kDeclarationsInFile = "DeclarationsInFile";
inline constexpr std::string_view kVariablesInFile = "VariablesInFile";
inline constexpr std::string_view kFileSize = "FileSize";

// size group, function level
inline constexpr std::string_view kLinesInFunction = "LinesInFunction";
inline constexpr std::string_view kVariablesInFunction = "VariablesInFunction";

// size group, directory level
inline constexpr std::string_view kFiles = "Files";
inline constexpr std::string_view kLines = "Lines";
inline constexpr std::string_view kBytes = "Bytes";
inline constexpr std::string_view kFunctions = "Functions";
inline constexpr std::string_view kClasses = "Classes";
inline constexpr std::string_view kDeclarations = "Declarations";
inline constexpr std::string_view kVariables = "Variables";

// complexity group
inline constexpr std::string_view kMccc = "MCCC";  // McCabe cyclomatic complexity
inline constexpr std::string_view kMcec = "MCEC";  // McCabe essential complexity
inline constexpr std::string_view kMcdd = "MCDD";  // McCabe decision density
inline constexpr std::string_view kMced = "MCED";  // McCabe essential density
inline constexpr std::string_view kHpv = "HPV";    // Halstead program volume
inline constexpr std::string_view kHpd = "HPD";    // Halstead program difficulty
inline constexpr std::string_view kHme = "HME";    // Halstead mental effort
inline constexpr std::string_view kHic = "HIC";    // Halstead intelligent content
inline constexpr std::string_view kAcc = "ACC";    // average cyclomatic complexity
inline constexpr std::string_view kMcmcc = "MCMCC";  // maximum cyclomatic complexity
inline constexpr std::string_view kTcc = "TCC";    // total cyclomatic complexity
inline constexpr std::string_view kMi = "MI";      // maintainability index

// object-oriented group, class level
inline constexpr std::string_view kWmc = "WMC";
inline constexpr std::string_view kDit = "DIT";
inline constexpr std::string_view kNoc = "NOC";
inline constexpr std::string_view kCbo = "CBO";
inline constexpr std::string_view kRfc = "RFC";
inline constexpr std::string_view kLcom = "LCOM";

}  // namespace metric

/// The universal measurement: one metric value for one entity at one level.
struct MetricRecord {
    Level level;
    std::string entity;  // file path, "file:line:name", class name, or directory path
    std::string path;    // tree-relative host file (or directory) path, for glob selection
    std::string metric;
    double value = 0.0;

    bool operator==(const MetricRecord&) const = default;
};

bool metric_known(std::string_view id);
std::optional<MetricGroup> metric_group(std::string_view id);

}  // namespace maintmeter
