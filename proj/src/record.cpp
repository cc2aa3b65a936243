#include "maintmeter/record.hpp"

#include <array>

namespace maintmeter {

namespace {

struct CatalogEntry {
    std::string_view id;
    MetricGroup group;
};

constexpr std::array<CatalogEntry, 36> kCatalog = {{
    {metric::kLinesInFile, MetricGroup::Size},
    {metric::kSloc, MetricGroup::Size},
    {metric::kCloc, MetricGroup::Size},
    {metric::kCommentRatio, MetricGroup::Size},
    {metric::kStatements, MetricGroup::Size},
    {metric::kFunctionsInFile, MetricGroup::Size},
    {metric::kDeclarationsInFile, MetricGroup::Size},
    {metric::kVariablesInFile, MetricGroup::Size},
    {metric::kFileSize, MetricGroup::Size},
    {metric::kLinesInFunction, MetricGroup::Size},
    {metric::kVariablesInFunction, MetricGroup::Size},
    {metric::kFiles, MetricGroup::Size},
    {metric::kLines, MetricGroup::Size},
    {metric::kBytes, MetricGroup::Size},
    {metric::kFunctions, MetricGroup::Size},
    {metric::kClasses, MetricGroup::Size},
    {metric::kDeclarations, MetricGroup::Size},
    {metric::kVariables, MetricGroup::Size},
    {metric::kMccc, MetricGroup::Complexity},
    {metric::kMcec, MetricGroup::Complexity},
    {metric::kMcdd, MetricGroup::Complexity},
    {metric::kMced, MetricGroup::Complexity},
    {metric::kHpv, MetricGroup::Complexity},
    {metric::kHpd, MetricGroup::Complexity},
    {metric::kHme, MetricGroup::Complexity},
    {metric::kHic, MetricGroup::Complexity},
    {metric::kAcc, MetricGroup::Complexity},
    {metric::kMcmcc, MetricGroup::Complexity},
    {metric::kTcc, MetricGroup::Complexity},
    {metric::kMi, MetricGroup::Complexity},
    {metric::kWmc, MetricGroup::ObjectOriented},
    {metric::kDit, MetricGroup::ObjectOriented},
    {metric::kNoc, MetricGroup::ObjectOriented},
    {metric::kCbo, MetricGroup::ObjectOriented},
    {metric::kRfc, MetricGroup::ObjectOriented},
    {metric::kLcom, MetricGroup::ObjectOriented},
}};

}  // namespace

std::string_view level_name(Level level) {
    switch (level) {
        case Level::File: return "file";
        case Level::Function: return "function";
        case Level::Class: return "class";
        case Level::Directory: return "directory";
    }
    return "file";
}

std::optional<Level> parse_level(std::string_view name) {
    if (name == "file") return Level::File;
    if (name == "function") return Level::Function;
    if (name == "class") return Level::Class;
    if (name == "directory") return Level::Directory;
    return std::nullopt;
}

std::string_view metric_group_name(MetricGroup group) {
    switch (group) {
        case MetricGroup::Size: return "size";
        case MetricGroup::Complexity: return "complexity";
        case MetricGroup::ObjectOriented: return "object-oriented";
    }
    return "size";
}

bool metric_known(std::string_view id) {
    return metric_group(id).has_value();
}

std::optional<MetricGroup> metric_group(std::string_view id) {
    for (const auto& entry : kCatalog) {
        if (entry.id == id) return entry.group;
    }
    return std::nullopt;
}

}  // namespace maintmeter
