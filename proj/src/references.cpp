#include "maintmeter/references.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include <json.hpp>

namespace maintmeter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lower_of(const ReferenceBand& b) { return b.min.value_or(-kInf); }
double upper_of(const ReferenceBand& b) { return b.max.value_or(kInf); }

int level_rank(Level level) { return static_cast<int>(level); }

std::string band_name(const ReferenceBand& b) {
    return "band '" + b.label + "' (" + b.metric + ", " +
           std::string(level_name(b.level)) + ", " + b.source + ")";
}

void normalize_and_validate(ReferenceRegistry& registry) {
    for (const ReferenceBand& b : registry.bands) {
        if (b.label.empty()) {
            throw RegistryError("empty label in " + band_name(b));
        }
        if (b.metric.empty()) {
            throw RegistryError("empty metric id in " + band_name(b));
        }
        if (lower_of(b) > upper_of(b)) {
            throw RegistryError("malformed bounds in " + band_name(b));
        }
    }
    std::stable_sort(registry.bands.begin(), registry.bands.end(),
                     [](const ReferenceBand& a, const ReferenceBand& b) {
                         return std::tuple(a.metric, level_rank(a.level), a.source,
                                           lower_of(a), upper_of(a)) <
                                std::tuple(b.metric, level_rank(b.level), b.source,
                                           lower_of(b), upper_of(b));
                     });
    for (std::size_t i = 1; i < registry.bands.size(); ++i) {
        const ReferenceBand& prev = registry.bands[i - 1];
        const ReferenceBand& cur = registry.bands[i];
        const bool same_group = prev.metric == cur.metric &&
                                prev.level == cur.level && prev.source == cur.source;
        if (same_group && lower_of(cur) < upper_of(prev)) {
            throw RegistryError("overlapping bands in group (" + cur.metric + ", " +
                                std::string(level_name(cur.level)) + ", " +
                                cur.source + "): '" + prev.label + "' and '" +
                                cur.label + "'");
        }
    }
}

ReferenceRegistry build_defaults() {
    ReferenceRegistry reg;
    auto band = [&reg](std::string_view metric, Level level,
                       std::optional<double> min, std::optional<double> max,
                       std::string_view label, std::string_view source,
                       bool adjusted = false) {
        reg.bands.push_back({std::string(metric), level, min, max,
                             std::string(label), std::string(source), adjusted});
    };

    band(metric::kCommentRatio, Level::File, std::nullopt, 0.08, "below reference",
         "McCabe");
    band(metric::kCommentRatio, Level::File, 0.08, std::nullopt, "meets reference",
         "McCabe");

    // SLOC is integral, so "<= 60" is encoded exactly as [-inf, 61).
    band(metric::kSloc, Level::File, std::nullopt, 61, "within reference", "McCabe");
    band(metric::kSloc, Level::File, 61, std::nullopt, "above reference", "McCabe");

    band(metric::kHpv, Level::Function, std::nullopt, 1500, "within reference",
         "McCabe");
    band(metric::kHpv, Level::Function, 1500, std::nullopt, "above reference",
         "McCabe", true);
    band(metric::kHpv, Level::File, 100, 8000, "acceptable", "Verysoft", true);
    band(metric::kHpv, Level::File, 800, std::nullopt, "too many things",
         "Verysoft (file, strict)", true);
    band(metric::kHpv, Level::Function, 20, 1000, "acceptable", "Verysoft", true);
    band(metric::kHpv, Level::Function, 1000, std::nullopt, "too many things",
         "Verysoft", true);

    band(metric::kMi, Level::File, std::nullopt, 65, "poor maintainability",
         "Coleman-Lowther-Oman");
    band(metric::kMi, Level::File, 65, 85, "fair maintainability",
         "Coleman-Lowther-Oman", true);
    band(metric::kMi, Level::File, 85, std::nullopt, "excellent maintainability",
         "Coleman-Lowther-Oman");

    for (Level level : {Level::File, Level::Class}) {
        band(metric::kMcmcc, level, 1, 11, "low CC", "CppDepend");
        band(metric::kMcmcc, level, 11, 16, "medium CC", "CppDepend");
        band(metric::kMcmcc, level, 16, 31, "high CC", "CppDepend");
        band(metric::kMcmcc, level, 31, std::nullopt, "very high CC", "CppDepend",
             true);
        band(metric::kMcmcc, level, 1, 11, "low CC", "McCabe");
        band(metric::kMcmcc, level, 11, 21, "medium CC", "McCabe");
        band(metric::kMcmcc, level, 21, 51, "high CC", "McCabe", true);
        band(metric::kMcmcc, level, 51, std::nullopt, "very high CC", "McCabe",
             true);
    }

    normalize_and_validate(reg);
    return reg;
}

std::optional<double> parse_bound(const nlohmann::json& value,
                                  const std::string& where) {
    if (value.is_null()) return std::nullopt;
    if (!value.is_number()) {
        throw RegistryError("malformed bounds in " + where + ": expected number or null");
    }
    const double v = value.get<double>();
    if (std::isnan(v)) {
        throw RegistryError("malformed bounds in " + where + ": NaN");
    }
    return v;
}

}  // namespace

ReferenceRegistry load_references(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw RegistryError(std::string("reference document is not valid JSON: ") +
                            e.what());
    }
    if (!doc.is_object() || !doc.contains("references") ||
        !doc["references"].is_array()) {
        throw RegistryError("reference document must be {\"references\": [...]}");
    }
    ReferenceRegistry reg;
    for (const auto& group : doc["references"]) {
        if (!group.is_object()) {
            throw RegistryError("reference group must be an object");
        }
        const std::string metric = group.value("metric", std::string{});
        const std::string source = group.value("source", std::string{});
        const std::string level_text = group.value("level", std::string{});
        const auto level = parse_level(level_text);
        if (!level) {
            throw RegistryError("unknown level '" + level_text + "' in group (" +
                                metric + ", " + source + ")");
        }
        if (!group.contains("bands") || !group["bands"].is_array()) {
            throw RegistryError("group (" + metric + ", " + level_text + ", " +
                                source + ") has no bands array");
        }
        for (const auto& raw : group["bands"]) {
            ReferenceBand b;
            b.metric = metric;
            b.level = *level;
            b.source = source;
            b.label = raw.value("label", std::string{});
            const std::string where =
                "band '" + b.label + "' (" + metric + ", " + level_text + ", " +
                source + ")";
            b.min = raw.contains("min") ? parse_bound(raw["min"], where) : std::nullopt;
            b.max = raw.contains("max") ? parse_bound(raw["max"], where) : std::nullopt;
            b.adjusted = raw.value("adjusted", false);
            reg.bands.push_back(std::move(b));
        }
    }
    normalize_and_validate(reg);
    return reg;
}

const ReferenceRegistry& built_in_references() {
    static const ReferenceRegistry reg = build_defaults();
    return reg;
}

std::string serialize_references(const ReferenceRegistry& registry) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json doc;
    doc["references"] = ordered_json::array();
    // bands are stored sorted, so groups come out in deterministic order
    ordered_json* current = nullptr;
    std::string cur_metric, cur_source;
    Level cur_level = Level::File;
    for (const ReferenceBand& b : registry.bands) {
        if (!current || b.metric != cur_metric || b.level != cur_level ||
            b.source != cur_source) {
            ordered_json group;
            group["metric"] = b.metric;
            group["level"] = std::string(level_name(b.level));
            group["source"] = b.source;
            group["bands"] = ordered_json::array();
            doc["references"].push_back(std::move(group));
            current = &doc["references"].back();
            cur_metric = b.metric;
            cur_level = b.level;
            cur_source = b.source;
        }
        ordered_json jb;
        if (b.min) jb["min"] = *b.min; else jb["min"] = nullptr;
        if (b.max) jb["max"] = *b.max; else jb["max"] = nullptr;
        jb["label"] = b.label;
        if (b.adjusted) jb["adjusted"] = true;
        (*current)["bands"].push_back(std::move(jb));
    }
    return doc.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> classify_value(
    const ReferenceRegistry& registry, std::string_view metric, Level level,
    double value) {
    std::vector<std::pair<std::string, std::string>> result;
    std::size_t i = 0;
    const std::size_t n = registry.bands.size();
    while (i < n) {
        const ReferenceBand& head = registry.bands[i];
        std::size_t j = i;
        while (j < n && registry.bands[j].metric == head.metric &&
               registry.bands[j].level == head.level &&
               registry.bands[j].source == head.source) {
            ++j;
        }
        if (head.metric == metric && head.level == level) {
            std::string label(kUnclassifiedLabel);
            for (std::size_t k = i; k < j; ++k) {
                const ReferenceBand& b = registry.bands[k];
                if (value >= lower_of(b) && value < upper_of(b)) {
                    label = b.label;
                    break;
                }
            }
            result.emplace_back(head.source, std::move(label));
        }
        i = j;
    }
    return result;
}

}  // namespace maintmeter
