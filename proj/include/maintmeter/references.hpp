// Data-driven registry of quality reference bands with source attribution,
// plus the classifier mapping metric values to per-source labels.
//
// Band semantics: `min` inclusive, `max` exclusive, null/absent bounds
// unbounded. Within one (metric, level, source) group bands must not
// overlap; gaps classify as "unclassified".
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maintmeter/record.hpp"

namespace maintmeter {

class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReferenceBand {
    std::string metric;
    Level level = Level::File;
    std::optional<double> min;  // inclusive; empty = unbounded below
    std::optional<double> max;  // exclusive; empty = unbounded above
    std::string label;
    std::string source;
    bool adjusted = false;  // bound differs from the literature as printed

    bool operator==(const ReferenceBand&) const = default;
};

struct ReferenceRegistry {
    std::vector<ReferenceBand> bands;  // stored sorted by (metric, level, source, min)

    bool operator==(const ReferenceRegistry&) const = default;
};

/// Parse and validate a registry document. Throws RegistryError naming the
/// offending band on overlap, malformed bounds, or unknown levels.
ReferenceRegistry load_references(const std::string& json_text);

/// The built-in default bands (comment ratio, SLOC, Halstead volume,
/// maintainability index, and maximum cyclomatic complexity references).
const ReferenceRegistry& built_in_references();

/// Canonical JSON form; load_references(serialize_references(r)) == r.
std::string serialize_references(const ReferenceRegistry& registry);

inline constexpr std::string_view kUnclassifiedLabel = "unclassified";

/// One (source, label) per source group that defines bands for
/// (metric, level); values outside every band of a group classify as
/// "unclassified". Groups for other metrics or levels stay silent.
std::vector<std::pair<std::string, std::string>> classify_value(
    const ReferenceRegistry& registry, std::string_view metric, Level level,
    double value);

}  // namespace maintmeter
