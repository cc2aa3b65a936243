#include <doctest.h>

#include <algorithm>
#include <string>

#include "maintmeter/references.hpp"

using namespace maintmeter;

namespace {

std::string label_of(const std::vector<std::pair<std::string, std::string>>& labels,
                     const std::string& source) {
    for (const auto& [src, label] : labels) {
        if (src == source) return label;
    }
    return "<missing>";
}

}  // namespace

TEST_CASE("empty registry classifies nothing") {
    const ReferenceRegistry reg = load_references(R"({"references": []})");
    CHECK(reg.bands.empty());
    CHECK(classify_value(reg, "MI", Level::File, 42).empty());
}

TEST_CASE("built-in registry carries the maintainability bands") {
    const ReferenceRegistry& reg = built_in_references();
    const auto at = [&](double v) {
        return label_of(classify_value(reg, "MI", Level::File, v),
                        "Coleman-Lowther-Oman");
    };
    CHECK(at(50) == "poor maintainability");
    CHECK(at(64.999) == "poor maintainability");
    CHECK(at(65) == "fair maintainability");  // inclusive lower bound
    CHECK(at(84.5) == "fair maintainability");
    CHECK(at(85) == "excellent maintainability");
    CHECK(at(90) == "excellent maintainability");
}

TEST_CASE("MCMCC 12 is medium under both sources") {
    const ReferenceRegistry& reg = built_in_references();
    const auto labels = classify_value(reg, "MCMCC", Level::Class, 12);
    REQUIRE(labels.size() == 2);
    CHECK(label_of(labels, "CppDepend") == "medium CC");
    CHECK(label_of(labels, "McCabe") == "medium CC");
}

TEST_CASE("each source group answers exactly once") {
    const ReferenceRegistry& reg = built_in_references();
    for (double v : {-10.0, 0.0, 0.5, 10.0, 64.0, 65.0, 100.0, 5000.0}) {
        const auto labels = classify_value(reg, "MI", Level::File, v);
        CHECK(labels.size() == 1);
        const auto hpv = classify_value(reg, "HPV", Level::Function, v);
        CHECK(hpv.size() == 2);  // McCabe + Verysoft
        std::vector<std::string> sources;
        for (const auto& [src, label] : hpv) sources.push_back(src);
        CHECK(std::is_sorted(sources.begin(), sources.end()));
    }
}

TEST_CASE("gaps classify as unclassified") {
    const ReferenceRegistry& reg = built_in_references();
    // Verysoft function-level acceptance starts at 20
    const auto labels = classify_value(reg, "HPV", Level::Function, 5.0);
    CHECK(label_of(labels, "Verysoft") == "unclassified");
    CHECK(label_of(labels, "McCabe") == "within reference");
    // MCMCC below 1 sits before every band
    const auto cc = classify_value(reg, "MCMCC", Level::Class, 0.5);
    CHECK(label_of(cc, "CppDepend") == "unclassified");
}

TEST_CASE("comment ratio direction: at or above 0.08 meets the reference") {
    const ReferenceRegistry& reg = built_in_references();
    const auto below = classify_value(reg, "CommentRatio", Level::File, 0.05);
    const auto at = classify_value(reg, "CommentRatio", Level::File, 0.08);
    CHECK(label_of(below, "McCabe") == "below reference");
    CHECK(label_of(at, "McCabe") == "meets reference");
}

TEST_CASE("sloc reference: 60 within, 61 above") {
    const ReferenceRegistry& reg = built_in_references();
    CHECK(label_of(classify_value(reg, "SLOC", Level::File, 60), "McCabe") ==
          "within reference");
    CHECK(label_of(classify_value(reg, "SLOC", Level::File, 61), "McCabe") ==
          "above reference");
}

TEST_CASE("unrelated metrics stay silent") {
    const ReferenceRegistry& reg = built_in_references();
    CHECK(classify_value(reg, "WMC", Level::Class, 10).empty());
    CHECK(classify_value(reg, "MI", Level::Function, 70).empty());  // wrong level
}

TEST_CASE("overlapping bands within one source group are rejected") {
    const std::string doc = R"({"references": [
        {"metric": "MCMCC", "level": "class", "source": "X", "bands": [
            {"min": 1, "max": 12, "label": "low"},
            {"min": 11, "max": 20, "label": "medium"}
        ]}
    ]})";
    CHECK_THROWS_AS(load_references(doc), RegistryError);
    CHECK_THROWS_WITH_AS(load_references(doc),
                         doctest::Contains("overlapping bands"), RegistryError);
}

TEST_CASE("same ranges under different sources may coexist") {
    const std::string doc = R"({"references": [
        {"metric": "MCMCC", "level": "class", "source": "X",
         "bands": [{"min": 1, "max": 12, "label": "low"}]},
        {"metric": "MCMCC", "level": "class", "source": "Y",
         "bands": [{"min": 1, "max": 12, "label": "small"}]}
    ]})";
    const ReferenceRegistry reg = load_references(doc);
    const auto labels = classify_value(reg, "MCMCC", Level::Class, 5);
    REQUIRE(labels.size() == 2);
    CHECK(label_of(labels, "X") == "low");
    CHECK(label_of(labels, "Y") == "small");
}

TEST_CASE("malformed bounds and unknown levels are load errors") {
    CHECK_THROWS_WITH_AS(
        load_references(R"({"references": [{"metric": "MI", "level": "file",
            "source": "S", "bands": [{"min": 9, "max": 1, "label": "bad"}]}]})"),
        doctest::Contains("malformed bounds"), RegistryError);
    CHECK_THROWS_WITH_AS(
        load_references(R"({"references": [{"metric": "MI", "level": "galaxy",
            "source": "S", "bands": [{"min": 1, "max": 2, "label": "ok"}]}]})"),
        doctest::Contains("unknown level"), RegistryError);
    CHECK_THROWS_AS(
        load_references(R"({"references": [{"metric": "MI", "level": "file",
            "source": "S", "bands": [{"min": 1, "max": 2, "label": ""}]}]})"),
        RegistryError);
    CHECK_THROWS_AS(load_references("not json at all"), RegistryError);
}

TEST_CASE("round-trip: serialize then reload is band-for-band equal") {
    const ReferenceRegistry& reg = built_in_references();
    const std::string text = serialize_references(reg);
    const ReferenceRegistry reloaded = load_references(text);
    REQUIRE(reloaded.bands.size() == reg.bands.size());
    for (std::size_t i = 0; i < reg.bands.size(); ++i) {
        CHECK(reloaded.bands[i] == reg.bands[i]);
    }
    // and the README example document loads
    const std::string example = R"({"references":[{"metric":"MI","level":"file",
        "bands":[{"min":null,"max":65,"label":"poor maintainability"},
                 {"min":65,"max":85,"label":"fair maintainability"},
                 {"min":85,"max":null,"label":"excellent maintainability"}],
        "source":"Coleman-Lowther-Oman"}]})";
    const ReferenceRegistry example_reg = load_references(example);
    CHECK(example_reg.bands.size() == 3);
    const ReferenceRegistry again =
        load_references(serialize_references(example_reg));
    CHECK(again == example_reg);
}

TEST_CASE("property: classification is monotone within a source group") {
    const ReferenceRegistry& reg = built_in_references();
    // walking MCMCC upward never revisits an earlier CppDepend band
    std::vector<std::string> seen;
    for (int v = 1; v <= 80; ++v) {
        const std::string label =
            label_of(classify_value(reg, "MCMCC", Level::Class, v), "CppDepend");
        if (seen.empty() || seen.back() != label) seen.push_back(label);
    }
    CHECK(seen == std::vector<std::string>{"low CC", "medium CC", "high CC",
                                           "very high CC"});
}

TEST_CASE("adjusted gap closures are flagged in the defaults") {
    const ReferenceRegistry& reg = built_in_references();
    int adjusted = 0;
    for (const ReferenceBand& b : reg.bands) {
        if (b.adjusted) ++adjusted;
    }
    CHECK(adjusted >= 6);  // MI fair, MCMCC closures at both levels, HPV bounds
}
