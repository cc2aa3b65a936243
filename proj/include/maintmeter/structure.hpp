// Entity recognition over token streams: functions, classes, members,
// inheritance edges, and called names. Heuristic by design; favors
// precision over recall (no lambdas, operator overloads, or
// function-pointer declarations).
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "maintmeter/lexer.hpp"

namespace maintmeter {

struct FunctionEntity {
    std::string name;  // possibly qualified; destructors keep the ~
    std::string file;
    int start_line = 0;
    int end_line = 0;
    std::vector<Token> body_tokens;  // tokens strictly inside the outer braces
    std::string owner;               // owning class, empty for free functions
    int parameter_count = 0;
    bool degraded = false;
};

struct BaseRef {
    std::string name;
    bool resolved = false;

    bool operator==(const BaseRef&) const = default;
};

struct ClassEntity {
    std::string name;
    std::string file;
    int line = 0;
    std::vector<BaseRef> bases;
    std::vector<std::size_t> methods;  // indexes into EntityGraph::functions
    std::vector<std::string> instance_variables;
    std::set<std::string> span_identifiers;  // every identifier seen in the class span
    std::set<std::string> referenced_class_names;  // span ∩ known classes, minus self
    std::vector<std::string> children;  // direct derived classes, after linking
    int dit = 0;
    bool on_cycle = false;
};

struct EntityGraph {
    std::vector<FunctionEntity> functions;
    std::map<std::string, ClassEntity> classes;
    // resolved (derived, base) pairs, materialized by link_hierarchy
    std::vector<std::pair<std::string, std::string>> inheritance_edges;
    std::map<std::string, int> declarations_per_file;
    std::map<std::string, int> variables_per_file;
    std::set<std::string> degraded_files;
    std::vector<std::string> diagnostics;
    bool linked = false;
};

/// Recognize entities in all units and merge them into one graph.
/// Out-of-class definitions (`D::m() {...}`) attach to class D when D is
/// defined anywhere in the unit set.
EntityGraph extract_entities(const std::vector<SourceUnit>& units);

/// Resolve base names, detect inheritance cycles, compute depth-of-
/// inheritance and children lists, and intersect span identifiers with the
/// known class set.
void link_hierarchy(EntityGraph& graph);

/// Identifiers directly followed by `(` in a body, control keywords excluded.
std::set<std::string> called_names(const std::vector<Token>& body);

}  // namespace maintmeter
