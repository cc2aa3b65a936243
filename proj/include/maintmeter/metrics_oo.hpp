// Chidamber-Kemerer suite per class: WMC, DIT, NOC, CBO, RFC, LCOM.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maintmeter/structure.hpp"

namespace maintmeter {

struct CKRecord {
    long long wmc = 0;  // sum of method cyclomatic complexities
    int dit = 0;        // depth of inheritance; root = 0, external-only bases = 1
    int noc = 0;        // direct children over resolved edges
    int cbo = 0;        // distinct known classes referenced, self excluded
    int rfc = 0;        // methods + distinct called names not naming own methods
    long long lcom = 0; // max(P - Q, 0) over method pairs
};

/// Identifiers in the method body that name the class's instance variables.
std::set<std::string> instance_variable_usage(const FunctionEntity& fn,
                                              const ClassEntity& cls);

/// Pairwise cohesion: P = disjoint-usage pairs, Q = sharing pairs;
/// returns max(P - Q, 0). Fewer than two sets yields 0.
long long lcom_from_usage(const std::vector<std::set<std::string>>& usage_sets);

/// Full CK record. `method_cc` maps function indexes (EntityGraph::functions)
/// to cyclomatic complexity. Returns nothing for classes on an inheritance
/// cycle.
std::optional<CKRecord> compute_ck(const ClassEntity& cls, const EntityGraph& graph,
                                   const std::map<std::size_t, int>& method_cc);

}  // namespace maintmeter
