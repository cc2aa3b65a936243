#include "maintmeter/metrics_oo.hpp"

#include <algorithm>

namespace maintmeter {

std::set<std::string> instance_variable_usage(const FunctionEntity& fn,
                                              const ClassEntity& cls) {
    std::set<std::string> used;
    for (const Token& tok : fn.body_tokens) {
        if (tok.kind != TokenKind::Identifier) continue;
        if (std::find(cls.instance_variables.begin(), cls.instance_variables.end(),
                      tok.text) != cls.instance_variables.end()) {
            used.insert(tok.text);
        }
    }
    return used;
}

long long lcom_from_usage(const std::vector<std::set<std::string>>& usage_sets) {
    if (usage_sets.size() < 2) return 0;
    long long disjoint = 0;
    long long sharing = 0;
    for (std::size_t i = 0; i < usage_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < usage_sets.size(); ++j) {
            const auto& a = usage_sets[i];
            const auto& b = usage_sets[j];
            const bool intersects =
                std::any_of(a.begin(), a.end(),
                            [&](const std::string& v) { return b.count(v) > 0; });
            if (intersects) ++sharing;
            else ++disjoint;
        }
    }
    return std::max<long long>(disjoint - sharing, 0);
}

std::optional<CKRecord> compute_ck(const ClassEntity& cls, const EntityGraph& graph,
                                   const std::map<std::size_t, int>& method_cc) {
    if (cls.on_cycle) return std::nullopt;
    CKRecord rec;
    rec.dit = cls.dit;
    rec.noc = static_cast<int>(cls.children.size());
    rec.cbo = static_cast<int>(cls.referenced_class_names.size());

    std::set<std::string> own_names;
    for (std::size_t idx : cls.methods) {
        own_names.insert(graph.functions[idx].name);
        if (auto it = method_cc.find(idx); it != method_cc.end()) {
            rec.wmc += it->second;
        }
    }
    std::set<std::string> external_calls;
    std::vector<std::set<std::string>> usage_sets;
    usage_sets.reserve(cls.methods.size());
    for (std::size_t idx : cls.methods) {
        const FunctionEntity& fn = graph.functions[idx];
        for (const std::string& name : called_names(fn.body_tokens)) {
            if (!own_names.count(name)) external_calls.insert(name);
        }
        usage_sets.push_back(instance_variable_usage(fn, cls));
    }
    rec.rfc = static_cast<int>(cls.methods.size() + external_calls.size());
    rec.lcom = lcom_from_usage(usage_sets);
    return rec;
}

}  // namespace maintmeter
