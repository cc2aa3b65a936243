#include "maintmeter/metrics_complexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace maintmeter {

namespace {

const std::unordered_set<std::string_view>& decision_keywords() {
    static const std::unordered_set<std::string_view> kw = {
        "if", "for", "while", "case", "catch",
    };
    return kw;
}

// Keywords counted as Halstead operators; every other keyword is an operand.
const std::unordered_set<std::string_view>& operator_keywords() {
    static const std::unordered_set<std::string_view> kw = {
        "if", "else", "for", "while", "do", "switch", "case", "return",
        "goto", "break", "continue", "try", "catch", "new", "delete",
        "sizeof",
    };
    return kw;
}

}  // namespace

HalsteadMeasures halstead_measures(const std::vector<Token>& tokens) {
    std::unordered_map<std::string, long long> operators;
    std::unordered_map<std::string, long long> operands;
    for (const Token& tok : tokens) {
        switch (tok.kind) {
            case TokenKind::Preprocessor:
                break;
            case TokenKind::Operator:
                if (tok.text == "(") ++operators["()"];
                else if (tok.text == "[") ++operators["[]"];
                else if (tok.text == "{") ++operators["{}"];
                else if (tok.text == ")" || tok.text == "]" || tok.text == "}") {
                    // the opening half already counted the pair
                } else {
                    ++operators[tok.text];
                }
                break;
            case TokenKind::Keyword:
                if (operator_keywords().count(tok.text)) ++operators[tok.text];
                else ++operands[tok.text];
                break;
            default:
                ++operands[tok.text];
                break;
        }
    }
    HalsteadMeasures m;
    m.distinct_operators = static_cast<long long>(operators.size());
    m.distinct_operands = static_cast<long long>(operands.size());
    for (const auto& [text, count] : operators) m.total_operators += count;
    for (const auto& [text, count] : operands) m.total_operands += count;
    const long long n = m.vocabulary();
    const long long length = m.length();
    if (length > 0 && n >= 2) {
        m.volume = static_cast<double>(length) * std::log2(static_cast<double>(n));
    }
    if (m.distinct_operands > 0) {
        m.difficulty = (static_cast<double>(m.distinct_operators) / 2.0) *
                       (static_cast<double>(m.total_operands) /
                        static_cast<double>(m.distinct_operands));
    }
    m.effort = m.difficulty * m.volume;
    m.intelligent_content = m.difficulty > 0.0 ? m.volume / m.difficulty : 0.0;
    return m;
}

int cyclomatic_complexity(const std::vector<Token>& body) {
    int decisions = 0;
    for (const Token& tok : body) {
        if (tok.kind == TokenKind::Keyword && decision_keywords().count(tok.text)) {
            ++decisions;
        } else if (tok.kind == TokenKind::Operator &&
                   (tok.text == "&&" || tok.text == "||" || tok.text == "?")) {
            ++decisions;
        }
    }
    return 1 + decisions;
}

int cyclomatic_complexity(const FunctionEntity& fn) {
    return cyclomatic_complexity(fn.body_tokens);
}

int essential_complexity(const std::vector<Token>& body, int cc) {
    int gotos = 0;
    for (const Token& tok : body) {
        if (tok.kind == TokenKind::Keyword && tok.text == "goto") ++gotos;
    }
    return std::min(cc, 1 + gotos);
}

double decision_density(int cc, int sloc_in_function) {
    return static_cast<double>(cc - 1) / std::max(sloc_in_function, 1);
}

double essential_density(int cc, int essential) {
    if (cc <= 1) return 0.0;
    return static_cast<double>(essential - 1) / static_cast<double>(cc - 1);
}

FunctionComplexityRecord measure_function_complexity(const FunctionEntity& fn,
                                                     int sloc_in_function) {
    FunctionComplexityRecord rec;
    rec.cc = cyclomatic_complexity(fn.body_tokens);
    rec.essential = essential_complexity(fn.body_tokens, rec.cc);
    rec.decision_density = decision_density(rec.cc, sloc_in_function);
    rec.essential_density = essential_density(rec.cc, rec.essential);
    rec.halstead = halstead_measures(fn.body_tokens);
    return rec;
}

AggregateComplexityRecord aggregate_complexity(const std::vector<int>& member_cc) {
    AggregateComplexityRecord rec;
    if (member_cc.empty()) return rec;
    rec.empty = false;
    for (int cc : member_cc) {
        rec.total_cc += cc;
        rec.max_cc = std::max(rec.max_cc, cc);
    }
    rec.avg_cc = static_cast<double>(rec.total_cc) /
                 static_cast<double>(member_cc.size());
    return rec;
}

double maintainability_index(const MaintainabilityInputs& inputs) {
    return 171.0 - 5.2 * std::log(std::max(inputs.ave_volume, 1.0)) -
           0.23 * inputs.ave_cc - 16.2 * std::log(std::max(inputs.ave_sloc, 1.0)) +
           50.0 * std::sin(std::sqrt(2.4 * inputs.comment_ratio));
}

}  // namespace maintmeter
