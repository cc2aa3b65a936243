#include "maintmeter/metrics_size.hpp"

#include <algorithm>
#include <unordered_set>

namespace maintmeter {

namespace {

const std::unordered_set<std::string_view>& block_keywords() {
    static const std::unordered_set<std::string_view> kw = {
        "if", "for", "while", "switch", "do", "try",
    };
    return kw;
}

// Leading keywords that can open a local declaration.
const std::unordered_set<std::string_view>& type_lead_keywords() {
    static const std::unordered_set<std::string_view> kw = {
        "auto", "bool", "char", "char16_t", "char32_t", "wchar_t", "short",
        "int", "long", "float", "double", "signed", "unsigned", "void",
        "const", "constexpr", "static", "volatile", "register",
        "thread_local", "mutable", "struct", "class", "union", "enum",
        "typename",
    };
    return kw;
}

bool statement_is_declaration(const std::vector<const Token*>& stmt) {
    if (stmt.empty()) return false;
    const Token& first = *stmt.front();
    if (first.kind == TokenKind::Keyword) {
        if (!type_lead_keywords().count(first.text)) return false;
        return std::any_of(stmt.begin(), stmt.end(), [](const Token* t) {
            return t->kind == TokenKind::Identifier;
        });
    }
    // identifier-led: look for `T x`, `T* x`, or `T& x` shapes before any `=`
    int depth = 0;
    for (std::size_t i = 0; i + 1 < stmt.size(); ++i) {
        const Token& tok = *stmt[i];
        if (tok.kind == TokenKind::Operator) {
            if (tok.text == "(") ++depth;
            else if (tok.text == ")") depth = std::max(0, depth - 1);
            else if (tok.text == "=" && depth == 0) return false;
        }
        if (depth != 0) continue;
        if (tok.kind != TokenKind::Identifier) continue;
        std::size_t j = i + 1;
        while (j < stmt.size() && stmt[j]->kind == TokenKind::Operator &&
               (stmt[j]->text == "*" || stmt[j]->text == "&")) {
            ++j;
        }
        if (j < stmt.size() && stmt[j]->kind == TokenKind::Identifier) {
            if (j == i + 1) return true;  // two consecutive identifiers
            // pointer/reference declarator: require a declarator tail
            if (j + 1 >= stmt.size()) return true;
            const Token& after = *stmt[j + 1];
            if (after.kind == TokenKind::Operator &&
                (after.text == "=" || after.text == "," || after.text == "[")) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

int count_statements(const std::vector<Token>& tokens) {
    int depth = 0;
    int count = 0;
    for (const Token& tok : tokens) {
        if (tok.kind == TokenKind::Operator) {
            if (tok.text == "(") ++depth;
            else if (tok.text == ")") depth = std::max(0, depth - 1);
            else if (tok.text == ";" && depth == 0) ++count;
        } else if (tok.kind == TokenKind::Keyword && block_keywords().count(tok.text)) {
            ++count;
        }
    }
    return count;
}

int count_local_declarations(const std::vector<Token>& body) {
    int count = 0;
    int paren_depth = 0;
    std::vector<const Token*> stmt;
    for (const Token& tok : body) {
        if (tok.kind == TokenKind::Preprocessor) continue;
        if (tok.kind == TokenKind::Operator) {
            if (tok.text == "(") ++paren_depth;
            else if (tok.text == ")") paren_depth = std::max(0, paren_depth - 1);
            if (paren_depth == 0 && (tok.text == "{" || tok.text == "}")) {
                stmt.clear();  // block boundary
                continue;
            }
            if (paren_depth == 0 && tok.text == ";") {
                if (statement_is_declaration(stmt)) ++count;
                stmt.clear();
                continue;
            }
        }
        stmt.push_back(&tok);
    }
    return count;
}

FileSizeRecord measure_file_size(const SourceUnit& unit, const EntityGraph& graph) {
    FileSizeRecord rec;
    rec.lines_in_file = unit.lines.total;
    rec.sloc = unit.lines.code;
    rec.cloc = unit.lines.comment;
    rec.comment_ratio =
        unit.lines.total > 0
            ? static_cast<double>(unit.lines.comment) / unit.lines.total
            : 0.0;
    rec.statements = count_statements(unit.tokens);
    rec.functions_in_file = static_cast<int>(
        std::count_if(graph.functions.begin(), graph.functions.end(),
                      [&](const FunctionEntity& fn) { return fn.file == unit.path; }));
    if (auto it = graph.declarations_per_file.find(unit.path);
        it != graph.declarations_per_file.end()) {
        rec.declarations_in_file = it->second;
    }
    if (auto it = graph.variables_per_file.find(unit.path);
        it != graph.variables_per_file.end()) {
        rec.variables_in_file = it->second;
    }
    rec.file_size_bytes = unit.byte_size;
    rec.degraded = unit.degraded || graph.degraded_files.count(unit.path) > 0;
    return rec;
}

FunctionSizeRecord measure_function_size(const FunctionEntity& fn,
                                         const SourceUnit& unit) {
    FunctionSizeRecord rec;
    rec.lines_in_function = fn.end_line - fn.start_line + 1;
    for (int line = fn.start_line; line <= fn.end_line; ++line) {
        const auto idx = static_cast<std::size_t>(line - 1);
        if (idx < unit.line_flags.size() && (unit.line_flags[idx] & lineflag::kCode)) {
            ++rec.sloc_in_function;
        }
    }
    rec.variables_in_function = count_local_declarations(fn.body_tokens);
    return rec;
}

}  // namespace maintmeter
