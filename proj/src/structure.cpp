#include "maintmeter/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace maintmeter {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

const std::unordered_set<std::string_view>& control_keywords() {
    static const std::unordered_set<std::string_view> kw = {
        "if", "else", "for", "while", "do", "switch", "case", "default",
        "return", "goto", "break", "continue", "catch", "try", "throw",
        "new", "delete", "sizeof",
    };
    return kw;
}

// Statement lead keywords that never start a variable declaration.
const std::unordered_set<std::string_view>& non_declaration_leads() {
    static const std::unordered_set<std::string_view> kw = {
        "using", "typedef", "friend", "template", "static_assert", "public",
        "private", "protected", "namespace", "operator", "return", "goto",
        "case", "break", "continue", "if", "for", "while", "do", "switch",
        "else", "try", "catch", "throw", "new", "delete", "asm", "goto",
    };
    return kw;
}

class UnitWalker {
public:
    UnitWalker(const SourceUnit& unit, EntityGraph& graph)
        : unit_(unit), t_(unit.tokens), graph_(graph) {}

    void walk() { walk_decl_region(0, t_.size(), nullptr); }

private:
    const SourceUnit& unit_;
    const std::vector<Token>& t_;
    EntityGraph& graph_;
    std::vector<std::string> namespace_stack_;
    bool reported_unbalanced_ = false;

    bool is_op(std::size_t i, std::string_view text) const {
        return i < t_.size() && t_[i].kind == TokenKind::Operator &&
               t_[i].text == text;
    }
    bool is_kw(std::size_t i, std::string_view text) const {
        return i < t_.size() && t_[i].kind == TokenKind::Keyword &&
               t_[i].text == text;
    }
    bool is_ident(std::size_t i) const {
        return i < t_.size() && t_[i].kind == TokenKind::Identifier;
    }

    void unbalanced(std::size_t i) {
        if (reported_unbalanced_) return;
        reported_unbalanced_ = true;
        const int line = i < t_.size() ? t_[i].line : unit_.lines.total;
        graph_.diagnostics.push_back(unit_.path + ":" + std::to_string(line) +
                                     ": unbalanced braces; remainder of file skipped");
        graph_.degraded_files.insert(unit_.path);
    }

    std::size_t find_match(std::size_t open_idx, std::string_view open,
                           std::string_view close, std::size_t end) const {
        int depth = 0;
        for (std::size_t k = open_idx; k < end; ++k) {
            if (is_op(k, open)) {
                ++depth;
            } else if (is_op(k, close)) {
                if (--depth == 0) return k;
            }
        }
        return npos;
    }

    // Template-argument skip with bail-out: if the '<' cannot be a template
    // bracket (a ';', '{' or '}' intervenes), treat it as a comparison.
    std::size_t skip_angles(std::size_t open_idx, std::size_t end) const {
        int depth = 0;
        for (std::size_t k = open_idx; k < end; ++k) {
            if (is_op(k, "<")) {
                ++depth;
            } else if (is_op(k, ">")) {
                if (--depth == 0) return k + 1;
            } else if (is_op(k, ">>")) {
                depth -= 2;
                if (depth <= 0) return k + 1;
            } else if (is_op(k, "(")) {
                const auto m = find_match(k, "(", ")", end);
                if (m == npos) return open_idx + 1;
                k = m;
            } else if (is_op(k, ";") || is_op(k, "{") || is_op(k, "}")) {
                return open_idx + 1;
            }
        }
        return open_idx + 1;
    }

    std::size_t consume_to_semi(std::size_t i, std::size_t end) const {
        std::size_t k = i;
        while (k < end && !is_op(k, ";")) {
            if (is_op(k, "{")) {
                const auto m = find_match(k, "{", "}", end);
                if (m == npos) return end;
                k = m + 1;
                continue;
            }
            if (is_op(k, "(")) {
                const auto m = find_match(k, "(", ")", end);
                if (m == npos) return end;
                k = m + 1;
                continue;
            }
            ++k;
        }
        return k < end ? k + 1 : end;
    }

    void walk_decl_region(std::size_t begin, std::size_t end, ClassEntity* cls) {
        std::size_t i = begin;
        while (i < end) {
            const Token& tok = t_[i];
            if (tok.kind == TokenKind::Preprocessor) {
                ++i;
                continue;
            }
            if (tok.kind == TokenKind::Keyword) {
                if (tok.text == "template") {
                    i = is_op(i + 1, "<") ? skip_angles(i + 1, end) : i + 1;
                    continue;
                }
                if (tok.text == "namespace") {
                    i = handle_namespace(i, end);
                    continue;
                }
                if (tok.text == "class" || tok.text == "struct") {
                    i = handle_class(i, end, cls);
                    continue;
                }
                if (tok.text == "union") {
                    i = handle_union(i, end);
                    continue;
                }
                if (tok.text == "enum") {
                    i = handle_enum(i, end);
                    continue;
                }
                if (tok.text == "using" || tok.text == "typedef") {
                    graph_.declarations_per_file[unit_.path] += 1;
                    i = consume_to_semi(i, end);
                    continue;
                }
                if (tok.text == "friend" || tok.text == "static_assert" ||
                    tok.text == "asm") {
                    i = consume_to_semi(i, end);
                    continue;
                }
                if ((tok.text == "public" || tok.text == "protected" ||
                     tok.text == "private") &&
                    is_op(i + 1, ":")) {
                    i += 2;
                    continue;
                }
                if (tok.text == "extern" && i + 1 < end &&
                    t_[i + 1].kind == TokenKind::StringLiteral && is_op(i + 2, "{")) {
                    const auto m = find_match(i + 2, "{", "}", end);
                    if (m == npos) {
                        unbalanced(i + 2);
                        return;
                    }
                    walk_decl_region(i + 3, m, cls);
                    i = m + 1;
                    continue;
                }
            }
            if (is_op(i, ";")) {
                ++i;
                continue;
            }
            if (is_op(i, "{")) {  // stray block: walk it as a plain region
                const auto m = find_match(i, "{", "}", end);
                if (m == npos) {
                    unbalanced(i);
                    return;
                }
                walk_decl_region(i + 1, m, cls);
                i = m + 1;
                continue;
            }
            if (is_op(i, "}")) {  // unbalanced closer at this scope
                unbalanced(i);
                ++i;
                continue;
            }
            i = scan_statement(i, end, cls);
        }
    }

    std::size_t handle_namespace(std::size_t i, std::size_t end) {
        std::size_t j = i + 1;
        std::vector<std::string> parts;
        while (is_ident(j)) {
            parts.push_back(t_[j].text);
            if (is_op(j + 1, "::")) {
                j += 2;
            } else {
                ++j;
                break;
            }
        }
        if (is_op(j, "=")) return consume_to_semi(j, end);  // namespace alias
        if (is_op(j, "{")) {
            const auto m = find_match(j, "{", "}", end);
            if (m == npos) {
                unbalanced(j);
                return end;
            }
            for (const auto& p : parts) namespace_stack_.push_back(p);
            walk_decl_region(j + 1, m, nullptr);
            namespace_stack_.resize(namespace_stack_.size() - parts.size());
            return m + 1;
        }
        if (is_op(j, ";")) return j + 1;
        return j;
    }

    std::size_t handle_enum(std::size_t i, std::size_t end) {
        std::size_t j = i + 1;
        if (is_kw(j, "class") || is_kw(j, "struct")) ++j;
        if (is_ident(j)) ++j;
        if (is_op(j, ":")) {
            ++j;
            while (j < end && !is_op(j, "{") && !is_op(j, ";")) ++j;
        }
        if (is_op(j, "{")) {
            const auto m = find_match(j, "{", "}", end);
            if (m == npos) {
                unbalanced(j);
                return end;
            }
            graph_.declarations_per_file[unit_.path] += 1;
            return m + 1;  // a trailing declarator, if any, flows as a statement
        }
        return j;  // forward declaration
    }

    std::size_t handle_union(std::size_t i, std::size_t end) {
        std::size_t j = i + 1;
        if (is_ident(j)) ++j;
        if (is_op(j, "{")) {
            const auto m = find_match(j, "{", "}", end);
            if (m == npos) {
                unbalanced(j);
                return end;
            }
            graph_.declarations_per_file[unit_.path] += 1;
            walk_decl_region(j + 1, m, nullptr);
            return m + 1;
        }
        return j;
    }

    std::size_t handle_class(std::size_t i, std::size_t end, ClassEntity* outer) {
        (void)outer;
        std::size_t j = i + 1;
        while (is_op(j, "[") && is_op(j + 1, "[")) {  // attributes
            const auto m = find_match(j, "[", "]", end);
            if (m == npos) return j + 1;
            j = m + 1;
        }
        std::string simple_name;
        while (is_ident(j)) {
            simple_name = t_[j].text;
            if (is_op(j + 1, "::")) {
                j += 2;
            } else {
                ++j;
                break;
            }
        }
        if (is_op(j, "<")) j = skip_angles(j, end);  // explicit specialization
        if (is_ident(j) && t_[j].text == "final") ++j;
        if (is_op(j, ";")) return j + 1;  // forward declaration

        std::vector<BaseRef> bases;
        if (is_op(j, ":")) {
            ++j;
            std::string base_name;
            while (j < end && !is_op(j, "{")) {
                const Token& tok = t_[j];
                if (tok.kind == TokenKind::Keyword &&
                    (tok.text == "public" || tok.text == "protected" ||
                     tok.text == "private" || tok.text == "virtual")) {
                    ++j;
                    continue;
                }
                if (tok.kind == TokenKind::Identifier) {
                    base_name = tok.text;
                    ++j;
                    continue;
                }
                if (is_op(j, "::")) {
                    ++j;
                    continue;
                }
                if (is_op(j, "<")) {
                    j = skip_angles(j, end);
                    continue;
                }
                if (is_op(j, ",")) {
                    push_base(bases, base_name, simple_name);
                    base_name.clear();
                    ++j;
                    continue;
                }
                if (is_op(j, ";")) return j + 1;  // malformed; bail out
                ++j;
            }
            push_base(bases, base_name, simple_name);
        }

        if (!is_op(j, "{")) return j;  // pointer/reference declaration etc.
        const auto m = find_match(j, "{", "}", end);
        if (m == npos) {
            unbalanced(j);
            return end;
        }
        if (simple_name.empty()) {  // anonymous: walk for nested content only
            walk_decl_region(j + 1, m, nullptr);
            return m + 1;
        }

        ClassEntity& entity = graph_.classes[simple_name];
        if (entity.name.empty()) {
            entity.name = simple_name;
            entity.file = unit_.path;
            entity.line = t_[i].line;
        } else if (entity.file != unit_.path || entity.line != t_[i].line) {
            graph_.diagnostics.push_back(unit_.path + ":" +
                                         std::to_string(t_[i].line) +
                                         ": duplicate class name '" + simple_name +
                                         "'; definitions merged");
        }
        for (auto& b : bases) {
            const bool dup = std::any_of(
                entity.bases.begin(), entity.bases.end(),
                [&](const BaseRef& e) { return e.name == b.name; });
            if (!dup) entity.bases.push_back(b);
        }
        for (std::size_t k = i; k <= m; ++k) {
            if (t_[k].kind == TokenKind::Identifier) {
                entity.span_identifiers.insert(t_[k].text);
            }
        }
        graph_.declarations_per_file[unit_.path] += 1;
        walk_decl_region(j + 1, m, &entity);
        return m + 1;  // a trailing declarator, if any, flows as a statement
    }

    void push_base(std::vector<BaseRef>& bases, const std::string& base_name,
                   const std::string& self) {
        if (base_name.empty()) return;
        if (base_name == self) {
            graph_.diagnostics.push_back(unit_.path + ": class '" + self +
                                         "' lists itself as a base; edge rejected");
            return;
        }
        const bool dup = std::any_of(bases.begin(), bases.end(), [&](const BaseRef& e) {
            return e.name == base_name;
        });
        if (!dup) bases.push_back({base_name, false});
    }

    // --- statement scanning -------------------------------------------------

    std::size_t scan_statement(std::size_t begin, std::size_t end, ClassEntity* cls) {
        std::vector<std::size_t> stmt;
        std::size_t k = begin;
        while (k < end) {
            if (t_[k].kind == TokenKind::Preprocessor) {
                ++k;
                continue;
            }
            if (is_op(k, ";")) {
                analyze_declaration(stmt, cls);
                return k + 1;
            }
            if (is_op(k, "(")) {
                const auto fn_end = try_function(k, begin, end, cls);
                if (fn_end != npos) return fn_end;
                const auto m = find_match(k, "(", ")", end);
                if (m == npos) {
                    unbalanced(k);
                    return end;
                }
                for (std::size_t x = k; x <= m; ++x) stmt.push_back(x);
                k = m + 1;
                continue;
            }
            if (is_op(k, "{")) {
                const auto m = find_match(k, "{", "}", end);
                if (m == npos) {
                    unbalanced(k);
                    return end;
                }
                if (m + 1 < end && is_op(m + 1, ";")) {
                    k = m + 1;  // brace initializer; the ';' closes the statement
                    continue;
                }
                return m + 1;  // unrecognized definition body; drop statement
            }
            if (is_op(k, "}")) {
                analyze_declaration(stmt, cls);
                unbalanced(k);
                return k + 1;
            }
            stmt.push_back(k);
            ++k;
        }
        analyze_declaration(stmt, cls);
        return end;
    }

    // Candidate: identifier chain (optionally ::-qualified, optional ~),
    // balanced parens, then an optional signature suffix ending in '{'.
    std::size_t try_function(std::size_t paren, std::size_t stmt_begin,
                             std::size_t end, ClassEntity* cls) {
        if (paren == stmt_begin) return npos;
        std::size_t j = paren - 1;
        if (!is_ident(j)) return npos;
        std::size_t cs = j;
        if (cs > stmt_begin && is_op(cs - 1, "~")) --cs;
        while (cs >= stmt_begin + 2 && is_op(cs - 1, "::") && is_ident(cs - 2)) {
            cs -= 2;
        }
        if (cs > stmt_begin) {
            const Token& prev = t_[cs - 1];
            if (prev.kind == TokenKind::Keyword && control_keywords().count(prev.text)) {
                return npos;
            }
            if (prev.kind == TokenKind::Operator &&
                (prev.text == "=" || prev.text == "." || prev.text == "->")) {
                return npos;
            }
        }
        const auto close = find_match(paren, "(", ")", end);
        if (close == npos) return npos;
        const auto body_open = skip_signature_suffix(close + 1, end);
        if (body_open == npos) return npos;
        const auto body_close = find_match(body_open, "{", "}", end);
        if (body_close == npos) {
            unbalanced(body_open);
            return end;
        }

        FunctionEntity fn;
        fn.file = unit_.path;
        fn.degraded = unit_.degraded;
        for (std::size_t x = cs; x < paren; ++x) fn.name += t_[x].text;
        fn.start_line = t_[cs].line;
        fn.end_line = t_[body_close].line;
        fn.body_tokens.assign(t_.begin() + static_cast<std::ptrdiff_t>(body_open) + 1,
                              t_.begin() + static_cast<std::ptrdiff_t>(body_close));
        fn.parameter_count = count_parameters(paren, close);
        if (cls) {
            fn.owner = cls->name;
        } else if (!namespace_stack_.empty() && fn.name.find("::") == std::string::npos) {
            std::string prefix;
            for (const auto& ns : namespace_stack_) {
                if (ns.empty()) continue;
                if (!prefix.empty()) prefix += "::";
                prefix += ns;
            }
            if (!prefix.empty()) fn.name = prefix + "::" + fn.name;
        }
        graph_.declarations_per_file[unit_.path] += 1;
        graph_.functions.push_back(std::move(fn));
        if (cls) cls->methods.push_back(graph_.functions.size() - 1);
        return body_close + 1;
    }

    // Returns the index of the body '{', or npos when the parens do not
    // belong to a function definition.
    std::size_t skip_signature_suffix(std::size_t k, std::size_t end) const {
        while (k < end) {
            const Token& tok = t_[k];
            if (tok.kind == TokenKind::Keyword) {
                if (tok.text == "const" || tok.text == "volatile" ||
                    tok.text == "mutable") {
                    ++k;
                    continue;
                }
                if (tok.text == "noexcept" || tok.text == "throw") {
                    if (is_op(k + 1, "(")) {
                        const auto m = find_match(k + 1, "(", ")", end);
                        if (m == npos) return npos;
                        k = m + 1;
                    } else {
                        ++k;
                    }
                    continue;
                }
                return npos;
            }
            if (tok.kind == TokenKind::Identifier) {
                if (tok.text == "override" || tok.text == "final") {
                    ++k;
                    continue;
                }
                return npos;
            }
            if (tok.kind != TokenKind::Operator) return npos;
            if (tok.text == "{") return k;
            if (tok.text == ";" || tok.text == "=" || tok.text == ",") return npos;
            if (tok.text == "&" || tok.text == "&&") {
                ++k;
                continue;
            }
            if (tok.text == "[") {  // [[attribute]]
                const auto m = find_match(k, "[", "]", end);
                if (m == npos) return npos;
                k = m + 1;
                continue;
            }
            if (tok.text == "->") {  // trailing return type
                ++k;
                while (k < end) {
                    if (is_op(k, "(")) {
                        const auto m = find_match(k, "(", ")", end);
                        if (m == npos) return npos;
                        k = m + 1;
                        continue;
                    }
                    if (is_op(k, "<")) {
                        k = skip_angles(k, end);
                        continue;
                    }
                    if (is_op(k, "{") || is_op(k, ";") || is_op(k, "=") ||
                        is_op(k, "}")) {
                        break;
                    }
                    ++k;
                }
                continue;
            }
            if (tok.text == ":") {  // constructor initializer list
                ++k;
                while (k < end) {
                    if (is_op(k, "(")) {
                        const auto m = find_match(k, "(", ")", end);
                        if (m == npos) return npos;
                        k = m + 1;
                        continue;
                    }
                    if (is_op(k, "<")) {
                        k = skip_angles(k, end);
                        continue;
                    }
                    if (is_op(k, "{")) {
                        if (k > 0 && is_ident(k - 1)) {  // member brace-init
                            const auto m = find_match(k, "{", "}", end);
                            if (m == npos) return npos;
                            k = m + 1;
                            continue;
                        }
                        return k;  // function body
                    }
                    if (is_op(k, ";") || is_op(k, "}")) return npos;
                    ++k;
                }
                return npos;
            }
            return npos;
        }
        return npos;
    }

    int count_parameters(std::size_t open, std::size_t close) const {
        if (close == open + 1) return 0;
        if (close == open + 2 && is_kw(open + 1, "void")) return 0;
        int depth = 0;
        int commas = 0;
        for (std::size_t k = open + 1; k < close; ++k) {
            if (is_op(k, "(")) {
                ++depth;
            } else if (is_op(k, ")")) {
                --depth;
            } else if (depth == 0 && is_op(k, ",")) {
                ++commas;
            }
        }
        return commas + 1;
    }

    // Variable-declaration heuristic over a finished statement. Records
    // declared names for file- and class-scope tallies.
    void analyze_declaration(const std::vector<std::size_t>& stmt, ClassEntity* cls) {
        if (stmt.empty()) return;
        const Token& first = t_[stmt.front()];
        if (first.kind == TokenKind::Keyword && non_declaration_leads().count(first.text)) {
            return;
        }
        bool in_init = false;
        int angle = 0;
        std::vector<std::string> names;
        for (std::size_t si = 0; si < stmt.size(); ++si) {
            const Token& tok = t_[stmt[si]];
            if (tok.kind == TokenKind::Operator) {
                if (tok.text == "=") {
                    in_init = true;
                    continue;
                }
                if (tok.text == "," && angle == 0) {
                    in_init = false;
                    continue;
                }
                if (!in_init) {
                    if (tok.text == "(") return;  // prototype or expression
                    if (tok.text == "<") ++angle;
                    else if (tok.text == ">") angle = std::max(0, angle - 1);
                    else if (tok.text == ">>") angle = std::max(0, angle - 2);
                    else if (tok.text == "[") {
                        int d = 1;
                        ++si;
                        while (si < stmt.size() && d > 0) {
                            if (is_op(stmt[si], "[")) ++d;
                            else if (is_op(stmt[si], "]")) --d;
                            ++si;
                        }
                        --si;
                    }
                }
                continue;
            }
            if (in_init || angle > 0) continue;
            if (tok.kind == TokenKind::Identifier) {
                if (si + 1 >= stmt.size()) {
                    names.push_back(tok.text);
                } else {
                    const Token& next = t_[stmt[si + 1]];
                    if (next.kind == TokenKind::Operator &&
                        (next.text == "," || next.text == "=" || next.text == "[" ||
                         next.text == ":")) {
                        names.push_back(tok.text);
                    }
                }
            }
        }
        if (names.empty()) return;
        graph_.declarations_per_file[unit_.path] += 1;
        graph_.variables_per_file[unit_.path] += static_cast<int>(names.size());
        if (cls) {
            for (const auto& nm : names) {
                if (std::find(cls->instance_variables.begin(),
                              cls->instance_variables.end(),
                              nm) == cls->instance_variables.end()) {
                    cls->instance_variables.push_back(nm);
                }
            }
        }
    }
};

void attach_qualified_methods(EntityGraph& graph) {
    for (std::size_t idx = 0; idx < graph.functions.size(); ++idx) {
        FunctionEntity& fn = graph.functions[idx];
        if (!fn.owner.empty()) continue;
        const auto qual = fn.name.rfind("::");
        if (qual == std::string::npos) continue;
        const std::string head = fn.name.substr(0, qual);
        const std::string last = fn.name.substr(qual + 2);
        const auto prev = head.rfind("::");
        const std::string candidate =
            prev == std::string::npos ? head : head.substr(prev + 2);
        auto it = graph.classes.find(candidate);
        if (it == graph.classes.end()) continue;
        fn.owner = candidate;
        fn.name = last;
        it->second.methods.push_back(idx);
        for (const Token& tok : fn.body_tokens) {
            if (tok.kind == TokenKind::Identifier) {
                it->second.span_identifiers.insert(tok.text);
            }
        }
    }
}

// Marks every class that sits on a resolved-inheritance cycle.
void detect_cycles(EntityGraph& graph) {
    enum class Color { White, Gray, Black };
    std::map<std::string, Color> color;
    for (const auto& [name, cls] : graph.classes) color[name] = Color::White;

    std::vector<std::string> stack;
    // Iterative DFS along derived -> base edges.
    struct Frame {
        std::string name;
        std::size_t next_base = 0;
    };
    for (const auto& [start, cls0] : graph.classes) {
        if (color[start] != Color::White) continue;
        std::vector<Frame> frames{{start}};
        color[start] = Color::Gray;
        stack.push_back(start);
        while (!frames.empty()) {
            Frame& frame = frames.back();
            const ClassEntity& cls = graph.classes.at(frame.name);
            bool descended = false;
            while (frame.next_base < cls.bases.size()) {
                const BaseRef& base = cls.bases[frame.next_base++];
                if (!base.resolved) continue;
                const Color c = color[base.name];
                if (c == Color::White) {
                    color[base.name] = Color::Gray;
                    stack.push_back(base.name);
                    frames.push_back({base.name});
                    descended = true;
                    break;
                }
                if (c == Color::Gray) {  // back edge: cycle found
                    std::string msg = "inheritance cycle:";
                    auto it = std::find(stack.begin(), stack.end(), base.name);
                    for (; it != stack.end(); ++it) {
                        graph.classes.at(*it).on_cycle = true;
                        msg += " " + *it + " ->";
                    }
                    msg += " " + base.name;
                    graph.diagnostics.push_back(msg);
                }
            }
            if (!descended) {
                color[frame.name] = Color::Black;
                stack.pop_back();
                frames.pop_back();
            }
        }
    }
}

int compute_dit(const EntityGraph& graph, const ClassEntity& cls,
                std::map<std::string, int>& memo) {
    auto found = memo.find(cls.name);
    if (found != memo.end()) return found->second;
    memo[cls.name] = 0;  // provisional; real cycles are excluded before this runs
    int best = 0;
    for (const BaseRef& base : cls.bases) {
        int candidate = 1;  // external or broken base contributes one level
        if (base.resolved) {
            const ClassEntity& b = graph.classes.at(base.name);
            if (!b.on_cycle) candidate = 1 + compute_dit(graph, b, memo);
        }
        best = std::max(best, candidate);
    }
    memo[cls.name] = best;
    return best;
}

}  // namespace

EntityGraph extract_entities(const std::vector<SourceUnit>& units) {
    EntityGraph graph;
    for (const SourceUnit& unit : units) {
        if (unit.degraded) graph.degraded_files.insert(unit.path);
        UnitWalker(unit, graph).walk();
    }
    attach_qualified_methods(graph);
    return graph;
}

void link_hierarchy(EntityGraph& graph) {
    for (auto& [name, cls] : graph.classes) {
        for (BaseRef& base : cls.bases) {
            base.resolved = graph.classes.count(base.name) > 0;
        }
        cls.children.clear();
        cls.on_cycle = false;
    }
    detect_cycles(graph);

    graph.inheritance_edges.clear();
    for (const auto& [name, cls] : graph.classes) {
        for (const BaseRef& base : cls.bases) {
            if (!base.resolved) continue;
            if (cls.on_cycle || graph.classes.at(base.name).on_cycle) continue;
            graph.inheritance_edges.emplace_back(name, base.name);
            graph.classes.at(base.name).children.push_back(name);
        }
    }

    std::map<std::string, int> memo;
    for (auto& [name, cls] : graph.classes) {
        cls.dit = cls.on_cycle ? 0 : compute_dit(graph, cls, memo);
        cls.referenced_class_names.clear();
        for (const std::string& id : cls.span_identifiers) {
            if (id != cls.name && graph.classes.count(id)) {
                cls.referenced_class_names.insert(id);
            }
        }
    }
    graph.linked = true;
}

std::set<std::string> called_names(const std::vector<Token>& body) {
    std::set<std::string> names;
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
        if (body[i].kind == TokenKind::Identifier &&
            body[i + 1].kind == TokenKind::Operator && body[i + 1].text == "(") {
            names.insert(body[i].text);
        }
    }
    return names;
}

}  // namespace maintmeter
