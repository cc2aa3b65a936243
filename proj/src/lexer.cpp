#include "maintmeter/lexer.hpp"

#include <array>
#include <unordered_set>
#include <utility>

namespace maintmeter {

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
    // C++14 keywords, alternative operator spellings included.
    static const std::unordered_set<std::string_view> kw = {
        "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand",
        "bitor", "bool", "break", "case", "catch", "char", "char16_t",
        "char32_t", "class", "compl", "const", "constexpr", "const_cast",
        "continue", "decltype", "default", "delete", "do", "double",
        "dynamic_cast", "else", "enum", "explicit", "export", "extern",
        "false", "float", "for", "friend", "goto", "if", "inline", "int",
        "long", "mutable", "namespace", "new", "noexcept", "not", "not_eq",
        "nullptr", "operator", "or", "or_eq", "private", "protected",
        "public", "register", "reinterpret_cast", "return", "short",
        "signed", "sizeof", "static", "static_assert", "static_cast",
        "struct", "switch", "template", "this", "thread_local", "throw",
        "true", "try", "typedef", "typeid", "typename", "union", "unsigned",
        "using", "virtual", "void", "volatile", "wchar_t", "while", "xor",
        "xor_eq",
    };
    return kw;
}

// Multi-character operators, longest first; maximal munch.
constexpr std::array<std::string_view, 4> kOps3 = {"<<=", ">>=", "->*", "..."};
constexpr std::array<std::string_view, 21> kOps2 = {
    "::", "->", "<=", ">=", "==", "!=", "&&", "||", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "++", "--", ".*", "<<", ">>",
};
constexpr std::string_view kOps1 = "+-*/%^&|~!=<>?:;,.()[]{}";

constexpr std::string_view kReplacementChar = "\xEF\xBF\xBD";

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex_digit(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == '$' || static_cast<unsigned char>(c) >= 0x80;
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string sanitize_utf8(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        const auto b = static_cast<unsigned char>(in[i]);
        if (b < 0x80) {
            out += static_cast<char>(b);
            ++i;
            continue;
        }
        int len = 0;
        if (b >= 0xC2 && b <= 0xDF) len = 2;
        else if (b >= 0xE0 && b <= 0xEF) len = 3;
        else if (b >= 0xF0 && b <= 0xF4) len = 4;
        bool ok = len > 0 && i + static_cast<std::size_t>(len) <= in.size();
        for (int k = 1; ok && k < len; ++k) {
            if ((static_cast<unsigned char>(in[i + k]) & 0xC0) != 0x80) ok = false;
        }
        if (ok) {
            out.append(in.substr(i, static_cast<std::size_t>(len)));
            i += static_cast<std::size_t>(len);
        } else {
            out.append(kReplacementChar);
            ++i;
        }
    }
    return out;
}

int count_physical_lines(std::string_view text) {
    if (text.empty()) return 0;
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    if (text.back() != '\n') ++lines;
    return lines;
}

class Scanner {
public:
    Scanner(std::string_view raw, std::string path) : text_(sanitize_utf8(raw)) {
        unit_.path = std::move(path);
        unit_.byte_size = raw.size();
        unit_.lines.total = count_physical_lines(text_);
        unit_.line_flags.assign(static_cast<std::size_t>(unit_.lines.total), 0);
    }

    SourceUnit run() {
        scan();
        for (std::uint8_t f : unit_.line_flags) {
            if (f & lineflag::kCode) ++unit_.lines.code;
            if (f & lineflag::kComment) ++unit_.lines.comment;
            if (f == 0) ++unit_.lines.blank;
        }
        return std::move(unit_);
    }

private:
    std::string text_;
    SourceUnit unit_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    int line_ = 1;
    int last_token_line_ = 0;  // a '#' only starts a directive on a token-free line

    bool at_end() const { return pos_ >= text_.size(); }
    char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek(std::size_t n = 1) const {
        return pos_ + n < text_.size() ? text_[pos_ + n] : '\0';
    }
    int column_at(std::size_t offset) const {
        return static_cast<int>(offset - line_start_) + 1;
    }

    void newline() {
        ++pos_;
        ++line_;
        line_start_ = pos_;
    }

    void mark(int line, std::uint8_t flag) {
        if (line >= 1 && line <= unit_.lines.total) {
            unit_.line_flags[static_cast<std::size_t>(line - 1)] |= flag;
        }
    }
    void mark_span(int first, int last, std::uint8_t flag) {
        for (int l = first; l <= last; ++l) mark(l, flag);
    }

    void error(int line, std::string message) {
        unit_.errors.push_back({line, std::move(message)});
        unit_.degraded = true;
    }

    void emit(TokenKind kind, std::string text, int line, int column) {
        unit_.tokens.push_back({kind, std::move(text), line, column});
        last_token_line_ = line_;
    }

    void scan() {
        while (!at_end()) {
            const char c = cur();
            if (c == '\n') {
                newline();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
                ++pos_;
                continue;
            }
            if (c == '\\' && peek() == '\n') {  // line splice
                mark(line_, lineflag::kCode);
                ++pos_;
                newline();
                continue;
            }
            if (c == '/' && peek() == '/') {
                lex_line_comment();
                continue;
            }
            if (c == '/' && peek() == '*') {
                lex_block_comment();
                continue;
            }
            if (c == '#' && last_token_line_ != line_) {
                lex_preprocessor();
                continue;
            }
            if (c == '"' || c == '\'') {
                lex_quoted(pos_, line_, column_at(pos_), c, false);
                continue;
            }
            if (is_digit(c) || (c == '.' && is_digit(peek()))) {
                lex_number();
                continue;
            }
            if (is_ident_start(c)) {
                lex_word();
                continue;
            }
            if (lex_operator()) continue;
            // Unrecognized character: contributes to the code tally only.
            mark(line_, lineflag::kCode);
            ++pos_;
        }
    }

    void lex_line_comment() {
        mark(line_, lineflag::kComment);
        while (!at_end() && cur() != '\n') ++pos_;
    }

    void lex_block_comment() {
        const int start_line = line_;
        pos_ += 2;
        while (!at_end()) {
            if (cur() == '\n') {
                newline();
                continue;
            }
            if (cur() == '*' && peek() == '/') {
                pos_ += 2;
                mark_span(start_line, line_, lineflag::kComment);
                return;
            }
            ++pos_;
        }
        mark_span(start_line, line_, lineflag::kComment);
        error(start_line, "unterminated block comment");
    }

    // String or character literal. `start` points at the prefix (if any);
    // pos_ is at the opening quote.
    void lex_quoted(std::size_t start, int line, int column, char quote, bool) {
        std::string text(text_.substr(start, pos_ - start));
        text += quote;
        ++pos_;
        mark(line, lineflag::kCode);
        while (!at_end()) {
            const char c = cur();
            if (c == '\n') break;  // unterminated
            if (c == '\\') {
                if (peek() == '\n') {  // spliced literal: drop the splice
                    ++pos_;
                    newline();
                    mark(line_, lineflag::kCode);
                    continue;
                }
                text += c;
                ++pos_;
                if (!at_end() && cur() != '\n') {
                    text += cur();
                    ++pos_;
                }
                continue;
            }
            text += c;
            ++pos_;
            if (c == quote) {
                // optional ud-suffix
                while (!at_end() && is_ident_char(cur())) {
                    text += cur();
                    ++pos_;
                }
                emit(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral,
                     std::move(text), line, column);
                return;
            }
        }
        error(line, quote == '"' ? "unterminated string literal"
                                 : "unterminated character literal");
        emit(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral,
             std::move(text), line, column);
        // resume at the next line
    }

    // Raw string literal in the default R"(...)" form; pos_ at the quote.
    void lex_raw_string(std::size_t start, int line, int column) {
        std::string text(text_.substr(start, pos_ - start));
        text += "\"(";
        pos_ += 2;
        mark(line, lineflag::kCode);
        while (!at_end()) {
            if (cur() == ')' && peek() == '"') {
                text += ")\"";
                pos_ += 2;
                mark_span(line, line_, lineflag::kCode);
                emit(TokenKind::StringLiteral, std::move(text), line, column);
                return;
            }
            if (cur() == '\n') {
                text += '\n';
                newline();
                continue;
            }
            text += cur();
            ++pos_;
        }
        mark_span(line, line_, lineflag::kCode);
        error(line, "unterminated string literal");
        emit(TokenKind::StringLiteral, std::move(text), line, column);
    }

    void lex_number() {
        const std::size_t start = pos_;
        const int line = line_;
        const int column = column_at(pos_);
        bool is_float = false;
        if (cur() == '0' && (peek() == 'x' || peek() == 'X')) {
            pos_ += 2;
            while (!at_end() && (is_hex_digit(cur()) || cur() == '\'')) ++pos_;
            if (cur() == '.') {
                is_float = true;
                ++pos_;
                while (!at_end() && (is_hex_digit(cur()) || cur() == '\'')) ++pos_;
            }
            if (cur() == 'p' || cur() == 'P') {
                is_float = true;
                ++pos_;
                if (cur() == '+' || cur() == '-') ++pos_;
                while (!at_end() && is_digit(cur())) ++pos_;
            }
        } else {
            while (!at_end() && (is_digit(cur()) || cur() == '\'')) ++pos_;
            // member access on a numeric literal is impossible, so any '.'
            // here extends the number ("1.f", "1.e5"); ".." starts "..."
            if (cur() == '.' && peek() != '.') {
                is_float = true;
                ++pos_;
                while (!at_end() && (is_digit(cur()) || cur() == '\'')) ++pos_;
            }
            if (cur() == 'e' || cur() == 'E') {
                if (is_digit(peek()) ||
                    ((peek() == '+' || peek() == '-') && is_digit(peek(2)))) {
                    is_float = true;
                    ++pos_;
                    if (cur() == '+' || cur() == '-') ++pos_;
                    while (!at_end() && is_digit(cur())) ++pos_;
                }
            }
        }
        while (!at_end() && is_ident_char(cur())) ++pos_;  // suffixes
        mark(line, lineflag::kCode);
        emit(is_float ? TokenKind::FloatLiteral : TokenKind::IntegerLiteral,
             std::string(text_.substr(start, pos_ - start)), line, column);
    }

    void lex_word() {
        const std::size_t start = pos_;
        const int line = line_;
        const int column = column_at(pos_);
        while (!at_end() && is_ident_char(cur())) ++pos_;
        const std::string_view word = std::string_view(text_).substr(start, pos_ - start);
        if (!at_end() && (cur() == '"' || cur() == '\'')) {
            static const std::unordered_set<std::string_view> plain_prefixes = {
                "L", "u", "U", "u8"};
            static const std::unordered_set<std::string_view> raw_prefixes = {
                "R", "LR", "uR", "UR", "u8R"};
            if (raw_prefixes.count(word) && cur() == '"' && peek() == '(') {
                lex_raw_string(start, line, column);
                return;
            }
            if (plain_prefixes.count(word) || raw_prefixes.count(word)) {
                lex_quoted(start, line, column, cur(), false);
                return;
            }
        }
        mark(line, lineflag::kCode);
        emit(keyword_set().count(word) ? TokenKind::Keyword : TokenKind::Identifier,
             std::string(word), line, column);
    }

    bool lex_operator() {
        const int line = line_;
        const int column = column_at(pos_);
        const std::string_view rest = std::string_view(text_).substr(pos_);
        for (std::string_view op : kOps3) {
            if (rest.substr(0, 3) == op) {
                pos_ += 3;
                mark(line, lineflag::kCode);
                emit(TokenKind::Operator, std::string(op), line, column);
                return true;
            }
        }
        for (std::string_view op : kOps2) {
            if (rest.substr(0, 2) == op) {
                pos_ += 2;
                mark(line, lineflag::kCode);
                emit(TokenKind::Operator, std::string(op), line, column);
                return true;
            }
        }
        if (kOps1.find(rest[0]) != std::string_view::npos) {
            ++pos_;
            mark(line, lineflag::kCode);
            emit(TokenKind::Operator, std::string(1, rest[0]), line, column);
            return true;
        }
        return false;
    }

    // One opaque token per directive logical line, backslash continuations
    // included. Comment spans inside the directive stay out of the token.
    void lex_preprocessor() {
        const int line = line_;
        const int column = column_at(pos_);
        std::string text;
        mark(line_, lineflag::kCode);
        while (!at_end()) {
            const char c = cur();
            if (c == '\n') break;
            if (c == '\r') {
                ++pos_;
                continue;
            }
            if (c == '\\' && peek() == '\n') {
                text += '\\';
                text += '\n';
                ++pos_;
                newline();
                mark(line_, lineflag::kCode);
                continue;
            }
            if (c == '/' && peek() == '/') {
                lex_line_comment();
                break;
            }
            if (c == '/' && peek() == '*') {
                const int before = line_;
                lex_block_comment();
                text += ' ';
                if (line_ != before && !at_end()) mark(line_, lineflag::kCode);
                continue;
            }
            if (c == '"' || c == '\'') {
                const char quote = c;
                text += c;
                ++pos_;
                while (!at_end() && cur() != '\n') {
                    if (cur() == '\\' && peek() != '\n' && peek() != '\0') {
                        text += cur();
                        ++pos_;
                        text += cur();
                        ++pos_;
                        continue;
                    }
                    const char q = cur();
                    text += q;
                    ++pos_;
                    if (q == quote) break;
                }
                continue;
            }
            text += c;
            ++pos_;
        }
        while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
            text.pop_back();
        }
        emit(TokenKind::Preprocessor, std::move(text), line, column);
    }
};

}  // namespace

bool is_cpp_keyword(std::string_view word) { return keyword_set().count(word) > 0; }

SourceUnit lex_source(std::string_view text, std::string path) {
    return Scanner(text, std::move(path)).run();
}

std::vector<Token> tokenize(std::string_view text) {
    return lex_source(text).tokens;
}

LineClassification classify_lines(std::string_view text) {
    return lex_source(text).lines;
}

}  // namespace maintmeter
