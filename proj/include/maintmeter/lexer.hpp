// Lightweight C-family lexer: token stream plus code/comment/blank line
// classification. Comments and string contents never leak into tokens, so
// downstream counters can work on the stream directly.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maintmeter {

enum class TokenKind {
    Identifier,
    Keyword,
    IntegerLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    Preprocessor,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 0;    // 1-based
    int column = 0;  // 1-based byte column within the line

    bool operator==(const Token&) const = default;
};

/// Physical line tally for one file. A line holding both code and a comment
/// counts toward both tallies; blank lines hold neither.
struct LineClassification {
    int total = 0;
    int code = 0;
    int comment = 0;
    int blank = 0;

    bool operator==(const LineClassification&) const = default;
};

struct LexError {
    int line = 0;
    std::string message;
};

namespace lineflag {
inline constexpr std::uint8_t kCode = 1;
inline constexpr std::uint8_t kComment = 2;
}  // namespace lineflag

/// One analyzed file.
struct SourceUnit {
    std::string path;  // tree-relative
    std::vector<Token> tokens;
    LineClassification lines;
    std::vector<std::uint8_t> line_flags;  // per physical line, lineflag bits
    std::vector<LexError> errors;
    bool degraded = false;
    std::size_t byte_size = 0;  // raw input length in bytes
};

/// True for the fixed C++14 keyword list (alternative operator spellings
/// included).
bool is_cpp_keyword(std::string_view word);

/// Full lexing pass: tokens, line classification, and recoverable errors.
/// Invalid UTF-8 bytes are replaced with U+FFFD before scanning.
SourceUnit lex_source(std::string_view text, std::string path = {});

std::vector<Token> tokenize(std::string_view text);
LineClassification classify_lines(std::string_view text);

}  // namespace maintmeter
