#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "maintmeter/lexer.hpp"

using namespace maintmeter;

namespace {

std::vector<std::string> texts_of(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(t.text);
    return out;
}

}  // namespace

TEST_CASE("empty input yields no tokens and zero lines") {
    const SourceUnit unit = lex_source("");
    CHECK(unit.tokens.empty());
    CHECK(unit.lines == LineClassification{0, 0, 0, 0});
    CHECK_FALSE(unit.degraded);
}

TEST_CASE("line comment is dropped, code tokens kept") {
    const auto tokens = tokenize("int a = 1; // note");
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[0].text == "int");
    CHECK(tokens[1].kind == TokenKind::Identifier);
    CHECK(tokens[1].text == "a");
    CHECK(tokens[2].kind == TokenKind::Operator);
    CHECK(tokens[2].text == "=");
    CHECK(tokens[3].kind == TokenKind::IntegerLiteral);
    CHECK(tokens[3].text == "1");
    CHECK(tokens[4].text == ";");
}

TEST_CASE("comment markers inside strings are not comments") {
    // hand-enumerated expectation for: s = "a//b"; /* x */ y();
    const auto tokens = tokenize("s = \"a//b\"; /* x */ y();");
    const std::vector<std::string> expected = {
        "s", "=", "\"a//b\"", ";", "y", "(", ")", ";",
    };
    CHECK(texts_of(tokens) == expected);
    CHECK(tokens[2].kind == TokenKind::StringLiteral);
    for (const Token& t : tokens) {
        CHECK(t.text.find('x') == std::string::npos);
    }
}

TEST_CASE("line classification: one line of each kind") {
    const LineClassification lines = classify_lines("// a\n\nx = 1;\n");
    CHECK(lines.total == 3);
    CHECK(lines.comment == 1);
    CHECK(lines.blank == 1);
    CHECK(lines.code == 1);
}

TEST_CASE("mixed line counts toward both code and comment") {
    const LineClassification lines = classify_lines("x = 1; // a");
    CHECK(lines.total == 1);
    CHECK(lines.code == 1);
    CHECK(lines.comment == 1);
    CHECK(lines.blank == 0);
}

TEST_CASE("preprocessor line becomes one opaque token and counts as code") {
    const SourceUnit unit = lex_source("#include <vector> // why\nint x;\n");
    REQUIRE(unit.tokens.size() == 4);
    CHECK(unit.tokens[0].kind == TokenKind::Preprocessor);
    CHECK(unit.tokens[0].text == "#include <vector>");
    CHECK(unit.lines.code == 2);
    CHECK(unit.lines.comment == 1);  // the trailing // why
}

TEST_CASE("preprocessor continuation spans the logical line") {
    const SourceUnit unit =
        lex_source("#define ADD(a, b) \\\n    ((a) + (b))\nint y;\n");
    REQUIRE(!unit.tokens.empty());
    CHECK(unit.tokens[0].kind == TokenKind::Preprocessor);
    CHECK(unit.tokens[0].text.find("\\\n") != std::string::npos);
    CHECK(unit.tokens[0].text.find("(b))") != std::string::npos);
    CHECK(unit.tokens[1].text == "int");
    CHECK(unit.lines.code == 3);
}

TEST_CASE("maximal munch picks the longest operator") {
    CHECK(texts_of(tokenize("a<<=b")) == std::vector<std::string>{"a", "<<=", "b"});
    CHECK(texts_of(tokenize("a->*b")) == std::vector<std::string>{"a", "->*", "b"});
    CHECK(texts_of(tokenize("a+++++b")) ==
          std::vector<std::string>{"a", "++", "++", "+", "b"});
    CHECK(texts_of(tokenize("x::y")) == std::vector<std::string>{"x", "::", "y"});
}

TEST_CASE("numeric literals split into integer and float kinds") {
    const auto tokens = tokenize("0x1F 1'000 3.14 1e9 1.f .5 7u");
    REQUIRE(tokens.size() == 7);
    CHECK(tokens[0].kind == TokenKind::IntegerLiteral);
    CHECK(tokens[1].kind == TokenKind::IntegerLiteral);
    CHECK(tokens[1].text == "1'000");
    CHECK(tokens[2].kind == TokenKind::FloatLiteral);
    CHECK(tokens[3].kind == TokenKind::FloatLiteral);
    CHECK(tokens[4].kind == TokenKind::FloatLiteral);
    CHECK(tokens[5].kind == TokenKind::FloatLiteral);
    CHECK(tokens[5].text == ".5");
    CHECK(tokens[6].kind == TokenKind::IntegerLiteral);
}

TEST_CASE("char literals and prefixed strings") {
    const auto tokens = tokenize("char c = 'x'; auto s = L\"wide\";");
    REQUIRE(tokens.size() == 10);
    CHECK(tokens[3].kind == TokenKind::CharLiteral);
    CHECK(tokens[3].text == "'x'");
    CHECK(tokens[8].kind == TokenKind::StringLiteral);
    CHECK(tokens[8].text == "L\"wide\"");
}

TEST_CASE("default-form raw string may span lines") {
    const SourceUnit unit = lex_source("auto s = R\"(line1\nline2)\";\n");
    REQUIRE(unit.tokens.size() == 5);
    CHECK(unit.tokens[3].kind == TokenKind::StringLiteral);
    CHECK(unit.tokens[3].text == "R\"(line1\nline2)\"");
    CHECK_FALSE(unit.degraded);
    CHECK(unit.lines.code == 2);
}

TEST_CASE("unterminated string is a recoverable error; lexing resumes") {
    const SourceUnit unit = lex_source("s = \"open\nint after = 1;\n");
    CHECK(unit.degraded);
    REQUIRE(unit.errors.size() == 1);
    CHECK(unit.errors[0].line == 1);
    CHECK(unit.errors[0].message == "unterminated string literal");
    bool saw_after = false;
    for (const Token& t : unit.tokens) {
        if (t.text == "after") saw_after = true;
    }
    CHECK(saw_after);
}

TEST_CASE("unterminated block comment flags the file") {
    const SourceUnit unit = lex_source("int a;\n/* never closed\nmore\n");
    CHECK(unit.degraded);
    REQUIRE(unit.errors.size() == 1);
    CHECK(unit.errors[0].message == "unterminated block comment");
    CHECK(unit.errors[0].line == 2);
    CHECK(unit.lines.comment == 2);
}

TEST_CASE("invalid UTF-8 bytes are replaced and lexing proceeds") {
    const std::string text = std::string("int a") + char(0xFF) + "b = 1;\n";
    const SourceUnit unit = lex_source(text);
    CHECK_FALSE(unit.degraded);
    bool saw_int = false;
    for (const Token& t : unit.tokens) {
        if (t.text == "int") saw_int = true;
    }
    CHECK(saw_int);
    CHECK(unit.byte_size == text.size());
}

TEST_CASE("keywords are classified as keywords") {
    const auto tokens = tokenize("while constexpr nullptr myword");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[1].kind == TokenKind::Keyword);
    CHECK(tokens[2].kind == TokenKind::Keyword);
    CHECK(tokens[3].kind == TokenKind::Identifier);
    CHECK(is_cpp_keyword("xor_eq"));
    CHECK_FALSE(is_cpp_keyword("override"));  // contextual, not a keyword
}

TEST_CASE("property: tokenization is deterministic") {
    std::mt19937 rng(20240901);
    const std::vector<std::string> pool = {
        "int",  "x",  "=", "1", ";",  "// c\n",  "/* b */",
        "\"s\"", "if", "(", ")", "{",  "}",       "\n",
        "for",  "0x2a", "'c'", "&&", "+", "#define M 1\n", "  ", "y2",
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        const int parts = static_cast<int>(rng() % 60);
        for (int i = 0; i < parts; ++i) {
            text += pool[rng() % pool.size()];
        }
        const SourceUnit a = lex_source(text);
        const SourceUnit b = lex_source(text);
        CHECK(a.tokens == b.tokens);
        CHECK(a.lines == b.lines);
    }
}

TEST_CASE("property: line tallies are consistent and tokens ordered") {
    std::mt19937 rng(7);
    const std::vector<std::string> pool = {
        "int a = 1;",   "// note",     "/* multi\nline */",    "",
        "x = y + z;",   "#define A 1", "while (a) { b(); }",   "   ",
        "s = \"lit\";", "int f() { return 0; }",
    };
    for (int trial = 0; trial < 80; ++trial) {
        std::string text;
        const int n = static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) {
            text += pool[rng() % pool.size()];
            text += "\n";
        }
        const SourceUnit unit = lex_source(text);
        const auto& lines = unit.lines;
        CHECK(lines.blank >= 0);
        CHECK(lines.code <= lines.total);
        CHECK(lines.comment <= lines.total);
        // blank + union(code, comment) = total
        int union_count = 0;
        for (const auto flag : unit.line_flags) {
            if (flag != 0) ++union_count;
        }
        CHECK(lines.blank + union_count == lines.total);
        for (std::size_t i = 1; i < unit.tokens.size(); ++i) {
            const Token& prev = unit.tokens[i - 1];
            const Token& cur = unit.tokens[i];
            const bool increasing =
                cur.line > prev.line ||
                (cur.line == prev.line && cur.column > prev.column);
            CHECK(increasing);
        }
        // no token text contains a newline except preprocessor / raw strings
        for (const Token& t : unit.tokens) {
            if (t.kind == TokenKind::Preprocessor) continue;
            if (t.kind == TokenKind::StringLiteral && t.text.rfind("R\"(", 0) == 0) {
                continue;
            }
            CHECK(t.text.find('\n') == std::string::npos);
        }
    }
}
