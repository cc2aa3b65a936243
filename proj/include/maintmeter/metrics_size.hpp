// Size metric group: line counts, statements, declaration tallies at file
// and function level.
#pragma once

#include "maintmeter/lexer.hpp"
#include "maintmeter/structure.hpp"

namespace maintmeter {

struct FileSizeRecord {
    int lines_in_file = 0;
    int sloc = 0;  // lines containing code
    int cloc = 0;  // lines containing a comment
    double comment_ratio = 0.0;  // cloc / lines_in_file, 0 for empty files
    int statements = 0;
    int functions_in_file = 0;
    int declarations_in_file = 0;
    int variables_in_file = 0;
    std::size_t file_size_bytes = 0;
    bool degraded = false;
};

struct FunctionSizeRecord {
    int lines_in_function = 0;
    int sloc_in_function = 0;
    int variables_in_function = 0;
};

/// Semicolons at parenthesis depth zero plus block-introducing control
/// keywords (if/for/while/switch/do/try). `for(;;)` header semicolons sit
/// at depth >= 1 and are excluded automatically.
int count_statements(const std::vector<Token>& tokens);

/// Local declaration statements inside a function body.
int count_local_declarations(const std::vector<Token>& body);

FileSizeRecord measure_file_size(const SourceUnit& unit, const EntityGraph& graph);
FunctionSizeRecord measure_function_size(const FunctionEntity& fn,
                                         const SourceUnit& unit);

}  // namespace maintmeter
