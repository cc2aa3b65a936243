// Complexity metric group: McCabe cyclomatic/essential complexity and
// densities, Halstead software-science measures, per-scope aggregates, and
// the Welker maintainability index.
#pragma once

#include <vector>

#include "maintmeter/lexer.hpp"
#include "maintmeter/structure.hpp"

namespace maintmeter {

struct HalsteadMeasures {
    long long distinct_operators = 0;  // n1
    long long distinct_operands = 0;   // n2
    long long total_operators = 0;     // N1
    long long total_operands = 0;      // N2
    double volume = 0.0;               // N * log2(n), 0 when N = 0 or n < 2
    double difficulty = 0.0;           // (n1/2) * (N2/n2), 0 when n2 = 0
    double effort = 0.0;               // difficulty * volume
    double intelligent_content = 0.0;  // volume / difficulty, 0 when difficulty = 0

    long long vocabulary() const { return distinct_operators + distinct_operands; }
    long long length() const { return total_operators + total_operands; }
};

/// Operand/operator counting over a token sequence (function body, whole
/// file, or concatenated method bodies). Preprocessor tokens are ignored;
/// each bracket pair () [] {} counts as one occurrence of one operator.
HalsteadMeasures halstead_measures(const std::vector<Token>& tokens);

/// 1 + decision tokens (if/for/while/case/catch/&&/||/?).
int cyclomatic_complexity(const std::vector<Token>& body);
int cyclomatic_complexity(const FunctionEntity& fn);

/// Structuredness proxy: min(cc, 1 + goto count); 1 for goto-free bodies.
int essential_complexity(const std::vector<Token>& body, int cc);

double decision_density(int cc, int sloc_in_function);
double essential_density(int cc, int essential);

struct FunctionComplexityRecord {
    int cc = 1;
    int essential = 1;
    double decision_density = 0.0;
    double essential_density = 0.0;
    HalsteadMeasures halstead;
};

FunctionComplexityRecord measure_function_complexity(const FunctionEntity& fn,
                                                     int sloc_in_function);

struct AggregateComplexityRecord {
    double avg_cc = 0.0;
    int max_cc = 0;
    long long total_cc = 0;
    bool empty = true;
};

AggregateComplexityRecord aggregate_complexity(const std::vector<int>& member_cc);

struct MaintainabilityInputs {
    double ave_volume = 0.0;    // mean Halstead volume over the file's functions
    double ave_cc = 0.0;        // mean cyclomatic complexity
    double ave_sloc = 0.0;      // mean source lines per function
    double comment_ratio = 0.0; // file comment ratio in [0, 1]
};

/// 171 - 5.2*ln(max(aveV,1)) - 0.23*aveCC - 16.2*ln(max(aveLOC,1))
///     + 50*sin(sqrt(2.4*perCM)), sine argument in radians, unclamped.
double maintainability_index(const MaintainabilityInputs& inputs);

}  // namespace maintmeter
