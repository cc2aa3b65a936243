#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "maintmeter/lexer.hpp"
#include "maintmeter/structure.hpp"

using namespace maintmeter;

namespace {

EntityGraph graph_of(const std::string& text, const std::string& path = "a.cc") {
    std::vector<SourceUnit> units;
    units.push_back(lex_source(text, path));
    EntityGraph graph = extract_entities(units);
    link_hierarchy(graph);
    return graph;
}

const FunctionEntity* find_function(const EntityGraph& g, const std::string& name) {
    for (const FunctionEntity& fn : g.functions) {
        if (fn.name == name) return &fn;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("minimal free function") {
    const EntityGraph g = graph_of("int f() { return 0; }");
    REQUIRE(g.functions.size() == 1);
    CHECK(g.functions[0].name == "f");
    CHECK(g.functions[0].parameter_count == 0);
    CHECK(g.functions[0].owner.empty());
    CHECK(g.classes.empty());
    CHECK(g.functions[0].start_line == 1);
    CHECK(g.functions[0].end_line == 1);
}

TEST_CASE("single-edge hierarchy with a called name") {
    const EntityGraph g =
        graph_of("class B {}; class D : public B { void m() { g(); } };");
    REQUIRE(g.classes.count("B") == 1);
    REQUIRE(g.classes.count("D") == 1);
    REQUIRE(g.inheritance_edges.size() == 1);
    CHECK(g.inheritance_edges[0] == std::pair<std::string, std::string>{"D", "B"});
    const ClassEntity& d = g.classes.at("D");
    REQUIRE(d.methods.size() == 1);
    const FunctionEntity& m = g.functions[d.methods[0]];
    CHECK(m.name == "m");
    CHECK(m.owner == "D");
    CHECK(called_names(m.body_tokens) == std::set<std::string>{"g"});
}

TEST_CASE("five-class fixture: hand-enumerated inventory") {
    // mirrors tests/fixtures/tree/shapes.cc
    const std::string text = R"__(// Shapes fixture: five classes, two inheritance edges, free functions,
// and an out-of-class method definition.
#include <cstddef>

class Shape {
public:
    Shape() { tag_ = 0; }
    virtual int area() { return 0; }
    int tag() { return tag_; }
private:
    int tag_;
};

class Circle : public Shape {
public:
    int area() { return radius_ * radius_ * 3; }
    int radius_;
};

class Square : public Shape {
public:
    int area();
    int side_;
};

int Square::area() { return side_ * side_; }

struct Point {
    int x;
    int y;
};

class Canvas {
public:
    void add(Point p) { count_ = count_ + 1; last_ = p; touch(); }
    int count() { return count_; }
private:
    int count_;
    Point last_;
};

int free_max(int a, int b) {
    if (a > b) {
        return a;
    }
    return b;
}

static int twice(int v) { return v + v; }
)__";
    const EntityGraph g = graph_of(text, "shapes.cc");

    // classes
    REQUIRE(g.classes.size() == 5);
    for (const char* name : {"Shape", "Circle", "Square", "Point", "Canvas"}) {
        CHECK(g.classes.count(name) == 1);
    }

    // inheritance edges
    REQUIRE(g.inheritance_edges.size() == 2);
    CHECK(std::count(g.inheritance_edges.begin(), g.inheritance_edges.end(),
                     std::pair<std::string, std::string>{"Circle", "Shape"}) == 1);
    CHECK(std::count(g.inheritance_edges.begin(), g.inheritance_edges.end(),
                     std::pair<std::string, std::string>{"Square", "Shape"}) == 1);

    // functions: 7 methods + 2 free functions
    CHECK(g.functions.size() == 9);
    CHECK(g.classes.at("Shape").methods.size() == 3);
    CHECK(g.classes.at("Circle").methods.size() == 1);
    CHECK(g.classes.at("Square").methods.size() == 1);  // attached out-of-class
    CHECK(g.classes.at("Point").methods.size() == 0);
    CHECK(g.classes.at("Canvas").methods.size() == 2);

    const FunctionEntity* square_area =
        &g.functions[g.classes.at("Square").methods[0]];
    CHECK(square_area->name == "area");
    CHECK(square_area->owner == "Square");
    CHECK(square_area->start_line == 26);

    const FunctionEntity* fm = find_function(g, "free_max");
    REQUIRE(fm != nullptr);
    CHECK(fm->owner.empty());
    CHECK(fm->parameter_count == 2);
    CHECK(fm->start_line == 42);
    CHECK(fm->end_line == 47);

    const FunctionEntity* tw = find_function(g, "twice");
    REQUIRE(tw != nullptr);
    CHECK(tw->parameter_count == 1);

    // member variables
    CHECK(g.classes.at("Shape").instance_variables ==
          std::vector<std::string>{"tag_"});
    CHECK(g.classes.at("Point").instance_variables ==
          std::vector<std::string>{"x", "y"});
    CHECK(g.classes.at("Canvas").instance_variables ==
          std::vector<std::string>{"count_", "last_"});

    // per-file tallies
    CHECK(g.declarations_per_file.at("shapes.cc") == 21);
    CHECK(g.variables_per_file.at("shapes.cc") == 7);

    // linking
    CHECK(g.classes.at("Shape").dit == 0);
    CHECK(g.classes.at("Circle").dit == 1);
    CHECK(g.classes.at("Square").dit == 1);
    CHECK(g.classes.at("Shape").children ==
          std::vector<std::string>{"Circle", "Square"});
    CHECK(g.classes.at("Circle").referenced_class_names ==
          std::set<std::string>{"Shape"});
    CHECK(g.classes.at("Canvas").referenced_class_names ==
          std::set<std::string>{"Point"});
}

TEST_CASE("hierarchy linking: single class is a root") {
    const EntityGraph g = graph_of("class A {};");
    CHECK(g.classes.at("A").dit == 0);
    CHECK(g.classes.at("A").children.empty());
    CHECK(g.inheritance_edges.empty());
}

TEST_CASE("hierarchy linking: chain children") {
    const EntityGraph g =
        graph_of("class A {}; class B : public A {}; class C : public B {};");
    CHECK(g.classes.at("A").children == std::vector<std::string>{"B"});
    CHECK(g.classes.at("B").children == std::vector<std::string>{"C"});
    CHECK(g.classes.at("C").children.empty());
    CHECK(g.classes.at("A").dit == 0);
    CHECK(g.classes.at("B").dit == 1);
    CHECK(g.classes.at("C").dit == 2);
}

TEST_CASE("external base is kept but unresolved") {
    const EntityGraph g = graph_of("class D : public X {};");
    const ClassEntity& d = g.classes.at("D");
    REQUIRE(d.bases.size() == 1);
    CHECK(d.bases[0].name == "X");
    CHECK_FALSE(d.bases[0].resolved);
    CHECK(d.dit == 1);  // one known edge into an unknown hierarchy
    CHECK(g.inheritance_edges.empty());
}

TEST_CASE("self-inheritance is rejected with a diagnostic") {
    const EntityGraph g = graph_of("class A : public A {};");
    CHECK(g.classes.at("A").bases.empty());
    REQUIRE_FALSE(g.diagnostics.empty());
    CHECK(g.diagnostics[0].find("lists itself") != std::string::npos);
}

TEST_CASE("inheritance cycle is diagnosed and classes are excluded") {
    // impossible in compilable C++, but the graph must reject it
    std::vector<SourceUnit> units;
    units.push_back(lex_source("class A : public B {}; class B : public A {};", "c.cc"));
    EntityGraph g = extract_entities(units);
    link_hierarchy(g);
    CHECK(g.classes.at("A").on_cycle);
    CHECK(g.classes.at("B").on_cycle);
    CHECK(g.inheritance_edges.empty());
    bool saw_cycle_diag = false;
    for (const auto& d : g.diagnostics) {
        if (d.find("inheritance cycle") != std::string::npos) saw_cycle_diag = true;
    }
    CHECK(saw_cycle_diag);
}

TEST_CASE("unbalanced braces keep completed entities and flag the file") {
    const EntityGraph g =
        graph_of("int done() { return 1; }\nint broken() { if (x) {\n");
    CHECK(g.degraded_files.count("a.cc") == 1);
    REQUIRE_FALSE(g.diagnostics.empty());
    CHECK(find_function(g, "done") != nullptr);
    CHECK(find_function(g, "broken") == nullptr);
}

TEST_CASE("template header is skipped; entity recognized once") {
    const EntityGraph g = graph_of(
        "template <typename T>\nclass Box { T get() { return v_; } T v_; };\n"
        "template <typename T> T identity(T v) { return v; }\n");
    CHECK(g.classes.count("Box") == 1);
    CHECK(g.classes.at("Box").methods.size() == 1);
    CHECK(find_function(g, "identity") != nullptr);
}

TEST_CASE("enum class is not a class entity") {
    const EntityGraph g = graph_of("enum class Color { Red, Green };\nenum Old { A };\n");
    CHECK(g.classes.empty());
    CHECK(g.declarations_per_file.at("a.cc") == 2);
}

TEST_CASE("namespaces qualify free function names") {
    const EntityGraph g =
        graph_of("namespace outer { namespace inner { int f() { return 1; } } }");
    CHECK(find_function(g, "outer::inner::f") != nullptr);
}

TEST_CASE("out-of-class definition with unknown owner stays free") {
    const EntityGraph g = graph_of("int Unknown::run() { return 2; }");
    const FunctionEntity* fn = find_function(g, "Unknown::run");
    REQUIRE(fn != nullptr);
    CHECK(fn->owner.empty());
}

TEST_CASE("out-of-class method attaches across files") {
    std::vector<SourceUnit> units;
    units.push_back(lex_source("class W { public: int go(); };", "w.h"));
    units.push_back(lex_source("int W::go() { return 9; }", "w.cc"));
    EntityGraph g = extract_entities(units);
    link_hierarchy(g);
    REQUIRE(g.classes.at("W").methods.size() == 1);
    const FunctionEntity& fn = g.functions[g.classes.at("W").methods[0]];
    CHECK(fn.name == "go");
    CHECK(fn.owner == "W");
    CHECK(fn.file == "w.cc");
}

TEST_CASE("constructors with initializer lists are recognized") {
    const EntityGraph g = graph_of(
        "class P { public: P() : a_(1), b_{2} { go(); } int a_; int b_; };");
    REQUIRE(g.classes.at("P").methods.size() == 1);
    const FunctionEntity& ctor = g.functions[g.classes.at("P").methods[0]];
    CHECK(ctor.name == "P");
    CHECK(called_names(ctor.body_tokens) == std::set<std::string>{"go"});
}

TEST_CASE("destructors keep the tilde in the name") {
    const EntityGraph g = graph_of("class Q { public: ~Q() { drop(); } };");
    REQUIRE(g.classes.at("Q").methods.size() == 1);
    CHECK(g.functions[g.classes.at("Q").methods[0]].name == "~Q");
}

TEST_CASE("control-flow parens never become functions") {
    const EntityGraph g = graph_of(
        "int f(int a) {\n"
        "    while (a) { a = a - 1; }\n"
        "    if (a) { return 1; }\n"
        "    return 0;\n"
        "}\n");
    CHECK(g.functions.size() == 1);  // only f itself
}

TEST_CASE("lambdas and operator overloads are not function entities") {
    const EntityGraph g = graph_of(
        "bool operator==(int a, int b) { return a == b; }\n"
        "auto doubler = [](int v) { return v * 2; };\n");
    CHECK(g.functions.empty());
}

TEST_CASE("property: children counts equal resolved edge count") {
    const std::vector<std::string> corpora = {
        "class A {}; class B : public A {}; class C : public A {}; class D : public C {};",
        "class A {}; class B {};",
        "class A : public Ext {}; class B : public A, public Ext2 {};",
    };
    for (const std::string& text : corpora) {
        const EntityGraph g = graph_of(text);
        std::size_t total_children = 0;
        for (const auto& [name, cls] : g.classes) total_children += cls.children.size();
        CHECK(total_children == g.inheritance_edges.size());
    }
}

TEST_CASE("property: extraction is deterministic") {
    const std::string text =
        "class A { void x() { y(); } int m_; };\n"
        "int A_helper() { return 0; }\n";
    std::vector<SourceUnit> units1, units2;
    units1.push_back(lex_source(text, "t.cc"));
    units2.push_back(lex_source(text, "t.cc"));
    EntityGraph g1 = extract_entities(units1);
    EntityGraph g2 = extract_entities(units2);
    link_hierarchy(g1);
    link_hierarchy(g2);
    CHECK(g1.functions.size() == g2.functions.size());
    CHECK(g1.classes.size() == g2.classes.size());
    for (std::size_t i = 0; i < g1.functions.size(); ++i) {
        CHECK(g1.functions[i].name == g2.functions[i].name);
        CHECK(g1.functions[i].body_tokens == g2.functions[i].body_tokens);
    }
}

TEST_CASE("every body token lies inside exactly one function") {
    const std::string text =
        "int a() { return 1; }\n"
        "class K { public: int b() { return 2; } };\n"
        "int c() { return 3; }\n";
    const EntityGraph g = graph_of(text);
    REQUIRE(g.functions.size() == 3);
    // body spans must not overlap: compare (file, line) ranges
    for (std::size_t i = 0; i < g.functions.size(); ++i) {
        for (std::size_t j = i + 1; j < g.functions.size(); ++j) {
            const auto& a = g.functions[i];
            const auto& b = g.functions[j];
            const bool disjoint =
                a.end_line < b.start_line || b.end_line < a.start_line;
            CHECK(disjoint);
        }
    }
}
