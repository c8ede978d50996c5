#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <tuple>

#include "cssg/frontend.hpp"
#include "cssg/pdg.hpp"
#include "support.hpp"

namespace cssg {
namespace {

using testing::random_cfg;
using testing::span_text;

// ---- oracles ------------------------------------------------------------

// Successors in the CFG augmented with the entry -> exit edge.
std::vector<std::vector<int>> augmented_successors(const Cfg& cfg) {
    std::vector<std::vector<int>> succ(cfg.size());
    for (const auto& e : cfg.edges) succ[static_cast<std::size_t>(e.src)].push_back(e.dst);
    succ[static_cast<std::size_t>(cfg.entry)].push_back(cfg.exit);
    return succ;
}

// Every path from x to exit passes through b.
bool postdominates(const std::vector<std::vector<int>>& succ, int exit, int b, int x) {
    if (b == x || b == exit) return true;
    std::vector<bool> seen(succ.size(), false);
    std::vector<int> stack{x};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == exit) return false;
        if (v == b || seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        for (int w : succ[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
    return true;
}

std::set<std::pair<int, int>> control_oracle(const Cfg& cfg) {
    const auto succ = augmented_successors(cfg);
    const int n = static_cast<int>(cfg.size());
    std::set<std::pair<int, int>> deps;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const bool strictly_pdom_a = b != a && postdominates(succ, cfg.exit, b, a);
            if (strictly_pdom_a) continue;
            for (int s : succ[static_cast<std::size_t>(a)]) {
                if (postdominates(succ, cfg.exit, b, s)) {
                    deps.emplace(a, b);
                    break;
                }
            }
        }
    }
    return deps;
}

// Walks of at most `max_len` edges from each definition, stopping at redefinitions.
std::set<DataDependence> reaching_oracle(const Cfg& cfg, int max_len) {
    std::set<DataDependence> deps;
    auto has = [](const std::vector<std::string>& vs, const std::string& v) {
        return std::find(vs.begin(), vs.end(), v) != vs.end();
    };
    for (const auto& def : cfg.nodes) {
        for (const auto& var : def.defs) {
            std::function<void(int, int)> walk = [&](int v, int depth) {
                for (int w : cfg.successors(v)) {
                    const auto& node = cfg.nodes[static_cast<std::size_t>(w)];
                    if (has(node.uses, var)) deps.insert({def.id, w, var});
                    if (has(node.defs, var) || depth + 1 >= max_len) continue;
                    walk(w, depth + 1);
                }
            };
            walk(def.id, 0);
        }
    }
    return deps;
}

TEST(ControlDependence, MatchesPathOracleOnRandomCfgs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Cfg cfg = random_cfg(rng, 8);
        ASSERT_EQ(control_dependencies(cfg), control_oracle(cfg)) << "trial " << trial;
    }
}

TEST(DataDependence, MatchesPathOracleOnRandomCfgs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Cfg cfg = random_cfg(rng, 8);
        ASSERT_EQ(data_dependencies(cfg), reaching_oracle(cfg, 10)) << "trial " << trial;
    }
}

// ---- snippets -------------------------------------------------------------

struct Analysed {
    std::string text;
    std::vector<FunctionDecl> decls;
    Cfg cfg;

    std::string name(int id) const {
        const auto& node = cfg.nodes[static_cast<std::size_t>(id)];
        if (node.kind == CfgNodeKind::Entry) return "ENTRY";
        if (node.kind == CfgNodeKind::Exit) return "EXIT";
        const auto t = span_text(text, node.span);
        return t.empty() ? to_string(node.label) : t;
    }

    std::set<std::pair<std::string, std::string>> control() const {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : control_dependencies(cfg)) out.emplace(name(a), name(b));
        return out;
    }

    std::set<std::tuple<std::string, std::string, std::string>> data() const {
        std::set<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& d : data_dependencies(cfg)) out.emplace(name(d.src), name(d.dst), d.var);
        return out;
    }
};

std::unique_ptr<Analysed> analyse(std::string text, Language lang = Language::Python) {
    auto a = std::make_unique<Analysed>();
    a->text = std::move(text);
    a->decls = extract_functions(parse({lang, a->text, "t"}), lang);
    a->cfg = build_cfg(a->decls.front());
    return a;
}

std::set<std::string> controllers_of(const Analysed& a, const std::string& node) {
    std::set<std::string> out;
    for (const auto& [src, dst] : a.control()) {
        if (dst == node) out.insert(src);
    }
    return out;
}

TEST(ControlDependence, StraightLineDependsOnEntryOnly) {
    const auto a = analyse("def f():\n    x = 1\n    y = 2\n    z = 3\n");
    for (const auto& s : {"x = 1", "y = 2", "z = 3"}) EXPECT_EQ(controllers_of(*a, s), std::set<std::string>{"ENTRY"});
}

TEST(ControlDependence, DiamondBranchesDependOnPredicate) {
    const auto a = analyse("def f(c):\n    if c:\n        a = 1\n    else:\n        a = 2\n    return a\n");
    EXPECT_EQ(controllers_of(*a, "a = 1"), std::set<std::string>{"if c:"});
    EXPECT_EQ(controllers_of(*a, "a = 2"), std::set<std::string>{"if c:"});
    EXPECT_EQ(controllers_of(*a, "return a"), std::set<std::string>{"ENTRY"});
}

TEST(ControlDependence, NestedIfInsideWhile) {
    const auto a = analyse("def f(n):\n    i = 0\n    while i < n:\n        if i % 2 == 0:\n            print(i)\n"
                           "        i = i + 1\n");
    EXPECT_EQ(controllers_of(*a, "if i % 2 == 0:"), std::set<std::string>{"while i < n:"});
    EXPECT_TRUE(controllers_of(*a, "print(i)").count("if i % 2 == 0:"));
    EXPECT_FALSE(controllers_of(*a, "print(i)").count("while i < n:"));
    EXPECT_EQ(controllers_of(*a, "i = i + 1"), std::set<std::string>{"while i < n:"});
}

TEST(ControlDependence, EarlyReturnGuardsLaterCall) {
    const auto a = analyse(testing::read_file(testing::golden("guarded_call.py")));
    EXPECT_TRUE(controllers_of(*a, "save(data)").count("if data is None:"));
}

TEST(DataDependence, SimpleDefUse) {
    const auto a = analyse("def f():\n    x = 1\n    y = x\n");
    EXPECT_TRUE(a->data().count({"x = 1", "y = x", "x"}));
}

TEST(DataDependence, DataflowVariantsDifferInOneEdge) {
    const auto a1 = analyse(testing::read_file(testing::golden("dataflow_x.py")));
    const auto a2 = analyse(testing::read_file(testing::golden("dataflow_y.py")));
    // Compare by statement position: the z assignment is the only statement whose text differs.
    auto normalized = [](const Analysed& a) {
        std::set<std::tuple<std::string, std::string, std::string>> out;
        for (auto [src, dst, var] : a.data()) {
            if (dst.rfind("z = ", 0) == 0) dst = "z";
            out.emplace(src, dst, var);
        }
        return out;
    };
    const auto d1 = normalized(*a1);
    const auto d2 = normalized(*a2);
    std::set<std::tuple<std::string, std::string, std::string>> only1;
    std::set<std::tuple<std::string, std::string, std::string>> only2;
    std::set_difference(d1.begin(), d1.end(), d2.begin(), d2.end(), std::inserter(only1, only1.end()));
    std::set_difference(d2.begin(), d2.end(), d1.begin(), d1.end(), std::inserter(only2, only2.end()));
    using T = std::tuple<std::string, std::string, std::string>;
    EXPECT_EQ(only1, (std::set<T>{{"x = 1", "z", "x"}}));
    EXPECT_EQ(only2, (std::set<T>{{"y = x + 1", "z", "y"}}));
}

TEST(DataDependence, LoopCarriedSelfDependence) {
    const auto a = analyse("def f(n):\n    s = 0\n    for i in range(n):\n        s = s + i\n    return s\n");
    const auto d = a->data();
    EXPECT_TRUE(d.count({"s = s + i", "s = s + i", "s"}));
    EXPECT_TRUE(d.count({"s = 0", "s = s + i", "s"}));
    EXPECT_TRUE(d.count({"s = 0", "return s", "s"}));
}

TEST(DataDependence, AddingAStatementKeepsExistingEdges) {
    const std::string base = "def f(a):\n    x = a\n    if x > 0:\n        y = x\n    else:\n        y = 0\n    return y\n";
    const std::string grown =
        "def f(a):\n    x = a\n    print(x)\n    if x > 0:\n        y = x\n        print(y)\n    else:\n        y = 0\n"
        "    return y\n";
    const auto before = analyse(base)->data();
    const auto after = analyse(grown)->data();
    for (const auto& edge : before) EXPECT_TRUE(after.count(edge)) << std::get<0>(edge) << " -> " << std::get<1>(edge);
}

TEST(FunctionGraph, EveryStatementHasIncomingControlEdge) {
    for (const auto lang : {Language::Python, Language::Java}) {
        for (const auto& path : testing::desk_files(lang)) {
            const auto unit = testing::load_unit(path);
            for (const auto& decl : extract_functions(parse(unit), lang)) {
                const auto g = build_function_graph(decl);
                std::vector<bool> controlled(g.nodes.size(), false);
                for (const auto& e : g.edges) {
                    if (e.kind == EdgeKind::Control && e.src != e.dst) controlled[static_cast<std::size_t>(e.dst)] = true;
                }
                for (const auto& node : g.nodes) {
                    if (node.id == g.entry) continue;
                    EXPECT_TRUE(controlled[static_cast<std::size_t>(node.id)])
                        << path << " " << decl.name << " node " << node.id << " " << to_string(node.label);
                }
            }
        }
    }
}

TEST(FunctionGraph, EmptyFunctionIsSingleEntry) {
    const SourceUnit unit{Language::Java, "class A { void f() { } }", "A.java"};
    const auto decls = extract_functions(parse(unit), unit.language);
    ASSERT_EQ(decls.size(), 1u);
    const auto g = build_function_graph(decls[0]);
    EXPECT_EQ(g.nodes.size(), 1u);
    EXPECT_TRUE(g.edges.empty());
    EXPECT_EQ(g.nodes[0].label, (NodeLabel{LabelCategory::FunctionName, "f"}));
}

TEST(FunctionGraph, DataflowCode1HasBothEdgesFromX) {
    const std::string text = testing::read_file(testing::golden("dataflow_x.py"));
    const auto decls = extract_functions(parse({Language::Python, text, "a1"}), Language::Python);
    const auto g = build_function_graph(decls.front());
    auto node_at = [&](const std::string& stmt) {
        for (const auto& n : g.nodes) {
            if (span_text(text, n.span) == stmt) return n.id;
        }
        return -1;
    };
    const int x = node_at("x = 1");
    const int y = node_at("y = x + 1");
    const int z = node_at("z = x + 1");
    ASSERT_GE(x, 0);
    ASSERT_GE(y, 0);
    ASSERT_GE(z, 0);
    EXPECT_TRUE(std::binary_search(g.edges.begin(), g.edges.end(), PdgEdge{x, y, EdgeKind::Data}));
    EXPECT_TRUE(std::binary_search(g.edges.begin(), g.edges.end(), PdgEdge{x, z, EdgeKind::Data}));
    EXPECT_FALSE(std::binary_search(g.edges.begin(), g.edges.end(), PdgEdge{y, z, EdgeKind::Data}));
}

TEST(FunctionGraph, RecursiveFunctionHasCallSite) {
    const std::string text = testing::read_file(testing::golden("recursive.py"));
    const auto decls = extract_functions(parse({Language::Python, text, "a3"}), Language::Python);
    const auto g = build_function_graph(decls.front());
    const auto call = std::find_if(g.nodes.begin(), g.nodes.end(), [](const PdgNode& n) { return n.is_call_site(); });
    ASSERT_NE(call, g.nodes.end());
    EXPECT_EQ(call->callee, "recursion");
    EXPECT_EQ(call->call_args, 1);
}

TEST(FunctionGraph, NoDataSelfLoopsAndSortedEdges) {
    for (const auto& path : testing::desk_files(Language::Python)) {
        const auto unit = testing::load_unit(path);
        for (const auto& decl : extract_functions(parse(unit), unit.language)) {
            const auto g = build_function_graph(decl);
            EXPECT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end()));
            EXPECT_EQ(std::adjacent_find(g.edges.begin(), g.edges.end()), g.edges.end());
            for (const auto& e : g.edges) EXPECT_FALSE(e.kind == EdgeKind::Data && e.src == e.dst) << path;
        }
    }
}

TEST(Labels, NormalizationIsIdempotent) {
    const NodeLabel raw[] = {
        {LabelCategory::Operation, "&&"},          {LabelCategory::Operation, "is not"},
        {LabelCategory::Operation, "<,<="},        {LabelCategory::Operation, "++"},
        {LabelCategory::Operation, "assign"},      {LabelCategory::IdentifierClass, "total"},
        {LabelCategory::IdentifierClass, "PARAM"}, {LabelCategory::ConstantClass, "CHAR_LIT"},
        {LabelCategory::ConstantClass, "weird"},   {LabelCategory::FunctionName, "solve"},
        {LabelCategory::Root, "anything"},
    };
    for (const auto& label : raw) {
        const auto once = normalize_label(label);
        EXPECT_EQ(normalize_label(once), once) << to_string(label);
    }
    EXPECT_EQ(normalize_label({LabelCategory::Operation, "&&"}).detail, "and");
    EXPECT_EQ(normalize_label({LabelCategory::IdentifierClass, "total"}).detail, "VAR");
}

} // namespace
} // namespace cssg
