#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <random>

#include "cssg/errors.hpp"
#include "cssg/semgraph.hpp"
#include "support.hpp"

namespace cssg {
namespace {

SemanticGraph graph_of(const std::string& text, Language lang = Language::Python) {
    return build_semantic_graph({lang, text, "t"});
}

SemanticGraph golden_graph(const std::string& name) {
    return build_semantic_graph(testing::load_unit(testing::golden(name)));
}

using NodeKey = std::pair<std::string, std::string>; // (function, label)
using EdgeKey = std::tuple<NodeKey, NodeKey, EdgeKind>;

std::multiset<NodeKey> node_keys(const SemanticGraph& g) {
    std::multiset<NodeKey> out;
    for (const auto& n : g.nodes) out.emplace(n.function, to_string(n.label));
    return out;
}

std::multiset<EdgeKey> edge_keys(const SemanticGraph& g) {
    std::multiset<EdgeKey> out;
    auto key = [&](int id) {
        const auto& n = g.nodes[static_cast<std::size_t>(id)];
        return NodeKey{n.function, to_string(n.label)};
    };
    for (const auto& e : g.edges) out.emplace(key(e.src), key(e.dst), e.kind);
    return out;
}

template <class T>
std::multiset<T> minus(const std::multiset<T>& a, const std::multiset<T>& b) {
    std::multiset<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

TEST(SemanticGraph, EmptyFileIsRootAndMain) {
    const auto g = graph_of("");
    ASSERT_EQ(g.node_count(), 2u);
    ASSERT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.nodes[0].label.category, LabelCategory::Root);
    EXPECT_EQ(g.nodes[1].label, (NodeLabel{LabelCategory::FunctionName, "__main__"}));
    EXPECT_EQ(g.edges[0], (PdgEdge{0, 1, EdgeKind::Root}));
}

TEST(SemanticGraph, RecursionClosesCycleThroughCallEdge) {
    const auto g = golden_graph("recursive.py");
    const auto calls = call_edges(g);
    ASSERT_EQ(calls.size(), 1u);
    EXPECT_EQ(calls[0].callee_name, "recursion");
    EXPECT_EQ(g.nodes[static_cast<std::size_t>(calls[0].dst)].label.detail, "recursion");
    EXPECT_TRUE(has_call_cycle(g));
    EXPECT_TRUE(has_cycle(g));
}

TEST(SemanticGraph, IterativeVariantIsAcyclicIgnoringSelfLoops) {
    const auto g = golden_graph("iterative.py");
    EXPECT_FALSE(has_cycle(g, true));
    EXPECT_FALSE(has_call_cycle(g));
}

TEST(SemanticGraph, RemovingACallRemovesExactlyItsNodeAndEdges) {
    const std::string with = "def g(a):\n    return a + 1\n\ndef f(x):\n    y = x * 2\n    g(y)\n    return y\n";
    const std::string without = "def g(a):\n    return a + 1\n\ndef f(x):\n    y = x * 2\n    return y\n";
    const auto g1 = graph_of(with);
    const auto g2 = graph_of(without);

    const auto calls = call_edges(g1);
    ASSERT_EQ(calls.size(), 1u);
    EXPECT_EQ(g1.nodes[static_cast<std::size_t>(calls[0].dst)].label.detail, "g");

    const NodeKey call_node{"f", "operation:call"};
    EXPECT_EQ(minus(node_keys(g1), node_keys(g2)), std::multiset<NodeKey>{call_node});
    EXPECT_TRUE(minus(node_keys(g2), node_keys(g1)).empty());

    // Edges touching the call site: its call edge, its control edge from the entry and the data edge for y.
    const NodeKey entry{"f", "function_name:f"};
    const NodeKey assign{"f", "operation:assign"};
    const NodeKey callee{"g", "function_name:g"};
    EXPECT_EQ(minus(edge_keys(g1), edge_keys(g2)),
              (std::multiset<EdgeKey>{{entry, call_node, EdgeKind::Control},
                                      {assign, call_node, EdgeKind::Data},
                                      {call_node, callee, EdgeKind::Call}}));
    EXPECT_TRUE(minus(edge_keys(g2), edge_keys(g1)).empty());
}

TEST(SemanticGraph, ExternalCallsHaveNoCallEdge) {
    const auto g = graph_of("print(len([1, 2]))\n");
    EXPECT_TRUE(call_edges(g).empty());
    const auto calls = std::count_if(g.nodes.begin(), g.nodes.end(), [](const auto& n) { return !n.callee.empty(); });
    EXPECT_EQ(calls, 2);
}

TEST(SemanticGraph, JavaOverloadsResolveByArity) {
    const auto g = graph_of("class A {\n  static int f(int a) { return a; }\n"
                            "  static int f(int a, int b) { return f(a) + b; }\n}\n",
                            Language::Java);
    const auto calls = call_edges(g);
    ASSERT_EQ(calls.size(), 1u);
    EXPECT_EQ(g.nodes[static_cast<std::size_t>(calls[0].src)].function, "f/2");
    EXPECT_EQ(g.nodes[static_cast<std::size_t>(calls[0].dst)].label.detail, "f/1");
}

TEST(SemanticGraph, DeskCorpusGraphsAreValid) {
    for (const auto lang : {Language::Python, Language::Java}) {
        for (const auto& path : testing::desk_files(lang)) {
            const auto g = build_semantic_graph(testing::load_unit(path));
            EXPECT_TRUE(validate(g).empty()) << path << ": " << validate(g).front();
            EXPECT_EQ(g.root, 0);
            std::size_t root_in = 0;
            for (const auto& e : g.edges) root_in += e.dst == g.root;
            EXPECT_EQ(root_in, 0u);
            EXPECT_GE(g.edge_count(), g.entries().size());
            for (const auto& c : call_edges(g)) {
                const auto& target = g.nodes[static_cast<std::size_t>(c.dst)].label.detail;
                EXPECT_TRUE(target == c.callee_name || target.rfind(c.callee_name + "/", 0) == 0) << path;
            }
        }
    }
}

TEST(SemanticGraph, IntegrationIgnoresInputOrder) {
    const std::string text = testing::read_file(testing::data_dir() / "desk_corpus" / "problems" / "p05_fibonacci" /
                                                "correct_2.java");
    const SourceUnit unit{Language::Java, text, "fib"};
    std::vector<FunctionGraph> graphs;
    for (const auto& decl : extract_functions(parse(unit), unit.language)) graphs.push_back(build_function_graph(decl));
    ASSERT_GE(graphs.size(), 2u);
    const std::string reference = serialize(integrate(graphs), GraphFormat::Json);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(graphs.begin(), graphs.end(), rng);
        EXPECT_EQ(serialize(integrate(graphs), GraphFormat::Json), reference);
    }
}

TEST(Serialize, RootOnlyGraph) {
    const auto g = integrate({});
    const auto doc = nlohmann::json::parse(serialize(g, GraphFormat::Json));
    EXPECT_EQ(doc["nodes"].size(), 1u);
    EXPECT_EQ(doc["edges"].size(), 0u);
}

TEST(Serialize, JsonRoundTrip) {
    for (const auto& path : testing::desk_files(Language::Java)) {
        const auto g = build_semantic_graph(testing::load_unit(path));
        const std::string json = serialize(g, GraphFormat::Json);
        const auto back = deserialize_json(json);
        EXPECT_EQ(serialize(back, GraphFormat::Json), json) << path;
        EXPECT_EQ(back.node_count(), g.node_count());
        EXPECT_EQ(back.edges, g.edges);
    }
}

TEST(Serialize, GuardedCallDotHasControlEdgeFromPredicate) {
    const auto g = golden_graph("guarded_call.py");
    int predicate = -1;
    int save = -1;
    for (const auto& n : g.nodes) {
        if (n.label == NodeLabel{LabelCategory::Operation, "=="}) predicate = n.id;
        if (n.callee == "save") save = n.id;
    }
    ASSERT_GE(predicate, 0);
    ASSERT_GE(save, 0);
    const std::string dot = serialize(g, GraphFormat::Dot);
    const std::string edge = "n" + std::to_string(predicate) + " -> n" + std::to_string(save) + " [kind=control";
    EXPECT_NE(dot.find(edge), std::string::npos) << dot;
}

TEST(Serialize, MalformedJsonIsRejected) {
    EXPECT_THROW(deserialize_json("{"), GraphFormatError);
    EXPECT_THROW(deserialize_json("{\"nodes\": []}"), GraphFormatError);
    // Two roots.
    EXPECT_THROW(deserialize_json(R"({"nodes":[{"id":0,"category":"root","detail":"ROOT"},
                                               {"id":1,"category":"root","detail":"ROOT"}],"edges":[]})"),
                 GraphFormatError);
    // Data self-loop.
    EXPECT_THROW(deserialize_json(R"({"nodes":[{"id":0,"category":"root","detail":"ROOT"},
                                               {"id":1,"category":"function_name","detail":"f","fn":"f"},
                                               {"id":2,"category":"operation","detail":"+","fn":"f"}],
                                      "edges":[{"src":0,"dst":1,"kind":"root"},{"src":2,"dst":2,"kind":"data"}]})"),
                 GraphFormatError);
}

TEST(Validate, ReportsMissingRootEdge) {
    auto g = graph_of("def f():\n    return 1\n");
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [](const PdgEdge& e) { return e.kind == EdgeKind::Root; }),
                  g.edges.end());
    EXPECT_FALSE(validate(g).empty());
}

} // namespace
} // namespace cssg
