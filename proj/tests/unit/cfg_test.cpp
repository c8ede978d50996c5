#include <gtest/gtest.h>

#include <queue>
#include <set>
#include <utility>

#include "cssg/frontend.hpp"
#include "cssg/pdg.hpp"
#include "support.hpp"

namespace cssg {
namespace {

using Edge = std::pair<std::string, std::string>;

struct Built {
    std::string text;
    std::vector<FunctionDecl> decls;
    Cfg cfg;
};

// Keeps the source and declarations alive: CFG nodes borrow from them.
std::unique_ptr<Built> build(Language lang, std::string text, const std::string& function) {
    auto b = std::make_unique<Built>();
    b->text = std::move(text);
    b->decls = extract_functions(parse({lang, b->text, "t"}), lang);
    for (const auto& d : b->decls) {
        if (d.name == function) b->cfg = build_cfg(d);
    }
    return b;
}

std::string name_of(const Built& b, int id) {
    const auto& node = b.cfg.nodes[static_cast<std::size_t>(id)];
    if (node.kind == CfgNodeKind::Entry) return "ENTRY";
    if (node.kind == CfgNodeKind::Exit) return "EXIT";
    const auto text = testing::span_text(b.text, node.span);
    return text.empty() ? to_string(node.label) : text;
}

std::set<Edge> named_edges(const Built& b) {
    std::set<Edge> out;
    for (const auto& e : b.cfg.edges) out.emplace(name_of(b, e.src), name_of(b, e.dst));
    return out;
}

std::set<std::string> reachable_from_entry(const Built& b) {
    std::set<std::string> seen;
    std::vector<bool> visited(b.cfg.size(), false);
    std::queue<int> q;
    q.push(b.cfg.entry);
    visited[static_cast<std::size_t>(b.cfg.entry)] = true;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        seen.insert(name_of(b, v));
        for (int w : b.cfg.successors(v)) {
            if (!visited[static_cast<std::size_t>(w)]) {
                visited[static_cast<std::size_t>(w)] = true;
                q.push(w);
            }
        }
    }
    return seen;
}

TEST(Cfg, StraightLine) {
    const auto b = build(Language::Python, "def f():\n    x = 1\n    y = 2\n", "f");
    EXPECT_EQ(named_edges(*b), (std::set<Edge>{{"ENTRY", "x = 1"}, {"x = 1", "y = 2"}, {"y = 2", "EXIT"}}));
}

TEST(Cfg, IfElseDiamond) {
    const auto b = build(Language::Python, "def f(c):\n    if c:\n        a = 1\n    else:\n        a = 2\n", "f");
    const auto edges = named_edges(*b);
    EXPECT_TRUE(edges.count({"if c:", "a = 1"}));
    EXPECT_TRUE(edges.count({"if c:", "a = 2"}));
    EXPECT_TRUE(edges.count({"a = 1", "EXIT"}));
    EXPECT_TRUE(edges.count({"a = 2", "EXIT"}));
    int predicates = 0;
    for (const auto& n : b->cfg.nodes) predicates += n.kind == CfgNodeKind::Predicate;
    EXPECT_EQ(predicates, 1);
    for (const auto& e : b->cfg.edges) {
        if (name_of(*b, e.src) == "if c:") EXPECT_TRUE(e.branch == "true" || e.branch == "false");
    }
}

struct HandDrawn {
    Language lang;
    std::string source;
    std::string function;
    std::set<Edge> edges;
};

// Edge lists drawn by hand from the snippets.
const HandDrawn kHandDrawn[] = {
    {Language::Python,
     "def f(n):\n    i = 0\n    while i < n:\n        if i == 3:\n            break\n        i = i + 1\n    return i\n",
     "f",
     {{"ENTRY", "identifier_class:PARAM"},
      {"identifier_class:PARAM", "i = 0"},
      {"i = 0", "while i < n:"},
      {"while i < n:", "if i == 3:"},
      {"if i == 3:", "break"},
      {"if i == 3:", "i = i + 1"},
      {"i = i + 1", "while i < n:"},
      {"while i < n:", "return i"},
      {"break", "return i"},
      {"return i", "EXIT"}}},
    {Language::Python,
     "def g(a):\n    t = 0\n    for v in a:\n        if v < 0:\n            continue\n        t = t + v\n    print(t)\n",
     "g",
     {{"ENTRY", "identifier_class:PARAM"},
      {"identifier_class:PARAM", "t = 0"},
      {"t = 0", "for v in a:"},
      {"for v in a:", "if v < 0:"},
      {"if v < 0:", "continue"},
      {"if v < 0:", "t = t + v"},
      {"t = t + v", "for v in a:"},
      {"continue", "for v in a:"},
      {"for v in a:", "print(t)"},
      {"print(t)", "EXIT"}}},
    {Language::Python,
     "def h(s):\n    try:\n        x = int(s)\n    except ValueError:\n        x = 0\n    return x\n",
     "h",
     {{"ENTRY", "identifier_class:PARAM"},
      {"identifier_class:PARAM", "try:"},
      {"try:", "int(s)"},
      {"int(s)", "x = int(s)"},
      {"try:", "except ValueError:"},
      {"except ValueError:", "x = 0"},
      {"x = int(s)", "return x"},
      {"x = 0", "return x"},
      {"return x", "EXIT"}}},
    {Language::Java,
     "class M {\n  static int k(int n) {\n    int s = 0;\n    for (int i = 0; i < n; i++) {\n      s += f(i);\n    }\n"
     "    return s;\n  }\n}\n",
     "k",
     {{"ENTRY", "identifier_class:PARAM"},
      {"identifier_class:PARAM", "int s = 0;"},
      {"int s = 0;", "int i = 0;"},
      {"int i = 0;", "for (int i = 0; i < n; i++) {"},
      {"for (int i = 0; i < n; i++) {", "f(i)"},
      {"f(i)", "s += f(i);"},
      {"s += f(i);", "i++"},
      {"i++", "for (int i = 0; i < n; i++) {"},
      {"for (int i = 0; i < n; i++) {", "return s;"},
      {"return s;", "EXIT"}}},
    {Language::Python,
     "def m(x):\n    if x > 0:\n        y = 1\n    elif x < 0:\n        y = 2\n    else:\n        y = 3\n    return y\n",
     "m",
     {{"ENTRY", "identifier_class:PARAM"},
      {"identifier_class:PARAM", "if x > 0:"},
      {"if x > 0:", "y = 1"},
      {"if x > 0:", "elif x < 0:"},
      {"elif x < 0:", "y = 2"},
      {"elif x < 0:", "y = 3"},
      {"y = 1", "return y"},
      {"y = 2", "return y"},
      {"y = 3", "return y"},
      {"return y", "EXIT"}}},
};

class HandDrawnCfg : public ::testing::TestWithParam<std::size_t> {};

TEST_P(HandDrawnCfg, MatchesEdgesAndReachableNodes) {
    const auto& expected = kHandDrawn[GetParam()];
    const auto b = build(expected.lang, expected.source, expected.function);
    EXPECT_EQ(named_edges(*b), expected.edges);

    std::set<std::string> expected_nodes;
    for (const auto& [src, dst] : expected.edges) {
        expected_nodes.insert(src);
        expected_nodes.insert(dst);
    }
    EXPECT_EQ(reachable_from_entry(*b), expected_nodes);
}

INSTANTIATE_TEST_SUITE_P(Snippets, HandDrawnCfg, ::testing::Range<std::size_t>(0, std::size(kHandDrawn)));

TEST(Cfg, EveryNodeReachesExit) {
    const std::string source = "def f(x):\n    return x\n    y = 2\n    while True:\n        pass\n";
    const auto b = build(Language::Python, source, "f");
    const auto& cfg = b->cfg;
    for (const auto& node : cfg.nodes) {
        std::vector<bool> seen(cfg.size(), false);
        std::vector<int> stack{node.id};
        bool reaches = false;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (v == cfg.exit) reaches = true;
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = true;
            for (int w : cfg.successors(v)) stack.push_back(w);
        }
        EXPECT_TRUE(reaches) << name_of(*b, node.id);
    }
}

TEST(Cfg, CallSitesCarryCallee) {
    const auto b = build(Language::Python, "def f(a):\n    return len(a)\n", "f");
    int calls = 0;
    for (const auto& node : b->cfg.nodes) {
        if (node.kind != CfgNodeKind::CallSite) continue;
        ++calls;
        EXPECT_EQ(node.callee, "len");
        EXPECT_EQ(node.call_args, 1);
    }
    EXPECT_EQ(calls, 1);
}

TEST(Cfg, ContainerWriteDefinesContainer) {
    const auto b = build(Language::Python, "def f(a, i):\n    a[i] = 1\n", "f");
    bool found = false;
    for (const auto& node : b->cfg.nodes) {
        if (name_of(*b, node.id) != "a[i] = 1") continue;
        found = true;
        EXPECT_NE(std::find(node.defs.begin(), node.defs.end(), "a"), node.defs.end());
        EXPECT_NE(std::find(node.uses.begin(), node.uses.end(), "i"), node.uses.end());
    }
    EXPECT_TRUE(found);
}

} // namespace
} // namespace cssg
