#include <gtest/gtest.h>

#include <random>

#include "cssg/errors.hpp"
#include "cssg/ged.hpp"
#include "support.hpp"

namespace cssg {
namespace {

using testing::random_graph;

SemanticNode node(int id, LabelCategory category, std::string detail, std::string function = "") {
    return {id, {category, std::move(detail)}, std::move(function), {}, "", 0, false};
}

SemanticGraph root_only() {
    SemanticGraph g;
    g.nodes.push_back(node(0, LabelCategory::Root, "ROOT"));
    return g;
}

// Root plus one entry per name, each with a root edge.
SemanticGraph entries(const std::vector<std::string>& names) {
    SemanticGraph g = root_only();
    for (const auto& name : names) {
        const int id = static_cast<int>(g.nodes.size());
        g.nodes.push_back(node(id, LabelCategory::FunctionName, name, name));
        g.edges.push_back({0, id, EdgeKind::Root});
    }
    return g;
}

SemanticGraph golden(const std::string& name) { return build_semantic_graph(testing::load_unit(testing::golden(name))); }

std::string canonical(const SemanticGraph& g) { return serialize(g, GraphFormat::Json); }

// Removes node `victim` and every incident edge, renumbering the rest.
SemanticGraph without_node(const SemanticGraph& g, int victim) {
    SemanticGraph out;
    std::vector<int> remap(g.nodes.size(), -1);
    for (const auto& n : g.nodes) {
        if (n.id == victim) continue;
        remap[static_cast<std::size_t>(n.id)] = static_cast<int>(out.nodes.size());
        auto copy = n;
        copy.id = static_cast<int>(out.nodes.size());
        out.nodes.push_back(copy);
    }
    for (const auto& e : g.edges) {
        if (e.src == victim || e.dst == victim) continue;
        out.edges.push_back({remap[static_cast<std::size_t>(e.src)], remap[static_cast<std::size_t>(e.dst)], e.kind});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

TEST(Compatible, FunctionNamesMustAgree) {
    EXPECT_TRUE(compatible(node(1, LabelCategory::FunctionName, "main"), node(4, LabelCategory::FunctionName, "main")));
    EXPECT_FALSE(compatible(node(1, LabelCategory::FunctionName, "main"), node(4, LabelCategory::FunctionName, "solve")));
}

TEST(Compatible, OperationsMustAgree) {
    EXPECT_TRUE(compatible(node(1, LabelCategory::Operation, "+"), node(2, LabelCategory::Operation, "+")));
    EXPECT_FALSE(compatible(node(1, LabelCategory::Operation, "+"), node(2, LabelCategory::Operation, "-")));
    EXPECT_FALSE(compatible(node(1, LabelCategory::Operation, "+"), node(2, LabelCategory::IdentifierClass, "VAR")));
    EXPECT_TRUE(compatible(node(0, LabelCategory::Root, "ROOT"), node(0, LabelCategory::Root, "ROOT")));
}

TEST(GedExact, IdenticalGraphsCostNothing) {
    const auto g = golden("guarded_call.py");
    EXPECT_EQ(ged_exact(g, g).total_cost, 0);
    EXPECT_EQ(ged_approx(g, g).total_cost, 0);
}

TEST(GedExact, RootOnlyAgainstOneEntry) {
    const auto script = ged_exact(root_only(), entries({"f"}));
    EXPECT_EQ(script.total_cost, 2);
    ASSERT_EQ(script.operations.size(), 3u); // root substitution, node insert, edge insert
}

TEST(GedExact, DataflowVariantsDiffer) {
    EXPECT_GT(ged_exact(golden("dataflow_x.py"), golden("dataflow_y.py")).total_cost, 0);
}

TEST(GedExact, BudgetIsEnforced) {
    const auto g = golden("guarded_call.py");
    EXPECT_THROW(ged_exact(g, g, 3), BudgetExceeded);
}

TEST(GedExact, ExpansionLimitFallsBackToApprox) {
    const auto a = build_semantic_graph(
        testing::load_unit(testing::data_dir() / "desk_corpus" / "problems" / "p14_sort" / "correct_1.py"));
    const auto b = build_semantic_graph(
        testing::load_unit(testing::data_dir() / "desk_corpus" / "problems" / "p14_sort" / "correct_2.py"));
    const auto full = ged_exact(a, b, 1000, 0);
    const auto capped = ged_exact(a, b, 1000, 1);
    EXPECT_EQ(full.solver, Solver::Exact);
    EXPECT_EQ(capped.solver, Solver::Approx);
    EXPECT_GE(capped.total_cost, full.total_cost);
}

TEST(GedApprox, DeletingOneNodeCostsOnePlusDegree) {
    for (const char* name : {"dataflow_x.py", "guarded_call.py", "recursive.py"}) {
        const auto g = golden(name);
        for (const auto& n : g.nodes) {
            if (n.id == g.root) continue;
            long long degree = 0;
            for (const auto& e : g.edges) degree += e.src == n.id || e.dst == n.id;
            const auto smaller = without_node(g, n.id);
            EXPECT_EQ(ged_exact(g, smaller).total_cost, 1 + degree) << name << " node " << n.id;
            EXPECT_EQ(ged_approx(g, smaller).total_cost, 1 + degree) << name << " node " << n.id;
        }
    }
}

TEST(GedApprox, NeverBelowExactOnSmallPairs) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_graph(rng, 6);
        const auto b = random_graph(rng, 6);
        EXPECT_GE(ged_approx(a, b).total_cost, ged_exact(a, b).total_cost) << "trial " << trial;
    }
}

TEST(GedApprox, IsSymmetric) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_graph(rng, 12);
        const auto b = random_graph(rng, 12);
        EXPECT_EQ(ged_approx(a, b).total_cost, ged_approx(b, a).total_cost) << "trial " << trial;
    }
}

TEST(GedOracle, RootOnlyPair) { EXPECT_EQ(ged_oracle(root_only(), root_only()), 0); }

TEST(GedOracle, DisjointLabelsCostEverything) {
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::string> left;
        std::vector<std::string> right;
        for (int i = 0; i < k; ++i) {
            left.push_back("a" + std::to_string(i));
            right.push_back("b" + std::to_string(i));
        }
        const auto g1 = entries(left);
        const auto g2 = entries(right);
        EXPECT_EQ(ged_oracle(g1, g2), 2 * k + k + k);
        EXPECT_EQ(ged_exact(g1, g2).total_cost, 2 * k + k + k);
    }
}

TEST(GedOracle, RefusesLargeGraphs) {
    const auto big = entries({"a", "b", "c", "d", "e", "f", "g", "h"});
    EXPECT_THROW(ged_oracle(big, big), OracleTooLarge);
}

TEST(GedExact, MatchesOracle) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_graph(rng, kOracleMaxNodes);
        const auto b = random_graph(rng, kOracleMaxNodes);
        ASSERT_EQ(ged_exact(a, b).total_cost, ged_oracle(a, b)) << "trial " << trial;
    }
}

TEST(GedExact, IsSymmetric) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_graph(rng, 10);
        const auto b = random_graph(rng, 10);
        EXPECT_EQ(ged_exact(a, b).total_cost, ged_exact(b, a).total_cost) << "trial " << trial;
    }
}

TEST(GedExact, TriangleInequality) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_graph(rng, 7);
        const auto b = random_graph(rng, 7);
        const auto c = random_graph(rng, 7);
        EXPECT_LE(ged_exact(a, c).total_cost, ged_exact(a, b).total_cost + ged_exact(b, c).total_cost);
    }
}

TEST(EditScript, ReplayReproducesTarget) {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_graph(rng, 8);
        const auto b = random_graph(rng, 8);
        for (const auto& script : {ged_exact(a, b), ged_approx(a, b)}) {
            EXPECT_EQ(canonical(apply_edit_script(a, script)), canonical(b)) << "trial " << trial;
            long long sum = 0;
            for (const auto& op : script.operations) sum += op.cost;
            EXPECT_EQ(sum, script.total_cost);
            EXPECT_EQ(mapping_cost(a, b, script.mapping), script.total_cost);
        }
    }
}

TEST(EditScript, ReplayOnRealGraphs) {
    const auto a = golden("recursive.py");
    const auto b = golden("iterative.py");
    EXPECT_EQ(canonical(apply_edit_script(a, ged_exact(a, b))), canonical(b));
}

TEST(EditScript, IncompatibleMappingIsRejected) {
    const auto g1 = entries({"f"});
    const auto g2 = entries({"g"});
    EXPECT_THROW(script_from_mapping(g1, g2, {0, 1}, Solver::Exact), std::invalid_argument);
}

TEST(EditScript, IncompleteScriptIsRejected) {
    const auto g = entries({"f", "g"});
    auto script = ged_exact(g, g);
    script.operations.pop_back();
    EXPECT_THROW(apply_edit_script(g, script), std::invalid_argument);
}

} // namespace
} // namespace cssg
