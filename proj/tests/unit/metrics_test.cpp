#include <gtest/gtest.h>

#include <cmath>

#include "cssg/errors.hpp"
#include "cssg/metrics.hpp"
#include "support.hpp"

namespace cssg {
namespace {

using testing::golden;
using testing::load_unit;

TokenStream stream(const std::vector<std::string>& words) {
    TokenStream s;
    uint32_t pos = 0;
    for (const auto& w : words) {
        s.tokens.push_back({TokenKind::Identifier, w, {pos, pos + static_cast<uint32_t>(w.size())}});
        pos += static_cast<uint32_t>(w.size()) + 1;
    }
    return s;
}

SemanticGraph root_only() {
    SemanticGraph g;
    g.nodes.push_back({0, {LabelCategory::Root, "ROOT"}, "", {}, "", 0, false});
    return g;
}

LabeledTree tree(std::vector<std::string> labels, std::vector<int> leftmost) { return {std::move(labels), std::move(leftmost)}; }

std::vector<SourceUnit> sample_units() {
    std::vector<SourceUnit> units;
    const auto py = testing::desk_files(Language::Python);
    const auto java = testing::desk_files(Language::Java);
    for (std::size_t i = 0; i < py.size(); i += 15) units.push_back(load_unit(py[i]));
    for (std::size_t i = 0; i < java.size(); i += 15) units.push_back(load_unit(java[i]));
    return units;
}

TEST(Cssg, SelfSimilarityIsOne) {
    for (const auto& unit : sample_units()) {
        const auto r = cssg(unit, unit);
        EXPECT_EQ(r.score, 1.0) << unit.id;
        EXPECT_EQ(r.ged, 0);
    }
}

TEST(Cssg, RootOnlyAgainstRootPlusEntry) {
    SemanticGraph g2 = root_only();
    g2.nodes.push_back({1, {LabelCategory::FunctionName, "f"}, "f", {}, "", 0, false});
    g2.edges.push_back({0, 1, EdgeKind::Root});
    const auto r = cssg_graphs(root_only(), g2);
    EXPECT_EQ(r.ged, 2);
    EXPECT_EQ(r.d_max, 4);
    EXPECT_DOUBLE_EQ(r.score, 0.5);
}

TEST(Cssg, RootOnlyPairIsDegenerate) {
    const auto r = cssg_graphs(root_only(), root_only());
    EXPECT_EQ(r.score, 1.0);
    EXPECT_TRUE(r.degenerate);
}

TEST(Cssg, DataflowVariantsAreDistinguished) {
    const auto a = load_unit(golden("dataflow_x.py"));
    const auto b = load_unit(golden("dataflow_y.py"));
    EXPECT_LT(cssg(a, b).score, 1.0);
    EXPECT_EQ(tsed(a, b), 1.0);
}

TEST(Cssg, UsesApproxAboveBudget) {
    const auto a = load_unit(golden("recursive.py"));
    const auto b = load_unit(golden("iterative.py"));
    EXPECT_EQ(cssg(a, b, {2, kDefaultExpansionLimit}).solver, Solver::Approx);
    EXPECT_EQ(cssg(a, b).solver, Solver::Exact);
}

TEST(Cssg, UnparseableInputThrows) {
    const SourceUnit bad{Language::Python, "x = '\xff'\n", "bad"};
    EXPECT_THROW(cssg(bad, bad), ParseFailure);
}

TEST(Bleu, IdenticalStreamsScoreOne) {
    const auto s = stream({"a", "b", "c", "d", "e"});
    EXPECT_DOUBLE_EQ(bleu(s, s), 1.0);
}

TEST(Bleu, NoSharedTokens) { EXPECT_LT(bleu(stream({"a", "b", "c"}), stream({"x", "y", "z"})), 0.01); }

TEST(Bleu, OneChangedTokenOfTwenty) {
    std::vector<std::string> ref;
    for (int i = 0; i < 20; ++i) ref.push_back("t" + std::to_string(i));
    auto cand = ref;
    cand[10] = "changed";
    // Matched n-grams: 19/20 unigrams, 17/19 bigrams, 15/18 trigrams, 13/17 four-grams;
    // the n > 1 precisions are add-one smoothed and both sides have 20 tokens.
    const double expected = std::exp((std::log(19.0 / 20) + std::log(18.0 / 20) + std::log(16.0 / 19) +
                                      std::log(14.0 / 18)) / 4);
    EXPECT_NEAR(bleu(stream(ref), stream(cand)), expected, 1e-12);
}

TEST(Bleu, ShortCandidateIsPenalized) {
    const auto ref = stream({"a", "b", "c", "d"});
    const auto cand = stream({"a", "b"});
    // p1 = 1, p2 = 1 (smoothed 2/2), p3 = p4 = 1/1; brevity exp(1 - 4/2).
    EXPECT_NEAR(bleu(ref, cand), std::exp(-1.0), 1e-12);
}

TEST(Bleu, IsNotSymmetric) {
    const auto a = stream({"a", "b", "c", "d"});
    const auto b = stream({"a", "b"});
    EXPECT_NE(bleu(a, b), bleu(b, a));
}

TEST(Bleu, EmptyReferenceThrows) { EXPECT_THROW(bleu(TokenStream{}, stream({"a"})), EmptyInput); }

TEST(Jaccard, SetArithmetic) {
    EXPECT_DOUBLE_EQ(jaccard(stream({"x", "=", "1", "y"}), stream({"x", "=", "2", "y"})), 0.6);
    EXPECT_DOUBLE_EQ(jaccard(stream({"a", "b"}), stream({"b", "a", "a"})), 1.0);
    EXPECT_DOUBLE_EQ(jaccard(stream({"a"}), stream({"b"})), 0.0);
    EXPECT_DOUBLE_EQ(jaccard(TokenStream{}, TokenStream{}), 1.0);
}

TEST(TreeEditDistance, SingleNodeAgainstTwoNodes) {
    const auto one = tree({"a"}, {0});
    const auto two = tree({"b", "a"}, {0, 0});
    EXPECT_EQ(tree_edit_distance(one, two), 1u);
    EXPECT_EQ(tree_edit_distance(two, one), 1u);
}

TEST(TreeEditDistance, ClassicExample) {
    // f(d(a, c(b)), e) vs f(c(d(a, b)), e): distance 2.
    const auto t1 = tree({"a", "b", "c", "d", "e", "f"}, {0, 1, 1, 0, 4, 0});
    const auto t2 = tree({"a", "b", "d", "c", "e", "f"}, {0, 1, 0, 0, 4, 0});
    EXPECT_EQ(tree_edit_distance(t1, t2), 2u);
    EXPECT_EQ(tree_edit_distance(t2, t1), 2u);
    EXPECT_EQ(tree_edit_distance(t1, t1), 0u);
}

TEST(Tsed, AnonymizationHidesNames) {
    const SourceUnit a{Language::Python, "a = b + 1\n", "a"};
    const SourceUnit b{Language::Python, "x = y + 1\n", "b"};
    EXPECT_EQ(tsed(a, b), 1.0);
    EXPECT_LT(tsed(a, b, {true}), 1.0);
}

TEST(Metrics, BoundedReflexiveAndSymmetric) {
    const auto units = sample_units();
    for (const auto& a : units) {
        for (const auto metric : kAllMetrics) {
            const double self = score_pair(metric, a, a).score;
            if (metric == Metric::Bleu) {
                EXPECT_GE(self, 0.999) << a.id;
            } else {
                EXPECT_EQ(self, 1.0) << a.id << " " << to_string(metric);
            }
        }
        for (const auto& b : units) {
            for (const auto metric : kAllMetrics) {
                const double ab = score_pair(metric, a, b).score;
                EXPECT_GE(ab, 0.0);
                EXPECT_LE(ab, 1.0);
                if (metric != Metric::Bleu) {
                    EXPECT_EQ(ab, score_pair(metric, b, a).score) << to_string(metric);
                }
            }
        }
    }
}

TEST(Metrics, NamesRoundTrip) {
    for (const auto metric : kAllMetrics) EXPECT_EQ(metric_from_string(to_string(metric)), metric);
    EXPECT_EQ(display_name(Metric::Cssg), "CSSG");
    EXPECT_FALSE(metric_from_string("codebleu"));
}

} // namespace
} // namespace cssg
