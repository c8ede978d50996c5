#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cssg/frontend.hpp"
#include "cssg/ged.hpp"
#include "cssg/semgraph.hpp"

namespace cssg {

enum class Metric : uint8_t { Bleu, Jaccard, Tsed, Cssg };

inline constexpr Metric kAllMetrics[] = {Metric::Bleu, Metric::Jaccard, Metric::Tsed, Metric::Cssg};

/// Lower-case name ("bleu", "jaccard", "tsed", "cssg").
std::string_view to_string(Metric metric);
/// Display name used in reports ("BLEU", "Jaccard", "TSED", "CSSG").
std::string_view display_name(Metric metric);
std::optional<Metric> metric_from_string(std::string_view name);

struct SimilarityResult {
    Metric metric = Metric::Cssg;
    double score = 0.0;
    // CSSG only.
    long long ged = 0;
    long long d_max = 0;
    Solver solver = Solver::Exact;
    bool degenerate = false; // both graphs were root-only
};

struct CssgOptions {
    /// Pairs with at most this many combined nodes use the exact solver.
    std::size_t exact_budget = kDefaultExactBudget;
    /// Branch-and-bound expansions before the exact solver settles (0 = unlimited).
    std::size_t expansion_limit = kDefaultExpansionLimit;
};

/// |N| + |E| of both graphs: the cost of deleting one and inserting the other.
long long max_edit_distance(const SemanticGraph& g1, const SemanticGraph& g2);

SimilarityResult cssg_graphs(const SemanticGraph& g1, const SemanticGraph& g2, const CssgOptions& options = {});

/// Throws ParseFailure / UnsupportedLanguage from the frontend.
SimilarityResult cssg(const SourceUnit& a, const SourceUnit& b, const CssgOptions& options = {});

/// BLEU-4 of `candidate` against `reference`. Throws EmptyInput for an empty reference.
double bleu(const TokenStream& reference, const TokenStream& candidate);

/// Jaccard index over distinct token texts; 1 when both are empty.
double jaccard(const TokenStream& a, const TokenStream& b);

/// Ordered tree with interned labels, stored in post-order.
struct LabeledTree {
    std::vector<std::string> labels;
    std::vector<int> leftmost; // leftmost leaf descendant of each node (post-order index)

    std::size_t size() const { return labels.size(); }
};

struct TsedOptions {
    /// Keep identifier spellings instead of anonymizing them.
    bool name_sensitive = false;
};

LabeledTree tsed_tree(const AstNode& ast, const TsedOptions& options = {});

/// Zhang-Shasha ordered tree edit distance with unit costs.
std::size_t tree_edit_distance(const LabeledTree& a, const LabeledTree& b);

/// max(0, 1 - distance / max(|T1|, |T2|)).
double tsed(const SourceUnit& a, const SourceUnit& b, const TsedOptions& options = {});

struct MetricOptions {
    CssgOptions cssg;
    TsedOptions tsed;
};

/**
 * Scores one pair under `metric`. `reference` plays the reference role for
 * BLEU. Frontend errors propagate.
 */
SimilarityResult score_pair(Metric metric, const SourceUnit& reference, const SourceUnit& candidate,
                            const MetricOptions& options = {});

} // namespace cssg
