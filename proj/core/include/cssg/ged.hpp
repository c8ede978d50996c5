#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cssg/semgraph.hpp"

namespace cssg {

inline constexpr std::size_t kDefaultExactBudget = 80;
/// Search nodes ged_exact may expand before settling for its best mapping so far.
inline constexpr std::size_t kDefaultExpansionLimit = 200000;

enum class EditKind : uint8_t { NodeInsert, NodeDelete, NodeSubstitute, EdgeInsert, EdgeDelete, EdgeSubstitute };

std::string_view to_string(EditKind kind);

/**
 * One edit operation. Node operations refer to `g1_node` (delete,
 * substitute) and `g2_node` (insert, substitute); edge operations likewise
 * to `g1_edge` / `g2_edge`. Inserted nodes carry the label and owning
 * function of the node they create.
 */
struct EditOp {
    EditKind kind = EditKind::NodeInsert;
    int g1_node = -1;
    int g2_node = -1;
    PdgEdge g1_edge;
    PdgEdge g2_edge;
    NodeLabel label;
    std::string function;
    int cost = 0;
};

enum class Solver : uint8_t { Exact, Approx, Oracle };

std::string_view to_string(Solver solver);

struct EditScript {
    std::vector<EditOp> operations;
    long long total_cost = 0;
    std::vector<int> mapping; // g1 node -> g2 node, -1 when deleted
    Solver solver = Solver::Exact;
};

/// Matching rule for node pairs: identical labels (roots, equal function names, equal normalized labels).
bool compatible(const SemanticNode& a, const SemanticNode& b);

/// Edit cost induced by a root-fixed compatible partial injection `mapping` (g1 -> g2, -1 = unmapped).
long long mapping_cost(const SemanticGraph& g1, const SemanticGraph& g2, const std::vector<int>& mapping);

/// Full edit script for `mapping`. Throws std::invalid_argument on an invalid mapping.
EditScript script_from_mapping(const SemanticGraph& g1, const SemanticGraph& g2, std::vector<int> mapping,
                               Solver solver);

/**
 * Replays `script` on `g1`. The result uses the node numbering of the
 * target graph, so a valid script reproduces it exactly. Throws
 * std::invalid_argument when the script does not account for every node
 * and edge of `g1` or leaves gaps in the target numbering.
 */
SemanticGraph apply_edit_script(const SemanticGraph& g1, const EditScript& script);

/**
 * Optimal edit script by branch and bound. Throws BudgetExceeded when
 * |N1| + |N2| > budget. A search that reaches `expansion_limit` (0 = no
 * limit) returns its best mapping with `solver == Solver::Approx`.
 */
EditScript ged_exact(const SemanticGraph& g1, const SemanticGraph& g2, std::size_t budget = kDefaultExactBudget,
                     std::size_t expansion_limit = kDefaultExpansionLimit);

/// Assignment-based upper bound with local refinement, symmetric in its arguments.
EditScript ged_approx(const SemanticGraph& g1, const SemanticGraph& g2);

inline constexpr std::size_t kOracleMaxNodes = 8;

/// Exhaustive minimum over all mappings. Throws OracleTooLarge beyond kOracleMaxNodes nodes per graph.
long long ged_oracle(const SemanticGraph& g1, const SemanticGraph& g2);

} // namespace cssg
