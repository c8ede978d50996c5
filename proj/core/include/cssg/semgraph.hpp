#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cssg/frontend.hpp"
#include "cssg/pdg.hpp"

namespace cssg {

struct SemanticNode {
    int id = 0;
    NodeLabel label;
    std::string function; // owning function, empty for the root
    Span span;
    std::string callee; // call sites only
    int call_args = 0;
    bool callee_exact = false;
};

/**
 * Snippet-level graph: every function graph joined under one root node,
 * with root edges to each entry and call edges from call sites to the entry
 * of the function they invoke.
 *
 * Nodes are stored in canonical order (root first, then by function name,
 * span start and local id) and `nodes[i].id == i`. Edges are sorted and
 * unique.
 */
struct SemanticGraph {
    std::vector<SemanticNode> nodes;
    std::vector<PdgEdge> edges;
    int root = 0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    /// Ids of function entry nodes in node order.
    std::vector<int> entries() const;
};

struct CallEdge {
    int src = 0;
    int dst = 0;
    std::string callee_name;
};

std::vector<CallEdge> call_edges(const SemanticGraph& g);

/// Deterministic regardless of the order of `graphs`.
SemanticGraph integrate(std::vector<FunctionGraph> graphs);

/// parse -> extract_functions -> build_function_graph -> integrate.
SemanticGraph build_semantic_graph(const SourceUnit& unit);

enum class GraphFormat { Json, Dot };

std::string serialize(const SemanticGraph& g, GraphFormat format);

/// Throws GraphFormatError on malformed input or a violated invariant.
SemanticGraph deserialize_json(std::string_view text);

/// Invariant violations of `g`, empty when valid.
std::vector<std::string> validate(const SemanticGraph& g);

/// True when some directed cycle exists. With `ignore_self_loops`, edges
/// from a node to itself are disregarded.
bool has_cycle(const SemanticGraph& g, bool ignore_self_loops = false);

/// True when some call edge lies on a directed cycle.
bool has_call_cycle(const SemanticGraph& g);

} // namespace cssg
