#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cssg/frontend.hpp"

namespace cssg {

enum class LabelCategory : uint8_t { Operation, IdentifierClass, ConstantClass, FunctionName, Root };

std::string_view to_string(LabelCategory category);
std::optional<LabelCategory> label_category_from_string(std::string_view name);

/**
 * Semantic category of a graph node.
 *
 * Vocabulary:
 *  - Operation: operator symbol or statement keyword ("+", "<", "assign",
 *    "call", "return", "for", ...). Spellings are unified across languages.
 *  - IdentifierClass: "VAR" or "PARAM".
 *  - ConstantClass: INT_LIT, FLOAT_LIT, STR_LIT, BOOL_LIT, NULL_LIT.
 *  - FunctionName: the verbatim (disambiguated) function name.
 *  - Root: "ROOT".
 */
struct NodeLabel {
    LabelCategory category = LabelCategory::Operation;
    std::string detail;

    friend auto operator<=>(const NodeLabel&, const NodeLabel&) = default;
    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

std::string to_string(const NodeLabel& label);

/// Maps raw labels into the closed vocabulary. Idempotent.
NodeLabel normalize_label(const NodeLabel& label);

enum class CfgNodeKind : uint8_t { Entry, Exit, Statement, Predicate, CallSite };

std::string_view to_string(CfgNodeKind kind);

struct CfgNode {
    int id = 0;
    CfgNodeKind kind = CfgNodeKind::Statement;
    const AstNode* statement = nullptr; // borrowed from the FunctionDecl; null for synthetic nodes
    Span span;
    NodeLabel label;
    std::vector<std::string> defs;
    std::vector<std::string> uses;
    // Call sites only.
    std::string callee;
    int call_args = 0;
    bool callee_exact = false;
};

struct CfgEdge {
    int src = 0;
    int dst = 0;
    std::string branch; // "true", "false", "case", "default", "body", "handler"; empty when unconditional
    bool synthetic = false;

    friend bool operator==(const CfgEdge&, const CfgEdge&) = default;
};

/// Statement-level control flow graph of one function.
struct Cfg {
    std::string function_name;
    std::vector<CfgNode> nodes;
    std::vector<CfgEdge> edges;
    int entry = 0;
    int exit = 0;

    std::vector<int> successors(int id) const;
    std::vector<int> predecessors(int id) const;
    std::size_t size() const { return nodes.size(); }
};

Cfg build_cfg(const FunctionDecl& function);

/// (controlling node, dependent node) pairs, Ferrante-Ottenstein-Warren style.
std::set<std::pair<int, int>> control_dependencies(const Cfg& cfg);

struct DataDependence {
    int src = 0;
    int dst = 0;
    std::string var;

    friend auto operator<=>(const DataDependence&, const DataDependence&) = default;
};

/// Reaching-definitions def-use pairs. Loop-carried self dependences are included.
std::set<DataDependence> data_dependencies(const Cfg& cfg);

enum class EdgeKind : uint8_t { Data, Control, Call, Root };

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(std::string_view name);

struct PdgNode {
    int id = 0;
    NodeLabel label;
    Span span;
    std::string callee; // non-empty only for call sites
    int call_args = 0;
    bool callee_exact = false;

    bool is_call_site() const { return !callee.empty(); }
};

struct PdgEdge {
    int src = 0;
    int dst = 0;
    EdgeKind kind = EdgeKind::Data;

    friend auto operator<=>(const PdgEdge&, const PdgEdge&) = default;
};

struct FunctionGraph {
    std::string function_name;
    int arity = 0;
    std::vector<PdgNode> nodes;
    std::vector<PdgEdge> edges; // sorted, unique
    int entry = 0;
};

FunctionGraph build_function_graph(const FunctionDecl& function);

} // namespace cssg
