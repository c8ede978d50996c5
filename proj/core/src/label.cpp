#include <array>
#include <utility>

#include "cssg/pdg.hpp"

namespace cssg {

namespace {

constexpr std::array<std::string_view, 5> kCategoryNames = {"operation", "identifier_class", "constant_class",
                                                            "function_name", "root"};

constexpr std::array<std::string_view, 4> kEdgeKindNames = {"data", "control", "call", "root"};

// Spellings that differ between languages but mean the same operation.
constexpr std::pair<std::string_view, std::string_view> kOperatorAliases[] = {
    {"&&", "and"}, {"||", "or"},   {"!", "not"},    {"is", "=="}, {"is not", "!="},
    {"++", "+="},  {"--", "-="},   {"//", "/"},     {"<>", "!="}, {"//=", "/="},
    {">>>", ">>"}, {">>>=", ">>="},
};

std::string normalize_operator(const std::string& detail) {
    for (const auto& [from, to] : kOperatorAliases) {
        if (detail == from) return std::string(to);
    }
    // Chained comparisons ("<,<") keep only the principal operator.
    if (const auto comma = detail.find(','); comma != std::string::npos) {
        return normalize_operator(detail.substr(0, comma));
    }
    return detail;
}

std::string normalize_constant(const std::string& detail) {
    if (detail == "CHAR_LIT") return "STR_LIT";
    if (detail == "INT_LIT" || detail == "FLOAT_LIT" || detail == "STR_LIT" || detail == "BOOL_LIT" ||
        detail == "NULL_LIT") {
        return detail;
    }
    return "STR_LIT";
}

} // namespace

std::string_view to_string(LabelCategory category) { return kCategoryNames[static_cast<std::size_t>(category)]; }

std::optional<LabelCategory> label_category_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
        if (kCategoryNames[i] == name) return static_cast<LabelCategory>(i);
    }
    return std::nullopt;
}

std::string to_string(const NodeLabel& label) { return std::string(to_string(label.category)) + ":" + label.detail; }

NodeLabel normalize_label(const NodeLabel& label) {
    switch (label.category) {
    case LabelCategory::Operation: return {label.category, normalize_operator(label.detail)};
    case LabelCategory::IdentifierClass: return {label.category, label.detail == "PARAM" ? "PARAM" : "VAR"};
    case LabelCategory::ConstantClass: return {label.category, normalize_constant(label.detail)};
    case LabelCategory::FunctionName: return label;
    case LabelCategory::Root: return {label.category, "ROOT"};
    }
    return label;
}

std::string_view to_string(CfgNodeKind kind) {
    switch (kind) {
    case CfgNodeKind::Entry: return "entry";
    case CfgNodeKind::Exit: return "exit";
    case CfgNodeKind::Statement: return "statement";
    case CfgNodeKind::Predicate: return "predicate";
    case CfgNodeKind::CallSite: return "call_site";
    }
    return "statement";
}

std::string_view to_string(EdgeKind kind) { return kEdgeKindNames[static_cast<std::size_t>(kind)]; }

std::optional<EdgeKind> edge_kind_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kEdgeKindNames.size(); ++i) {
        if (kEdgeKindNames[i] == name) return static_cast<EdgeKind>(i);
    }
    return std::nullopt;
}

} // namespace cssg
