#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cssg {

enum class Language : uint8_t { Python, Java, Cpp };

std::string_view to_string(Language lang);

/// Accepts "python"/"py", "java", "cpp"/"c++" (case-insensitive).
std::optional<Language> language_from_string(std::string_view name);
std::optional<Language> language_from_extension(const std::filesystem::path& path);

/// True when a frontend for `lang` is compiled into this build.
bool frontend_available(Language lang);

struct SourceUnit {
    Language language = Language::Python;
    std::string text;
    std::string id;
};

/// Half-open byte range into the source text.
struct Span {
    uint32_t start = 0;
    uint32_t end = 0;

    bool contains(const Span& other) const { return start <= other.start && other.end <= end; }
    friend bool operator==(const Span&, const Span&) = default;
};

/**
 * Node of the normalized syntax tree.
 *
 * Only named grammar productions become nodes; punctuation and keywords are
 * dropped, comments are removed. Operator tokens that distinguish otherwise
 * identical productions (`a + b` vs `a - b`) are kept in `op`. Nodes the
 * grammar could not make sense of keep the kind "ERROR".
 */
struct AstNode {
    std::string kind;
    std::string field; // field name in the parent production, may be empty
    std::string op;
    std::string text;  // leaves only
    Span span;
    std::vector<AstNode> children;

    bool is_leaf() const { return children.empty(); }
    bool is_error() const { return kind == "ERROR"; }

    /// First child occupying `field_name`, or nullptr.
    const AstNode* child(std::string_view field_name) const;
    std::vector<const AstNode*> children_in(std::string_view field_name) const;

    /// Total number of nodes in this subtree.
    std::size_t size() const;
};

inline constexpr std::string_view kMainWrapperName = "__main__";
/// Kind of the synthetic statement left where a nested function was defined.
inline constexpr std::string_view kNestedFunctionKind = "nested_function";

struct FunctionDecl {
    std::string name;
    std::vector<std::string> params;
    AstNode body;
    bool is_toplevel_wrapper = false;
    Language language = Language::Python;
};

enum class TokenKind : uint8_t { Identifier, Keyword, Operator, Literal, Punctuation };

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;
    Span span;

    friend bool operator==(const Token&, const Token&) = default;
};

struct TokenStream {
    std::vector<Token> tokens;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

/// Throws UnsupportedLanguage or ParseFailure.
AstNode parse(const SourceUnit& unit);

/**
 * Splits a parsed file into functions. Loose top-level statements go to a
 * synthetic "__main__" wrapper (created also when the file defines nothing).
 * Nested functions become separate declarations and leave a
 * `nested_function` placeholder carrying the callee name in `text`.
 * Duplicate names are disambiguated as "name/arity".
 */
std::vector<FunctionDecl> extract_functions(const AstNode& ast, Language language);

TokenStream tokenize(const SourceUnit& unit);

} // namespace cssg
