#include "cssg/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

#include "cssg/errors.hpp"
#include "language_adapter.hpp"

namespace cssg {

namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t extra = 0;
        if (c < 0x80) {
            extra = 0;
        } else if (c >= 0xC2 && c <= 0xDF) {
            extra = 1;
        } else if ((c >> 4) == 0xE) {
            extra = 2;
        } else if (c >= 0xF0 && c <= 0xF4) {
            extra = 3;
        } else {
            return false;
        }
        if (i + extra >= s.size() && extra > 0) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
        }
        i += extra + 1;
    }
    return true;
}

struct TreeDeleter {
    void operator()(TSTree* t) const { ts_tree_delete(t); }
};
struct ParserDeleter {
    void operator()(TSParser* p) const { ts_parser_delete(p); }
};
using TreePtr = std::unique_ptr<TSTree, TreeDeleter>;

TreePtr parse_tree(const detail::LanguageAdapter& adapter, const std::string& text) {
    std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
    if (!ts_parser_set_language(parser.get(), adapter.grammar())) {
        throw ParseFailure("incompatible grammar for " + std::string(to_string(adapter.language())));
    }
    TreePtr tree(ts_parser_parse_string(parser.get(), nullptr, text.data(), static_cast<uint32_t>(text.size())));
    if (!tree) throw ParseFailure("parser produced no tree");
    return tree;
}

void check_source(const SourceUnit& unit) {
    if (!valid_utf8(unit.text)) throw ParseFailure("source '" + unit.id + "' is not valid UTF-8");
}

std::string slice(const std::string& text, TSNode n) {
    const uint32_t s = ts_node_start_byte(n);
    const uint32_t e = ts_node_end_byte(n);
    return text.substr(s, e - s);
}

bool is_operator_field(const char* field) {
    return field != nullptr && (std::string_view(field) == "operator" || std::string_view(field) == "operators");
}

bool is_punct_text(std::string_view t) {
    static const char* const kPunct[] = {"(", ")", "[", "]", "{", "}", ",", ";", ":", ".", "...", "@", "::"};
    return std::any_of(std::begin(kPunct), std::end(kPunct), [&](const char* p) { return t == p; });
}

bool is_word_text(std::string_view t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; }) &&
           !std::isdigit(static_cast<unsigned char>(t.front()));
}

AstNode convert(const detail::LanguageAdapter& adapter, const std::string& text, TSNode n, const char* field) {
    AstNode node;
    node.kind = ts_node_is_error(n) ? "ERROR" : ts_node_type(n);
    if (field != nullptr) node.field = field;
    node.span = {ts_node_start_byte(n), ts_node_end_byte(n)};

    const uint32_t count = ts_node_child_count(n);
    const bool string_node = adapter.is_string(node.kind);
    bool prev_was_op = false;
    for (uint32_t i = 0; i < count; ++i) {
        TSNode c = ts_node_child(n, i);
        const char* child_field = ts_node_field_name_for_child(n, i);
        if (!ts_node_is_named(c)) {
            const std::string tok = slice(text, c);
            const bool op_like = is_operator_field(child_field) ||
                                 (adapter.has_unlabelled_operator(node.kind) && !is_punct_text(tok) && !tok.empty());
            if (op_like && !tok.empty()) {
                if (prev_was_op) {
                    node.op += ' ';
                } else if (!node.op.empty()) {
                    node.op += ',';
                }
                node.op += tok;
                prev_was_op = true;
            } else {
                prev_was_op = false;
            }
            continue;
        }
        prev_was_op = false;
        const std::string_view ckind = ts_node_type(c);
        if (adapter.is_comment(ckind)) continue;
        if (string_node && ckind != "interpolation") continue;
        node.children.push_back(convert(adapter, text, c, child_field));
    }
    if (node.children.empty()) node.text = slice(text, n);
    return node;
}

void disambiguate(std::vector<FunctionDecl>& decls) {
    std::map<std::string, int> counts;
    for (const auto& d : decls) counts[d.name]++;
    std::map<std::string, int> seen;
    for (auto& d : decls) {
        if (counts[d.name] > 1) {
            d.name += "/" + std::to_string(d.params.size());
        }
    }
    counts.clear();
    for (const auto& d : decls) counts[d.name]++;
    for (auto& d : decls) {
        if (counts[d.name] > 1) {
            const int k = ++seen[d.name];
            if (k > 1) d.name += "#" + std::to_string(k);
        }
    }
}

void rewrite_placeholders(AstNode& node, const std::vector<FunctionDecl>& decls) {
    if (node.kind == kNestedFunctionKind) {
        const int index = std::stoi(node.op);
        node.text = decls.at(static_cast<std::size_t>(index)).name;
        node.op.clear();
        return;
    }
    for (auto& c : node.children) rewrite_placeholders(c, decls);
}

} // namespace

std::string_view to_string(Language lang) {
    switch (lang) {
    case Language::Python: return "Python";
    case Language::Java: return "Java";
    case Language::Cpp: return "Cpp";
    }
    return "?";
}

std::optional<Language> language_from_string(std::string_view name) {
    const std::string n = lower_ascii(name);
    if (n == "python" || n == "py") return Language::Python;
    if (n == "java") return Language::Java;
    if (n == "cpp" || n == "c++" || n == "cxx") return Language::Cpp;
    return std::nullopt;
}

std::optional<Language> language_from_extension(const std::filesystem::path& path) {
    const std::string ext = lower_ascii(path.extension().string());
    if (ext == ".py") return Language::Python;
    if (ext == ".java") return Language::Java;
    if (ext == ".cpp" || ext == ".cc" || ext == ".cxx" || ext == ".hpp" || ext == ".h" || ext == ".hh") {
        return Language::Cpp;
    }
    return std::nullopt;
}

bool frontend_available(Language lang) { return lang == Language::Python || lang == Language::Java; }

std::string_view to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Operator: return "operator";
    case TokenKind::Literal: return "literal";
    case TokenKind::Punctuation: return "punctuation";
    }
    return "?";
}

const AstNode* AstNode::child(std::string_view field_name) const {
    for (const auto& c : children) {
        if (c.field == field_name) return &c;
    }
    return nullptr;
}

std::vector<const AstNode*> AstNode::children_in(std::string_view field_name) const {
    std::vector<const AstNode*> out;
    for (const auto& c : children) {
        if (c.field == field_name) out.push_back(&c);
    }
    return out;
}

std::size_t AstNode::size() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

AstNode parse(const SourceUnit& unit) {
    const auto& adapter = detail::adapter_for(unit.language);
    check_source(unit);
    const TreePtr tree = parse_tree(adapter, unit.text);
    const TSNode root = ts_tree_root_node(tree.get());
    if (ts_node_is_null(root) || ts_node_is_error(root)) {
        throw ParseFailure("no parse tree could be recovered for '" + unit.id + "'");
    }
    return convert(adapter, unit.text, root, nullptr);
}

TokenStream tokenize(const SourceUnit& unit) {
    const auto& adapter = detail::adapter_for(unit.language);
    check_source(unit);
    const TreePtr tree = parse_tree(adapter, unit.text);
    const TSNode root = ts_tree_root_node(tree.get());
    if (ts_node_is_null(root) || ts_node_is_error(root)) {
        throw ParseFailure("no parse tree could be recovered for '" + unit.id + "'");
    }

    TokenStream stream;
    // Iterative pre-order walk; strings and childless nodes are tokens.
    std::vector<TSNode> stack{root};
    while (!stack.empty()) {
        TSNode n = stack.back();
        stack.pop_back();
        const std::string_view kind = ts_node_type(n);
        const uint32_t start = ts_node_start_byte(n);
        const uint32_t end = ts_node_end_byte(n);
        if (ts_node_is_named(n) && adapter.is_comment(kind)) continue;
        const bool atomic = ts_node_is_named(n) && adapter.is_string(kind);
        if (atomic || ts_node_child_count(n) == 0) {
            if (end == start) continue;
            Token tok{TokenKind::Operator, unit.text.substr(start, end - start), {start, end}};
            if (atomic || (ts_node_is_named(n) && adapter.is_literal(kind))) {
                tok.kind = TokenKind::Literal;
            } else if (ts_node_is_named(n)) {
                tok.kind = is_word_text(tok.text) ? TokenKind::Identifier : TokenKind::Operator;
            } else if (is_punct_text(tok.text)) {
                tok.kind = TokenKind::Punctuation;
            } else if (is_word_text(tok.text)) {
                tok.kind = TokenKind::Keyword;
            }
            // Named leaf keywords such as `this` are reported by the grammar as named nodes.
            if (tok.kind == TokenKind::Identifier && ts_node_is_named(n) && kind.find("identifier") == std::string_view::npos &&
                kind != "ERROR") {
                tok.kind = TokenKind::Keyword;
            }
            // Leaves nested in a literal production, e.g. Python's `True`.
            if (tok.kind != TokenKind::Literal) {
                TSNode parent = ts_node_parent(n);
                if (!ts_node_is_null(parent) && adapter.is_literal(ts_node_type(parent)) &&
                    ts_node_child_count(parent) == 1) {
                    tok.kind = TokenKind::Literal;
                }
            }
            stream.tokens.push_back(std::move(tok));
            continue;
        }
        const uint32_t count = ts_node_child_count(n);
        for (uint32_t i = count; i-- > 0;) stack.push_back(ts_node_child(n, i));
    }
    return stream;
}

namespace detail {

int ExtractSink::add_function(std::string name, std::vector<std::string> params, AstNode body) {
    functions.push_back({std::move(name), std::move(params), std::move(body)});
    return static_cast<int>(functions.size()) - 1;
}

void ExtractSink::add_toplevel(const AstNode& statement) { toplevel.push_back(statement); }

AstNode ExtractSink::placeholder(int index, Span span) const {
    AstNode n;
    n.kind = std::string(kNestedFunctionKind);
    n.op = std::to_string(index); // resolved to the final name once all functions are known
    n.span = span;
    return n;
}

void append_unique(std::vector<std::string>& into, const std::string& value) {
    if (value.empty()) return;
    if (std::find(into.begin(), into.end(), value) == into.end()) into.push_back(value);
}

std::string literal_class(std::string_view kind, std::string_view text) {
    auto has = [&](std::string_view needle) { return kind.find(needle) != std::string_view::npos; };
    if (has("float") || has("floating")) return "FLOAT_LIT";
    if (has("integer")) return "INT_LIT";
    if (has("string") || has("character") || has("text_block")) return "STR_LIT";
    if (kind == "true" || kind == "false") return "BOOL_LIT";
    if (kind == "none" || has("null")) return "NULL_LIT";
    if (!text.empty() && (text.front() == '"' || text.front() == '\'')) return "STR_LIT";
    return "INT_LIT";
}

NodeLabel operation(std::string detail) { return {LabelCategory::Operation, std::move(detail)}; }
NodeLabel constant(std::string detail) { return {LabelCategory::ConstantClass, std::move(detail)}; }
NodeLabel variable() { return {LabelCategory::IdentifierClass, "VAR"}; }

void EffectsBuilder::use(const std::string& name, int call) {
    if (name.empty() || is_bound(name)) return;
    if (call < 0) {
        append_unique(eff_.uses, name);
    } else {
        append_unique(eff_.calls[static_cast<std::size_t>(call)].uses, name);
    }
}

void EffectsBuilder::def(const std::string& name) {
    if (name.empty() || is_bound(name)) return;
    append_unique(eff_.defs, name);
}

int EffectsBuilder::call(std::string callee, int argc, bool exact, Span span, int parent) {
    CallInfo info;
    info.callee = std::move(callee);
    info.argc = argc;
    info.exact = exact;
    info.span = span;
    info.parent = parent;
    eff_.calls.push_back(std::move(info));
    return static_cast<int>(eff_.calls.size()) - 1;
}

bool EffectsBuilder::is_bound(const std::string& name) const {
    return std::find(bound_.begin(), bound_.end(), name) != bound_.end();
}

const LanguageAdapter& adapter_for(Language lang) {
    switch (lang) {
    case Language::Python: return python_adapter();
    case Language::Java: return java_adapter();
    case Language::Cpp: break;
    }
    throw UnsupportedLanguage("no frontend for " + std::string(to_string(lang)) + " in this build");
}

} // namespace detail

std::vector<FunctionDecl> extract_functions(const AstNode& ast, Language language) {
    const auto& adapter = detail::adapter_for(language);
    detail::ExtractSink sink;
    adapter.extract(ast, sink);

    std::vector<FunctionDecl> decls;
    decls.reserve(sink.functions.size() + 1);
    for (auto& f : sink.functions) {
        decls.push_back({std::move(f.name), std::move(f.params), std::move(f.body), false, language});
    }
    std::stable_sort(sink.toplevel.begin(), sink.toplevel.end(),
                     [](const AstNode& a, const AstNode& b) { return a.span.start < b.span.start; });
    if (!sink.toplevel.empty() || decls.empty()) {
        FunctionDecl main;
        main.name = std::string(kMainWrapperName);
        main.is_toplevel_wrapper = true;
        main.language = language;
        main.body.kind = "block";
        if (!sink.toplevel.empty()) {
            main.body.span = {sink.toplevel.front().span.start, sink.toplevel.back().span.end};
        } else {
            main.body.span = {ast.span.start, ast.span.start};
        }
        main.body.children = std::move(sink.toplevel);
        decls.push_back(std::move(main));
    }
    disambiguate(decls);
    for (auto& d : decls) rewrite_placeholders(d.body, decls);
    return decls;
}

} // namespace cssg
