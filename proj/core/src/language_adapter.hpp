#pragma once

// Internal interface between the generic pipeline and the per-language
// grammar adapters. Not installed.

#include <string>
#include <string_view>
#include <vector>

#include <tree_sitter/api.h>

#include "cssg/frontend.hpp"
#include "cssg/pdg.hpp"

namespace cssg::detail {

// ---------------------------------------------------------------------------
// Function extraction

class ExtractSink {
public:
    /// Registers a function and returns its index.
    int add_function(std::string name, std::vector<std::string> params, AstNode body);
    void add_toplevel(const AstNode& statement);
    /// Statement that stands in for the nested function `index`.
    AstNode placeholder(int index, Span span) const;

    struct Entry {
        std::string name;
        std::vector<std::string> params;
        AstNode body;
    };
    std::vector<Entry> functions;
    std::vector<AstNode> toplevel;
};

// ---------------------------------------------------------------------------
// Lowered statements, the language-independent input of the CFG builder.

struct CallInfo {
    std::string callee;
    int argc = 0;
    bool exact = false;
    std::vector<std::string> uses;
    Span span;
    int parent = -1; // enclosing call, -1 when the result flows into the statement
};

struct Effects {
    NodeLabel label;
    std::vector<std::string> defs;
    std::vector<std::string> uses;
    std::vector<CallInfo> calls; // pre-order: an enclosing call precedes its arguments' calls
    int self_call = -1;          // the call that is the whole statement, if any
};

enum class StmtKind { Simple, Return, Throw, Break, Continue, If, While, DoWhile, ForEach, For, Switch, Try };

struct Stmt {
    StmtKind kind = StmtKind::Simple;
    const AstNode* node = nullptr;
    Span span;
    Effects effects; // the statement itself, or the predicate of a compound statement
    std::string jump_label; // Break/Continue target, or the label attached to a loop/switch
    std::vector<Stmt> body;
    std::vector<Stmt> orelse;
    std::vector<Stmt> init;
    std::vector<Stmt> update;
    std::vector<std::vector<Stmt>> branches; // switch cases, exception handlers
    std::vector<Stmt> finally_body;
    bool fallthrough = false;
    bool has_default = false;
};

struct LoweredFunction {
    std::vector<Stmt> params; // one Simple PARAM statement per parameter
    std::vector<Stmt> body;
};

// ---------------------------------------------------------------------------

class LanguageAdapter {
public:
    virtual ~LanguageAdapter() = default;

    virtual Language language() const = 0;
    virtual const TSLanguage* grammar() const = 0;
    virtual bool is_comment(std::string_view kind) const = 0;
    /// String productions are kept as one leaf (one token), except for interpolations.
    virtual bool is_string(std::string_view kind) const = 0;
    virtual bool is_literal(std::string_view kind) const = 0;
    /// Nodes whose unlabelled operator child should be recorded in AstNode::op.
    virtual bool has_unlabelled_operator(std::string_view kind) const = 0;

    virtual void extract(const AstNode& root, ExtractSink& sink) const = 0;
    virtual LoweredFunction lower(const FunctionDecl& function) const = 0;
};

/// Throws UnsupportedLanguage.
const LanguageAdapter& adapter_for(Language lang);

const LanguageAdapter& python_adapter();
const LanguageAdapter& java_adapter();

// Shared helpers for adapters.
std::string literal_class(std::string_view kind, std::string_view text);
void append_unique(std::vector<std::string>& into, const std::string& value);

NodeLabel operation(std::string detail);
NodeLabel constant(std::string detail);
NodeLabel variable();

/// Accumulates defs, uses and call sites of one statement or predicate.
class EffectsBuilder {
public:
    explicit EffectsBuilder(Effects& effects) : eff_(effects) {}

    void use(const std::string& name, int call);
    void def(const std::string& name);
    int call(std::string callee, int argc, bool exact, Span span, int parent);

    void bind(const std::string& name) { bound_.push_back(name); }
    std::size_t bound_size() const { return bound_.size(); }
    void unbind_to(std::size_t size) { bound_.resize(size); }
    bool is_bound(const std::string& name) const;

    Effects& effects() { return eff_; }

private:
    Effects& eff_;
    std::vector<std::string> bound_;
};

} // namespace cssg::detail
