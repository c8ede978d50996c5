// Python adapter over the tree-sitter-python grammar.

#include <algorithm>
#include <set>
#include <string>

#include "language_adapter.hpp"

extern "C" const TSLanguage* tree_sitter_python();

namespace cssg::detail {

namespace {

bool one_of(std::string_view kind, std::initializer_list<std::string_view> kinds) {
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

const AstNode* first_of_kind(const AstNode& n, std::string_view kind) {
    for (const auto& c : n.children) {
        if (c.kind == kind) return &c;
    }
    return nullptr;
}

bool is_comprehension(std::string_view kind) {
    return one_of(kind, {"list_comprehension", "set_comprehension", "dictionary_comprehension", "generator_expression"});
}

std::vector<std::string> parameter_names(const AstNode* params) {
    std::vector<std::string> out;
    if (params == nullptr) return out;
    for (const auto& p : params->children) {
        if (p.kind == "identifier") {
            out.push_back(p.text);
        } else if (const AstNode* name = p.child("name"); name != nullptr && name->kind == "identifier") {
            out.push_back(name->text);
        } else if (one_of(p.kind, {"typed_parameter", "list_splat_pattern", "dictionary_splat_pattern"})) {
            if (const AstNode* id = first_of_kind(p, "identifier")) out.push_back(id->text);
        } else if (p.kind == "tuple_pattern") {
            for (const auto& c : p.children) {
                if (c.kind == "identifier") out.push_back(c.text);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expressions

NodeLabel expression_label(const AstNode& e) {
    const std::string& k = e.kind;
    if (k == "parenthesized_expression" && !e.children.empty()) return expression_label(e.children.front());
    if (one_of(k, {"comparison_operator", "boolean_operator", "binary_operator", "unary_operator"})) return operation(e.op);
    if (k == "not_operator") return operation("not");
    if (k == "call") return operation("call");
    if (k == "attribute") return operation(".");
    if (k == "subscript") return operation("[]");
    if (k == "identifier") return variable();
    if (one_of(k, {"integer", "float", "string", "concatenated_string", "true", "false", "none"})) {
        return constant(literal_class(k, e.text));
    }
    if (k == "conditional_expression") return operation("?:");
    if (k == "lambda") return operation("lambda");
    if (k == "list") return operation("list");
    if (k == "tuple" || k == "expression_list") return operation("tuple");
    if (k == "dictionary") return operation("dict");
    if (k == "set") return operation("set");
    if (is_comprehension(k)) return operation("comprehension");
    if (k == "await") return operation("await");
    if (k == "named_expression") return operation("assign");
    if (k == "ERROR") return operation("error");
    return operation(k);
}

class PyAnalyzer {
public:
    explicit PyAnalyzer(Effects& eff) : b_(eff) {}

    void expr(const AstNode& e, int call) {
        const std::string& k = e.kind;
        if (k == "identifier") {
            b_.use(e.text, call);
            return;
        }
        if (k == "call") {
            call_expr(e, call);
            return;
        }
        if (k == "attribute") {
            if (const AstNode* obj = e.child("object")) expr(*obj, call);
            return;
        }
        if (k == "keyword_argument") {
            if (const AstNode* v = e.child("value")) expr(*v, call);
            return;
        }
        if (k == "lambda") {
            const std::size_t mark = b_.bound_size();
            for (const auto& name : parameter_names(e.child("parameters"))) b_.bind(name);
            if (const AstNode* body = e.child("body")) expr(*body, call);
            b_.unbind_to(mark);
            return;
        }
        if (is_comprehension(k)) {
            const std::size_t mark = b_.bound_size();
            for (const auto& c : e.children) {
                if (c.kind == "for_in_clause") {
                    if (const AstNode* left = c.child("left")) bind_targets(*left);
                }
            }
            for (const auto& c : e.children) {
                if (c.kind == "for_in_clause") {
                    for (const auto* r : c.children_in("right")) expr(*r, call);
                } else {
                    expr(c, call);
                }
            }
            b_.unbind_to(mark);
            return;
        }
        if (k == "named_expression") {
            if (const AstNode* name = e.child("name")) b_.def(name->text);
            if (const AstNode* v = e.child("value")) expr(*v, call);
            return;
        }
        if (k == "type") return;
        for (const auto& c : e.children) expr(c, call);
    }

    // Assignment target: defines plain names, element/attribute writes define the container.
    void target(const AstNode& t, bool also_use) {
        const std::string& k = t.kind;
        if (k == "identifier") {
            b_.def(t.text);
            if (also_use) b_.use(t.text, -1);
            return;
        }
        if (one_of(k, {"pattern_list", "tuple_pattern", "list_pattern", "tuple", "list", "parenthesized_expression",
                       "list_splat_pattern", "list_splat", "expression_list"})) {
            for (const auto& c : t.children) target(c, also_use);
            return;
        }
        if (k == "subscript" || k == "attribute") {
            const AstNode* base = &t;
            while (base->kind == "subscript" || base->kind == "attribute") {
                const AstNode* inner = base->kind == "subscript" ? base->child("value") : base->child("object");
                if (inner == nullptr) break;
                if (base->kind == "subscript") {
                    for (const auto* idx : base->children_in("subscript")) expr(*idx, -1);
                }
                base = inner;
            }
            if (base->kind == "identifier") {
                b_.def(base->text);
                b_.use(base->text, -1);
            } else {
                expr(*base, -1);
            }
            return;
        }
        expr(t, -1);
    }

    int call_expr(const AstNode& e, int parent) {
        const AstNode* fn = e.child("function");
        const AstNode* args = e.child("arguments");
        int argc = 0;
        if (args != nullptr) {
            argc = args->kind == "argument_list" ? static_cast<int>(args->children.size()) : 1;
        }
        std::string callee = "<expr>";
        if (fn != nullptr && fn->kind == "identifier") {
            callee = fn->text;
        } else if (fn != nullptr && fn->kind == "attribute") {
            if (const AstNode* attr = fn->child("attribute")) callee = attr->text;
        }
        const int self = b_.call(callee, argc, false, e.span, parent);
        if (fn != nullptr && fn->kind != "identifier") expr(*fn, self);
        if (args != nullptr) expr(*args, self);
        return self;
    }

    void bind_targets(const AstNode& t) {
        if (t.kind == "identifier") {
            b_.bind(t.text);
            return;
        }
        for (const auto& c : t.children) bind_targets(c);
    }

    EffectsBuilder& builder() { return b_; }

private:
    EffectsBuilder b_;
};

Effects simple_effects(const AstNode& s);

Effects expression_statement_effects(const AstNode& s) {
    Effects eff;
    PyAnalyzer a(eff);
    if (s.children.empty()) {
        eff.label = operation("pass");
        return eff;
    }
    const AstNode& e = s.children.size() == 1 ? s.children.front() : s;
    if (e.kind == "assignment") {
        const AstNode* cur = &e;
        bool any_value = false;
        while (cur != nullptr && cur->kind == "assignment") {
            const AstNode* right = cur->child("right");
            if (right != nullptr) {
                any_value = true;
                if (const AstNode* left = cur->child("left")) a.target(*left, false);
            }
            cur = right;
        }
        if (cur != nullptr) a.expr(*cur, -1);
        eff.label = operation(any_value ? "assign" : "decl");
        return eff;
    }
    if (e.kind == "augmented_assignment") {
        if (const AstNode* left = e.child("left")) a.target(*left, true);
        if (const AstNode* right = e.child("right")) a.expr(*right, -1);
        eff.label = operation(e.op);
        return eff;
    }
    if (e.kind == "call") {
        eff.self_call = a.call_expr(e, -1);
        eff.label = operation("call");
        return eff;
    }
    a.expr(e, -1);
    eff.label = s.children.size() == 1 ? expression_label(e) : operation("tuple");
    return eff;
}

Effects simple_effects(const AstNode& s) {
    const std::string& k = s.kind;
    if (k == "expression_statement") return expression_statement_effects(s);

    Effects eff;
    PyAnalyzer a(eff);
    if (k == std::string_view(kNestedFunctionKind)) {
        eff.self_call = a.builder().call(s.text, 0, true, s.span, -1);
        eff.label = operation("call");
        return eff;
    }
    if (one_of(k, {"import_statement", "import_from_statement", "future_import_statement"})) {
        eff.label = operation("import");
        for (const auto* n : s.children_in("name")) {
            if (n->kind == "aliased_import") {
                if (const AstNode* alias = n->child("alias")) a.builder().def(alias->text);
            } else if (n->kind == "dotted_name" && !n->children.empty()) {
                a.builder().def(k == "import_statement" ? n->children.front().text : n->children.back().text);
            }
        }
        return eff;
    }
    if (k == "print_statement") {
        eff.self_call = a.builder().call("print", static_cast<int>(s.children.size()), false, s.span, -1);
        for (const auto& c : s.children) a.expr(c, eff.self_call);
        eff.label = operation("call");
        return eff;
    }
    if (one_of(k, {"global_statement", "nonlocal_statement"})) {
        eff.label = operation("global");
        return eff;
    }
    static const std::pair<std::string_view, std::string_view> kLabels[] = {
        {"return_statement", "return"}, {"delete_statement", "del"},      {"raise_statement", "throw"},
        {"pass_statement", "pass"},     {"break_statement", "break"},     {"continue_statement", "continue"},
        {"assert_statement", "assert"}, {"exec_statement", "exec"},       {"type_alias_statement", "decl"},
        {"ERROR", "error"},             {"with_item", "with"},            {"except_clause", "catch"},
    };
    eff.label = operation(k);
    for (const auto& [kind, label] : kLabels) {
        if (k == kind) eff.label = operation(std::string(label));
    }
    for (const auto& c : s.children) a.expr(c, -1);
    return eff;
}

Effects predicate_effects(const AstNode* cond) {
    Effects eff;
    if (cond == nullptr) {
        eff.label = operation("true");
        return eff;
    }
    PyAnalyzer a(eff);
    a.expr(*cond, -1);
    eff.label = expression_label(*cond);
    return eff;
}

// ---------------------------------------------------------------------------
// Statements

class PyLowering {
public:
    std::vector<Stmt> block(const AstNode* b) {
        std::vector<Stmt> out;
        if (b == nullptr) return out;
        if (b->kind != "block" && b->kind != "module") {
            statement(*b, out);
            return out;
        }
        for (const auto& s : b->children) statement(s, out);
        return out;
    }

    void statement(const AstNode& s, std::vector<Stmt>& out) {
        const std::string& k = s.kind;
        Stmt st;
        st.node = &s;
        st.span = s.span;
        if (k == "block") {
            for (const auto& c : s.children) statement(c, out);
            return;
        }
        if (k == "if_statement" || k == "elif_clause") {
            st.kind = StmtKind::If;
            st.effects = predicate_effects(s.child("condition"));
            st.body = block(s.child("consequence"));
            // if_statement lists every elif/else as an `alternative`; chain them.
            std::vector<const AstNode*> alts = s.children_in("alternative");
            st.orelse = alternatives(alts, 0);
            out.push_back(std::move(st));
            return;
        }
        if (k == "while_statement") {
            st.kind = StmtKind::While;
            st.effects = predicate_effects(s.child("condition"));
            st.body = block(s.child("body"));
            if (const AstNode* alt = s.child("alternative")) st.orelse = block(alt->child("body"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "for_statement") {
            st.kind = StmtKind::ForEach;
            PyAnalyzer a(st.effects);
            for (const auto* r : s.children_in("right")) a.expr(*r, -1);
            if (const AstNode* left = s.child("left")) a.target(*left, false);
            st.effects.label = operation("for");
            st.body = block(s.child("body"));
            if (const AstNode* alt = s.child("alternative")) st.orelse = block(alt->child("body"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "try_statement") {
            st.kind = StmtKind::Try;
            st.effects.label = operation("try");
            st.body = block(s.child("body"));
            for (const auto& c : s.children) {
                if (c.kind == "except_clause" || c.kind == "except_group_clause") {
                    std::vector<Stmt> handler;
                    Stmt head;
                    head.node = &c;
                    head.span = c.span;
                    head.effects.label = operation("catch");
                    PyAnalyzer a(head.effects);
                    for (const auto& part : c.children) {
                        if (part.kind == "block") continue;
                        if (part.kind == "as_pattern") {
                            if (!part.children.empty()) a.expr(part.children.front(), -1);
                            if (const AstNode* alias = part.child("alias")) a.target(*alias, false);
                        } else {
                            a.expr(part, -1);
                        }
                    }
                    handler.push_back(std::move(head));
                    auto body = block(first_of_kind(c, "block"));
                    std::move(body.begin(), body.end(), std::back_inserter(handler));
                    st.branches.push_back(std::move(handler));
                } else if (c.kind == "else_clause") {
                    st.orelse = block(c.child("body"));
                } else if (c.kind == "finally_clause") {
                    st.finally_body = block(first_of_kind(c, "block"));
                }
            }
            out.push_back(std::move(st));
            return;
        }
        if (k == "with_statement") {
            if (const AstNode* clause = first_of_kind(s, "with_clause")) {
                for (const auto& item : clause->children) {
                    Stmt w;
                    w.node = &item;
                    w.span = item.span;
                    w.effects.label = operation("with");
                    PyAnalyzer a(w.effects);
                    const AstNode* value = item.child("value");
                    if (value != nullptr && value->kind == "as_pattern") {
                        if (!value->children.empty()) a.expr(value->children.front(), -1);
                        if (const AstNode* alias = value->child("alias")) a.target(*alias, false);
                    } else if (value != nullptr) {
                        a.expr(*value, -1);
                    }
                    out.push_back(std::move(w));
                }
            }
            auto body = block(s.child("body"));
            std::move(body.begin(), body.end(), std::back_inserter(out));
            return;
        }
        if (k == "match_statement") {
            st.kind = StmtKind::Switch;
            st.effects = predicate_effects(s.child("subject"));
            st.effects.label = operation("switch");
            if (const AstNode* body = s.child("body")) {
                for (const auto& c : body->children) {
                    if (c.kind != "case_clause") continue;
                    bool wildcard = false;
                    for (const auto& pat : c.children) {
                        if (pat.kind == "case_pattern" && pat.text == "_") wildcard = true;
                    }
                    st.has_default = st.has_default || wildcard;
                    st.branches.push_back(block(c.child("consequence")));
                }
            }
            out.push_back(std::move(st));
            return;
        }
        if (k == "return_statement") st.kind = StmtKind::Return;
        if (k == "raise_statement") st.kind = StmtKind::Throw;
        if (k == "break_statement") st.kind = StmtKind::Break;
        if (k == "continue_statement") st.kind = StmtKind::Continue;
        if (one_of(k, {"function_definition", "class_definition", "decorated_definition"})) {
            // Only reachable for definitions the extractor left in place; treat as a declaration.
            st.effects.label = operation("decl");
            out.push_back(std::move(st));
            return;
        }
        st.effects = simple_effects(s);
        out.push_back(std::move(st));
    }

private:
    std::vector<Stmt> alternatives(const std::vector<const AstNode*>& alts, std::size_t i) {
        std::vector<Stmt> out;
        if (i >= alts.size()) return out;
        const AstNode& alt = *alts[i];
        if (alt.kind == "else_clause") return block(alt.child("body"));
        Stmt st;
        st.kind = StmtKind::If;
        st.node = &alt;
        st.span = alt.span;
        st.effects = predicate_effects(alt.child("condition"));
        st.body = block(alt.child("consequence"));
        st.orelse = alternatives(alts, i + 1);
        out.push_back(std::move(st));
        return out;
    }
};

// ---------------------------------------------------------------------------
// Extraction

class PyExtractor {
public:
    explicit PyExtractor(ExtractSink& sink) : sink_(sink) {}

    void module(const AstNode& root) {
        for (const auto& s : root.children) toplevel(s);
    }

private:
    void toplevel(const AstNode& s) {
        const AstNode* def = unwrap(s);
        if (def->kind == "function_definition") {
            function(*def);
        } else if (def->kind == "class_definition") {
            if (const AstNode* body = def->child("body")) {
                for (const auto& m : body->children) toplevel(m);
            }
        } else {
            AstNode copy = s;
            rewrite_nested(copy);
            sink_.add_toplevel(copy);
        }
    }

    static const AstNode* unwrap(const AstNode& s) {
        if (s.kind == "decorated_definition") {
            if (const AstNode* d = s.child("definition")) return d;
        }
        return &s;
    }

    int function(const AstNode& def) {
        const AstNode* name = def.child("name");
        AstNode body;
        if (const AstNode* b = def.child("body")) {
            body = *b;
        } else {
            body.kind = "block";
            body.span = {def.span.end, def.span.end};
        }
        const int index = sink_.add_function(name != nullptr ? name->text : "<anonymous>",
                                             parameter_names(def.child("parameters")), AstNode{});
        rewrite_nested(body);
        sink_.functions[static_cast<std::size_t>(index)].body = std::move(body);
        return index;
    }

    // Replaces nested definitions with placeholders and extracts them.
    void rewrite_nested(AstNode& node) {
        for (auto& c : node.children) {
            const AstNode* def = unwrap(c);
            if (def->kind == "function_definition") {
                const AstNode copy = *def;
                const Span span = c.span;
                const std::string field = c.field;
                const int index = function(copy);
                c = sink_.placeholder(index, span);
                c.field = field;
            } else if (def->kind == "class_definition") {
                AstNode inline_body;
                inline_body.kind = "block";
                inline_body.span = c.span;
                inline_body.field = c.field;
                if (const AstNode* body = def->child("body")) {
                    for (const auto& m : body->children) {
                        const AstNode* mdef = unwrap(m);
                        if (mdef->kind == "function_definition") {
                            const AstNode copy = *mdef;
                            inline_body.children.push_back(sink_.placeholder(function(copy), m.span));
                        } else {
                            AstNode member = m;
                            rewrite_nested(member);
                            inline_body.children.push_back(std::move(member));
                        }
                    }
                }
                c = std::move(inline_body);
            } else {
                rewrite_nested(c);
            }
        }
    }

    ExtractSink& sink_;
};

class PythonAdapter final : public LanguageAdapter {
public:
    Language language() const override { return Language::Python; }
    const TSLanguage* grammar() const override { return tree_sitter_python(); }
    bool is_comment(std::string_view kind) const override { return kind == "comment"; }
    bool is_string(std::string_view kind) const override { return kind == "string"; }
    bool is_literal(std::string_view kind) const override {
        return one_of(kind, {"integer", "float", "string", "concatenated_string", "true", "false", "none", "ellipsis"});
    }
    bool has_unlabelled_operator(std::string_view kind) const override { return kind == "not_operator"; }

    void extract(const AstNode& root, ExtractSink& sink) const override { PyExtractor(sink).module(root); }

    LoweredFunction lower(const FunctionDecl& function) const override {
        LoweredFunction out;
        for (const auto& p : function.params) {
            Stmt st;
            st.span = {function.body.span.start, function.body.span.start};
            st.effects.label = {LabelCategory::IdentifierClass, "PARAM"};
            st.effects.defs.push_back(p);
            out.params.push_back(std::move(st));
        }
        PyLowering lowering;
        out.body = lowering.block(&function.body);
        return out;
    }
};

} // namespace

const LanguageAdapter& python_adapter() {
    static const PythonAdapter adapter;
    return adapter;
}

} // namespace cssg::detail
