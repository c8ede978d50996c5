// Java adapter over the tree-sitter-java grammar.

#include <algorithm>
#include <string>

#include "language_adapter.hpp"

extern "C" const TSLanguage* tree_sitter_java();

namespace cssg::detail {

namespace {

bool one_of(std::string_view kind, std::initializer_list<std::string_view> kinds) {
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

bool is_type_node(std::string_view kind) {
    return kind == "type_identifier" || kind == "generic_type" || kind == "type_arguments" || kind == "dimensions" ||
           kind == "scoped_type_identifier" || kind == "annotation" || kind == "marker_annotation" ||
           kind == "modifiers" || (kind.size() > 5 && kind.substr(kind.size() - 5) == "_type");
}

bool is_type_declaration(std::string_view kind) {
    return one_of(kind, {"class_declaration", "interface_declaration", "enum_declaration", "record_declaration"});
}

bool is_literal_kind(std::string_view kind) {
    return one_of(kind, {"decimal_integer_literal", "hex_integer_literal", "octal_integer_literal",
                         "binary_integer_literal", "decimal_floating_point_literal", "hex_floating_point_literal",
                         "string_literal", "text_block", "character_literal", "true", "false", "null_literal"});
}

std::vector<std::string> parameter_names(const AstNode* params) {
    std::vector<std::string> out;
    if (params == nullptr) return out;
    for (const auto& p : params->children) {
        if (p.kind == "formal_parameter") {
            if (const AstNode* name = p.child("name")) out.push_back(name->text);
        } else if (p.kind == "spread_parameter") {
            for (const auto& c : p.children) {
                if (c.kind == "variable_declarator") {
                    if (const AstNode* name = c.child("name")) out.push_back(name->text);
                }
            }
        } else if (p.kind == "identifier") { // inferred lambda parameters
            out.push_back(p.text);
        }
    }
    return out;
}

std::string type_name(const AstNode* type) {
    if (type == nullptr) return "<expr>";
    if (type->kind == "generic_type" || type->kind == "scoped_type_identifier") {
        for (auto it = type->children.rbegin(); it != type->children.rend(); ++it) {
            if (it->kind == "type_identifier") return it->text;
        }
        if (!type->children.empty()) return type_name(&type->children.front());
    }
    return type->text.empty() ? "<expr>" : type->text;
}

NodeLabel expression_label(const AstNode& e) {
    const std::string& k = e.kind;
    if (k == "parenthesized_expression" && !e.children.empty()) return expression_label(e.children.front());
    if (one_of(k, {"binary_expression", "unary_expression", "update_expression"})) return operation(e.op);
    if (k == "method_invocation" || k == "object_creation_expression" || k == "explicit_constructor_invocation") {
        return operation("call");
    }
    if (k == "assignment_expression") return operation(e.op == "=" ? "assign" : e.op);
    if (k == "field_access") return operation(".");
    if (k == "array_access") return operation("[]");
    if (k == "identifier" || k == "this") return variable();
    if (is_literal_kind(k)) return constant(literal_class(k, e.text));
    if (k == "ternary_expression") return operation("?:");
    if (k == "lambda_expression" || k == "method_reference") return operation("lambda");
    if (k == "array_creation_expression") return operation("new[]");
    if (k == "array_initializer") return operation("list");
    if (k == "cast_expression") return operation("cast");
    if (k == "instanceof_expression") return operation("instanceof");
    if (k == "switch_expression") return operation("switch");
    if (k == "ERROR") return operation("error");
    return operation(k);
}

class JavaAnalyzer {
public:
    explicit JavaAnalyzer(Effects& eff) : b_(eff) {}

    void expr(const AstNode& e, int call) {
        const std::string& k = e.kind;
        if (k == "identifier") {
            b_.use(e.text, call);
            return;
        }
        if (is_type_node(k) || k == "class_body" || k == "class_literal") return;
        if (k == "method_invocation") {
            invocation(e, call);
            return;
        }
        if (k == "object_creation_expression") {
            creation(e, call);
            return;
        }
        if (k == "explicit_constructor_invocation") {
            explicit_constructor(e, call);
            return;
        }
        if (k == "field_access") {
            const AstNode* obj = e.child("object");
            const AstNode* field = e.child("field");
            if (obj != nullptr && obj->kind == "this" && field != nullptr) {
                b_.use(field->text, call);
            } else if (obj != nullptr) {
                expr(*obj, call);
            }
            return;
        }
        if (k == "assignment_expression") {
            const bool compound = e.op != "=";
            if (const AstNode* left = e.child("left")) target(*left, compound);
            if (const AstNode* right = e.child("right")) expr(*right, call);
            return;
        }
        if (k == "update_expression") {
            for (const auto& c : e.children) target(c, true);
            return;
        }
        if (k == "lambda_expression") {
            const std::size_t mark = b_.bound_size();
            if (const AstNode* params = e.child("parameters")) {
                if (params->kind == "identifier") {
                    b_.bind(params->text);
                } else {
                    for (const auto& name : parameter_names(params)) b_.bind(name);
                }
            }
            if (const AstNode* body = e.child("body")) {
                if (body->kind == "block") {
                    nested_block(*body, call);
                } else {
                    expr(*body, call);
                }
            }
            b_.unbind_to(mark);
            return;
        }
        if (k == "method_reference") return;
        for (const auto& c : e.children) expr(c, call);
    }

    void target(const AstNode& t, bool also_use) {
        const std::string& k = t.kind;
        if (k == "identifier") {
            b_.def(t.text);
            if (also_use) b_.use(t.text, -1);
            return;
        }
        if (k == "parenthesized_expression") {
            for (const auto& c : t.children) target(c, also_use);
            return;
        }
        if (k == "field_access") {
            const AstNode* obj = t.child("object");
            const AstNode* field = t.child("field");
            if (obj != nullptr && obj->kind == "this" && field != nullptr) {
                b_.def(field->text);
                if (also_use) b_.use(field->text, -1);
                return;
            }
        }
        if (k == "array_access" || k == "field_access") {
            const AstNode* base = &t;
            while (base->kind == "array_access" || base->kind == "field_access") {
                const AstNode* inner = base->kind == "array_access" ? base->child("array") : base->child("object");
                if (inner == nullptr) break;
                if (base->kind == "array_access") {
                    if (const AstNode* idx = base->child("index")) expr(*idx, -1);
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

    int invocation(const AstNode& e, int parent) {
        const AstNode* name = e.child("name");
        const AstNode* args = e.child("arguments");
        const int argc = args != nullptr ? static_cast<int>(args->children.size()) : 0;
        const int self = b_.call(name != nullptr ? name->text : "<expr>", argc, false, e.span, parent);
        if (const AstNode* obj = e.child("object")) {
            if (obj->kind != "this" && obj->kind != "super") expr(*obj, self);
        }
        if (args != nullptr) expr(*args, self);
        return self;
    }

    int creation(const AstNode& e, int parent) {
        const AstNode* args = e.child("arguments");
        const int argc = args != nullptr ? static_cast<int>(args->children.size()) : 0;
        const int self = b_.call(type_name(e.child("type")), argc, false, e.span, parent);
        if (args != nullptr) expr(*args, self);
        return self;
    }

    int explicit_constructor(const AstNode& e, int parent) {
        const AstNode* ctor = e.child("constructor");
        const AstNode* args = e.child("arguments");
        const int argc = args != nullptr ? static_cast<int>(args->children.size()) : 0;
        const int self = b_.call(ctor != nullptr ? ctor->text : "super", argc, false, e.span, parent);
        if (args != nullptr) expr(*args, self);
        return self;
    }

    EffectsBuilder& builder() { return b_; }

private:
    // Statements inside a lambda body contribute uses to the enclosing statement.
    void nested_block(const AstNode& block, int call) {
        for (const auto& c : block.children) expr(c, call);
    }

    EffectsBuilder b_;
};

Effects declaration_effects(const AstNode& s) {
    Effects eff;
    JavaAnalyzer a(eff);
    bool any_value = false;
    for (const auto* d : s.children_in("declarator")) {
        const AstNode* value = d->child("value");
        if (value == nullptr) continue;
        any_value = true;
        if (const AstNode* name = d->child("name")) a.builder().def(name->text);
        a.expr(*value, -1);
    }
    eff.label = operation(any_value ? "assign" : "decl");
    return eff;
}

Effects expression_effects(const AstNode& e) {
    Effects eff;
    JavaAnalyzer a(eff);
    if (e.kind == "method_invocation") {
        eff.self_call = a.invocation(e, -1);
    } else if (e.kind == "object_creation_expression") {
        eff.self_call = a.creation(e, -1);
    } else if (e.kind == "explicit_constructor_invocation") {
        eff.self_call = a.explicit_constructor(e, -1);
    } else {
        a.expr(e, -1);
    }
    eff.label = expression_label(e);
    return eff;
}

Effects simple_effects(const AstNode& s) {
    const std::string& k = s.kind;
    if (k == "local_variable_declaration" || k == "field_declaration" || k == "constant_declaration") {
        return declaration_effects(s);
    }
    if (k == "expression_statement") {
        if (s.children.empty()) {
            Effects eff;
            eff.label = operation("pass");
            return eff;
        }
        return expression_effects(s.children.front());
    }
    if (k == "explicit_constructor_invocation") return expression_effects(s);

    Effects eff;
    JavaAnalyzer a(eff);
    if (k == std::string_view(kNestedFunctionKind)) {
        eff.self_call = a.builder().call(s.text, 0, true, s.span, -1);
        eff.label = operation("call");
        return eff;
    }
    static const std::pair<std::string_view, std::string_view> kLabels[] = {
        {"return_statement", "return"}, {"throw_statement", "throw"},   {"break_statement", "break"},
        {"continue_statement", "continue"}, {"assert_statement", "assert"}, {"yield_statement", "return"},
        {"ERROR", "error"},
    };
    eff.label = operation(k);
    for (const auto& [kind, label] : kLabels) {
        if (k == kind) eff.label = operation(std::string(label));
    }
    if (k == "break_statement" || k == "continue_statement") return eff;
    for (const auto& c : s.children) a.expr(c, -1);
    return eff;
}

Effects predicate_effects(const AstNode* cond, const char* fallback) {
    Effects eff;
    if (cond == nullptr) {
        eff.label = operation(fallback);
        return eff;
    }
    JavaAnalyzer a(eff);
    a.expr(*cond, -1);
    eff.label = expression_label(*cond);
    return eff;
}

std::string jump_target(const AstNode& s) {
    for (const auto& c : s.children) {
        if (c.kind == "identifier") return c.text;
    }
    return {};
}

class JavaLowering {
public:
    std::vector<Stmt> block(const AstNode* b) {
        std::vector<Stmt> out;
        if (b == nullptr) return out;
        statement(*b, out);
        return out;
    }

    void statement(const AstNode& s, std::vector<Stmt>& out, const std::string& label = {}) {
        const std::string& k = s.kind;
        Stmt st;
        st.node = &s;
        st.span = s.span;
        st.jump_label = label;
        if (k == "block" || k == "constructor_body" || k == "program") {
            for (const auto& c : s.children) statement(c, out);
            return;
        }
        if (k == "labeled_statement") {
            const std::string name = jump_target(s);
            for (const auto& c : s.children) {
                if (c.kind != "identifier") statement(c, out, name);
            }
            return;
        }
        if (k == "if_statement") {
            st.kind = StmtKind::If;
            st.effects = predicate_effects(s.child("condition"), "true");
            st.body = block(s.child("consequence"));
            st.orelse = block(s.child("alternative"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "while_statement") {
            st.kind = StmtKind::While;
            st.effects = predicate_effects(s.child("condition"), "true");
            st.body = block(s.child("body"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "do_statement") {
            st.kind = StmtKind::DoWhile;
            st.effects = predicate_effects(s.child("condition"), "true");
            st.body = block(s.child("body"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "for_statement") {
            st.kind = StmtKind::For;
            for (const auto* init : s.children_in("init")) simple(*init, st.init);
            st.effects = predicate_effects(s.child("condition"), "for");
            for (const auto* upd : s.children_in("update")) simple(*upd, st.update);
            st.body = block(s.child("body"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "enhanced_for_statement") {
            st.kind = StmtKind::ForEach;
            JavaAnalyzer a(st.effects);
            if (const AstNode* value = s.child("value")) a.expr(*value, -1);
            if (const AstNode* name = s.child("name")) a.builder().def(name->text);
            st.effects.label = operation("for");
            st.body = block(s.child("body"));
            out.push_back(std::move(st));
            return;
        }
        if (k == "switch_expression" || k == "switch_statement") {
            st.kind = StmtKind::Switch;
            st.effects = predicate_effects(s.child("condition"), "switch");
            st.effects.label = operation("switch");
            if (const AstNode* body = s.child("body")) {
                for (const auto& group : body->children) {
                    if (group.kind != "switch_block_statement_group" && group.kind != "switch_rule") continue;
                    st.fallthrough = group.kind == "switch_block_statement_group";
                    std::vector<Stmt> branch;
                    for (const auto& c : group.children) {
                        if (c.kind == "switch_label") {
                            if (c.text == "default" || (!c.children.empty() && c.children.front().kind == "default")) {
                                st.has_default = true;
                            }
                            continue;
                        }
                        statement(c, branch);
                    }
                    st.branches.push_back(std::move(branch));
                }
            }
            out.push_back(std::move(st));
            return;
        }
        if (k == "try_statement" || k == "try_with_resources_statement") {
            if (const AstNode* res = s.child("resources")) {
                for (const auto& r : res->children) {
                    Stmt rs;
                    rs.node = &r;
                    rs.span = r.span;
                    JavaAnalyzer a(rs.effects);
                    if (const AstNode* value = r.child("value")) a.expr(*value, -1);
                    if (const AstNode* name = r.child("name")) a.builder().def(name->text);
                    rs.effects.label = operation("assign");
                    out.push_back(std::move(rs));
                }
            }
            st.kind = StmtKind::Try;
            st.effects.label = operation("try");
            st.body = block(s.child("body"));
            for (const auto& c : s.children) {
                if (c.kind == "catch_clause") {
                    std::vector<Stmt> handler;
                    Stmt head;
                    head.node = &c;
                    head.span = c.span;
                    head.effects.label = operation("catch");
                    for (const auto& p : c.children) {
                        if (p.kind == "catch_formal_parameter") {
                            if (const AstNode* name = p.child("name")) EffectsBuilder(head.effects).def(name->text);
                        }
                    }
                    handler.push_back(std::move(head));
                    auto body = block(c.child("body"));
                    std::move(body.begin(), body.end(), std::back_inserter(handler));
                    st.branches.push_back(std::move(handler));
                } else if (c.kind == "finally_clause") {
                    for (const auto& b : c.children) {
                        if (b.kind == "block") st.finally_body = block(&b);
                    }
                }
            }
            out.push_back(std::move(st));
            return;
        }
        if (k == "synchronized_statement") {
            Stmt lock;
            lock.node = &s;
            lock.span = s.span;
            JavaAnalyzer a(lock.effects);
            for (const auto& c : s.children) {
                if (c.kind != "block") a.expr(c, -1);
            }
            lock.effects.label = operation("with");
            out.push_back(std::move(lock));
            auto body = block(s.child("body"));
            std::move(body.begin(), body.end(), std::back_inserter(out));
            return;
        }
        if (k == "return_statement" || k == "yield_statement") st.kind = StmtKind::Return;
        if (k == "throw_statement") st.kind = StmtKind::Throw;
        if (k == "break_statement") {
            st.kind = StmtKind::Break;
            st.jump_label = jump_target(s);
        }
        if (k == "continue_statement") {
            st.kind = StmtKind::Continue;
            st.jump_label = jump_target(s);
        }
        if (is_type_declaration(k) || k == "method_declaration") {
            st.effects.label = operation("decl");
            out.push_back(std::move(st));
            return;
        }
        st.effects = simple_effects(s);
        out.push_back(std::move(st));
    }

private:
    void simple(const AstNode& e, std::vector<Stmt>& out) {
        Stmt st;
        st.node = &e;
        st.span = e.span;
        st.effects = e.kind == "local_variable_declaration" ? declaration_effects(e) : expression_effects(e);
        out.push_back(std::move(st));
    }
};

class JavaExtractor {
public:
    explicit JavaExtractor(ExtractSink& sink) : sink_(sink) {}

    void program(const AstNode& root) {
        for (const auto& s : root.children) {
            if (is_type_declaration(s.kind)) {
                type_body(s);
            } else if (s.kind == "method_declaration" || s.kind == "constructor_declaration") {
                method(s, nullptr);
            } else if (s.kind == "import_declaration" || s.kind == "package_declaration" ||
                       s.kind == "module_declaration" || s.kind == "annotation_type_declaration") {
                continue;
            } else {
                AstNode copy = s;
                rewrite_nested(copy);
                sink_.add_toplevel(copy);
            }
        }
    }

private:
    void type_body(const AstNode& decl) {
        const AstNode* name = decl.child("name");
        const AstNode* body = decl.child("body");
        if (body == nullptr) return;
        for (const auto& m : body->children) member(m, name);
    }

    void member(const AstNode& m, const AstNode* owner) {
        if (m.kind == "method_declaration" || m.kind == "constructor_declaration" ||
            m.kind == "compact_constructor_declaration") {
            method(m, owner);
        } else if (is_type_declaration(m.kind)) {
            type_body(m);
        } else if (m.kind == "enum_body_declarations") {
            for (const auto& c : m.children) member(c, owner);
        } else if (m.kind == "field_declaration" || m.kind == "constant_declaration") {
            AstNode copy = m;
            rewrite_nested(copy);
            sink_.add_toplevel(copy);
        } else if (m.kind == "static_initializer" || m.kind == "block") {
            const AstNode* blk = m.kind == "block" ? &m : nullptr;
            for (const auto& c : m.children) {
                if (c.kind == "block") blk = &c;
            }
            if (blk != nullptr) {
                for (const auto& s : blk->children) {
                    AstNode copy = s;
                    rewrite_nested(copy);
                    sink_.add_toplevel(copy);
                }
            }
        }
    }

    int method(const AstNode& m, const AstNode* owner) {
        const AstNode* name = m.child("name");
        std::string fname = name != nullptr ? name->text : (owner != nullptr ? owner->text : "<anonymous>");
        AstNode body;
        if (const AstNode* b = m.child("body")) {
            body = *b;
        } else {
            body.kind = "block";
            body.span = {m.span.end, m.span.end};
        }
        const int index = sink_.add_function(std::move(fname), parameter_names(m.child("parameters")), AstNode{});
        rewrite_nested(body);
        sink_.functions[static_cast<std::size_t>(index)].body = std::move(body);
        return index;
    }

    // Local classes inside method bodies: their methods become separate functions.
    void rewrite_nested(AstNode& node) {
        for (auto& c : node.children) {
            if (c.kind == "class_body") continue; // anonymous classes stay part of the expression
            if (is_type_declaration(c.kind)) {
                AstNode inline_body;
                inline_body.kind = "block";
                inline_body.span = c.span;
                inline_body.field = c.field;
                collect_local_members(c, inline_body);
                c = std::move(inline_body);
            } else {
                rewrite_nested(c);
            }
        }
    }

    void collect_local_members(const AstNode& decl, AstNode& into) {
        const AstNode* owner = decl.child("name");
        const AstNode* body = decl.child("body");
        if (body == nullptr) return;
        for (const auto& m : body->children) {
            if (m.kind == "method_declaration" || m.kind == "constructor_declaration") {
                const AstNode copy = m;
                into.children.push_back(sink_.placeholder(method(copy, owner), m.span));
            } else if (is_type_declaration(m.kind)) {
                collect_local_members(m, into);
            } else if (m.kind == "field_declaration") {
                into.children.push_back(m);
            }
        }
    }

    ExtractSink& sink_;
};

class JavaAdapter final : public LanguageAdapter {
public:
    Language language() const override { return Language::Java; }
    const TSLanguage* grammar() const override { return tree_sitter_java(); }
    bool is_comment(std::string_view kind) const override { return kind == "line_comment" || kind == "block_comment"; }
    bool is_string(std::string_view kind) const override { return kind == "string_literal" || kind == "text_block"; }
    bool is_literal(std::string_view kind) const override { return is_literal_kind(kind); }
    bool has_unlabelled_operator(std::string_view kind) const override { return kind == "update_expression"; }

    void extract(const AstNode& root, ExtractSink& sink) const override { JavaExtractor(sink).program(root); }

    LoweredFunction lower(const FunctionDecl& function) const override {
        LoweredFunction out;
        for (const auto& p : function.params) {
            Stmt st;
            st.span = {function.body.span.start, function.body.span.start};
            st.effects.label = {LabelCategory::IdentifierClass, "PARAM"};
            st.effects.defs.push_back(p);
            out.params.push_back(std::move(st));
        }
        JavaLowering lowering;
        out.body = lowering.block(&function.body);
        return out;
    }
};

} // namespace

const LanguageAdapter& java_adapter() {
    static const JavaAdapter adapter;
    return adapter;
}

} // namespace cssg::detail
