#include <algorithm>
#include <string>
#include <vector>

#include "cssg/pdg.hpp"
#include "language_adapter.hpp"

namespace cssg {

using detail::Effects;
using detail::Stmt;
using detail::StmtKind;

namespace {

struct Dangling {
    int node;
    std::string branch;
};

using Frontier = std::vector<Dangling>;

struct JumpContext {
    std::string label;
    bool is_loop;
    Frontier breaks;
    Frontier continues;
};

struct Chain {
    int first = -1;
    int last = -1;
};

class CfgBuilder {
public:
    explicit CfgBuilder(std::string name) {
        cfg_.function_name = std::move(name);
        cfg_.entry = add_node(CfgNodeKind::Entry, {}, nullptr, Span{});
        cfg_.exit = add_node(CfgNodeKind::Exit, {}, nullptr, Span{});
    }

    Cfg build(const detail::LoweredFunction& fn, Span body_span) {
        cfg_.nodes[static_cast<std::size_t>(cfg_.entry)].span = {body_span.start, body_span.start};
        cfg_.nodes[static_cast<std::size_t>(cfg_.exit)].span = {body_span.end, body_span.end};
        Frontier f{{cfg_.entry, ""}};
        f = sequence(fn.params, std::move(f));
        f = sequence(fn.body, std::move(f));
        connect(f, cfg_.exit);
        attach_unreachable();
        attach_dead_ends();
        return std::move(cfg_);
    }

private:
    int add_node(CfgNodeKind kind, NodeLabel label, const AstNode* stmt, Span span) {
        CfgNode n;
        n.id = static_cast<int>(cfg_.nodes.size());
        n.kind = kind;
        n.label = std::move(label);
        n.statement = stmt;
        n.span = span;
        cfg_.nodes.push_back(std::move(n));
        return cfg_.nodes.back().id;
    }

    void add_edge(int src, int dst, std::string branch, bool synthetic = false) {
        CfgEdge e{src, dst, std::move(branch), synthetic};
        if (std::find(cfg_.edges.begin(), cfg_.edges.end(), e) == cfg_.edges.end()) cfg_.edges.push_back(std::move(e));
    }

    void connect(const Frontier& from, int to) {
        for (const auto& d : from) add_edge(d.node, to, d.branch);
    }

    static std::string temp_name(int node) { return "$c" + std::to_string(node); }

    // Emits the call sites of `s` (innermost first) followed by the node for
    // the statement itself, or reuses the call node when the statement is a
    // bare call. `split_calls` keeps every call a separate node.
    Chain emit(const Stmt& s, CfgNodeKind kind, Frontier& incoming, bool split_calls = false) {
        const Effects& eff = s.effects;
        std::vector<std::vector<int>> children(eff.calls.size());
        std::vector<int> roots;
        for (std::size_t i = 0; i < eff.calls.size(); ++i) {
            const int p = eff.calls[i].parent;
            if (p >= 0) {
                children[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
            } else {
                roots.push_back(static_cast<int>(i));
            }
        }

        Chain chain;
        Frontier cur = std::move(incoming);
        auto link = [&](int node) {
            connect(cur, node);
            cur = {{node, ""}};
            if (chain.first < 0) chain.first = node;
            chain.last = node;
        };

        std::vector<int> node_of(eff.calls.size(), -1);
        // Post-order over the call forest; the statement's own call is emitted last.
        std::vector<std::pair<int, bool>> stack;
        for (auto it = roots.rbegin(); it != roots.rend(); ++it) stack.emplace_back(*it, false);
        const bool self_is_call = eff.self_call >= 0 && kind == CfgNodeKind::Statement && !split_calls;
        int self_node = -1;
        while (!stack.empty()) {
            auto [c, expanded] = stack.back();
            stack.pop_back();
            const auto& kids = children[static_cast<std::size_t>(c)];
            if (!expanded) {
                stack.emplace_back(c, true);
                for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, false);
                continue;
            }
            const auto& info = eff.calls[static_cast<std::size_t>(c)];
            const bool is_self = self_is_call && c == eff.self_call;
            const int node = add_node(CfgNodeKind::CallSite, detail::operation("call"), s.node, info.span);
            node_of[static_cast<std::size_t>(c)] = node;
            auto& n = cfg_.nodes[static_cast<std::size_t>(node)];
            n.callee = info.callee;
            n.call_args = info.argc;
            n.callee_exact = info.exact;
            n.uses = info.uses;
            for (int k : kids) detail::append_unique(n.uses, temp_name(node_of[static_cast<std::size_t>(k)]));
            if (is_self) {
                self_node = node;
                n.span = s.span;
                for (const auto& u : eff.uses) detail::append_unique(n.uses, u);
                for (const auto& d : eff.defs) detail::append_unique(n.defs, d);
            } else {
                n.defs.push_back(temp_name(node));
            }
            link(node);
        }
        if (self_node >= 0) {
            // Remaining roots (if any) feed the statement call as well.
            auto& n = cfg_.nodes[static_cast<std::size_t>(self_node)];
            for (int r : roots) {
                if (r != eff.self_call) detail::append_unique(n.uses, temp_name(node_of[static_cast<std::size_t>(r)]));
            }
            incoming = std::move(cur);
            return chain;
        }
        const int node = add_node(kind, eff.label, s.node, s.span);
        auto& n = cfg_.nodes[static_cast<std::size_t>(node)];
        n.defs = eff.defs;
        n.uses = eff.uses;
        for (int r : roots) detail::append_unique(n.uses, temp_name(node_of[static_cast<std::size_t>(r)]));
        link(node);
        incoming = std::move(cur);
        return chain;
    }

    JumpContext* find_target(const std::string& label, bool need_loop) {
        for (auto it = contexts_.rbegin(); it != contexts_.rend(); ++it) {
            if (!label.empty()) {
                if (it->label == label) return &*it;
            } else if (it->is_loop || !need_loop) {
                return &*it;
            }
        }
        return nullptr;
    }

    Frontier sequence(const std::vector<Stmt>& stmts, Frontier f) {
        for (const auto& s : stmts) f = statement(s, std::move(f));
        return f;
    }

    Frontier statement(const Stmt& s, Frontier f) {
        switch (s.kind) {
        case StmtKind::Simple: emit(s, CfgNodeKind::Statement, f); return f;
        case StmtKind::Return:
        case StmtKind::Throw: {
            emit(s, CfgNodeKind::Statement, f);
            connect(f, cfg_.exit);
            return {};
        }
        case StmtKind::Break:
        case StmtKind::Continue: {
            emit(s, CfgNodeKind::Statement, f);
            const bool is_break = s.kind == StmtKind::Break;
            if (JumpContext* ctx = find_target(s.jump_label, !is_break)) {
                auto& list = is_break ? ctx->breaks : ctx->continues;
                list.insert(list.end(), f.begin(), f.end());
            } else {
                connect(f, cfg_.exit); // jump outside any loop: leave the function
            }
            return {};
        }
        case StmtKind::If: return if_statement(s, std::move(f));
        case StmtKind::While: return while_statement(s, std::move(f));
        case StmtKind::DoWhile: return do_while_statement(s, std::move(f));
        case StmtKind::ForEach: return foreach_statement(s, std::move(f));
        case StmtKind::For: return for_statement(s, std::move(f));
        case StmtKind::Switch: return switch_statement(s, std::move(f));
        case StmtKind::Try: return try_statement(s, std::move(f));
        }
        return f;
    }

    Frontier if_statement(const Stmt& s, Frontier f) {
        const Chain c = emit(s, CfgNodeKind::Predicate, f);
        Frontier out = sequence(s.body, {{c.last, "true"}});
        Frontier alt = sequence(s.orelse, {{c.last, "false"}});
        out.insert(out.end(), alt.begin(), alt.end());
        return out;
    }

    Frontier while_statement(const Stmt& s, Frontier f) {
        const Chain c = emit(s, CfgNodeKind::Predicate, f);
        contexts_.push_back({s.jump_label, true, {}, {}});
        Frontier body = sequence(s.body, {{c.last, "true"}});
        JumpContext ctx = std::move(contexts_.back());
        contexts_.pop_back();
        connect(body, c.first);
        connect(ctx.continues, c.first);
        Frontier out = sequence(s.orelse, {{c.last, "false"}});
        out.insert(out.end(), ctx.breaks.begin(), ctx.breaks.end());
        return out;
    }

    Frontier do_while_statement(const Stmt& s, Frontier f) {
        const int mark = static_cast<int>(cfg_.nodes.size());
        contexts_.push_back({s.jump_label, true, {}, {}});
        Frontier body = sequence(s.body, std::move(f));
        JumpContext ctx = std::move(contexts_.back());
        contexts_.pop_back();
        body.insert(body.end(), ctx.continues.begin(), ctx.continues.end());
        const Chain c = emit(s, CfgNodeKind::Predicate, body);
        add_edge(c.last, mark, "true");
        Frontier out{{c.last, "false"}};
        out.insert(out.end(), ctx.breaks.begin(), ctx.breaks.end());
        return out;
    }

    Frontier foreach_statement(const Stmt& s, Frontier f) {
        const Chain c = emit(s, CfgNodeKind::Predicate, f, true);
        const int header = c.last;
        contexts_.push_back({s.jump_label, true, {}, {}});
        Frontier body = sequence(s.body, {{header, "true"}});
        JumpContext ctx = std::move(contexts_.back());
        contexts_.pop_back();
        connect(body, header);
        connect(ctx.continues, header);
        Frontier out = sequence(s.orelse, {{header, "false"}});
        out.insert(out.end(), ctx.breaks.begin(), ctx.breaks.end());
        return out;
    }

    Frontier for_statement(const Stmt& s, Frontier f) {
        f = sequence(s.init, std::move(f));
        const Chain c = emit(s, CfgNodeKind::Predicate, f);
        contexts_.push_back({s.jump_label, true, {}, {}});
        Frontier body = sequence(s.body, {{c.last, "true"}});
        JumpContext ctx = std::move(contexts_.back());
        contexts_.pop_back();
        body.insert(body.end(), ctx.continues.begin(), ctx.continues.end());
        body = sequence(s.update, std::move(body));
        connect(body, c.first);
        Frontier out{{c.last, "false"}};
        out.insert(out.end(), ctx.breaks.begin(), ctx.breaks.end());
        return out;
    }

    Frontier switch_statement(const Stmt& s, Frontier f) {
        const Chain c = emit(s, CfgNodeKind::Predicate, f);
        contexts_.push_back({s.jump_label, false, {}, {}});
        Frontier out;
        Frontier carry;
        for (const auto& branch : s.branches) {
            Frontier in{{c.last, "case"}};
            if (s.fallthrough) in.insert(in.end(), carry.begin(), carry.end());
            Frontier end = sequence(branch, std::move(in));
            if (s.fallthrough) {
                carry = std::move(end);
            } else {
                out.insert(out.end(), end.begin(), end.end());
            }
        }
        out.insert(out.end(), carry.begin(), carry.end());
        if (!s.has_default || s.branches.empty()) out.push_back({c.last, "default"});
        JumpContext ctx = std::move(contexts_.back());
        contexts_.pop_back();
        out.insert(out.end(), ctx.breaks.begin(), ctx.breaks.end());
        // A labelled switch may be the target of `continue` only through an enclosing loop.
        if (!ctx.continues.empty()) {
            if (JumpContext* outer = find_target({}, true)) {
                outer->continues.insert(outer->continues.end(), ctx.continues.begin(), ctx.continues.end());
            } else {
                connect(ctx.continues, cfg_.exit);
            }
        }
        return out;
    }

    Frontier try_statement(const Stmt& s, Frontier f) {
        const Chain c = emit(s, CfgNodeKind::Predicate, f);
        Frontier out = sequence(s.body, {{c.last, "body"}});
        out = sequence(s.orelse, std::move(out));
        for (const auto& handler : s.branches) {
            Frontier h = sequence(handler, {{c.last, "handler"}});
            out.insert(out.end(), h.begin(), h.end());
        }
        if (s.branches.empty()) out.push_back({c.last, "handler"});
        return sequence(s.finally_body, std::move(out));
    }

    // Marks every node reachable from `from` along `adj`.
    static void mark(int from, const std::vector<std::vector<int>>& adj, std::vector<bool>& seen) {
        std::vector<int> stack{from};
        seen[static_cast<std::size_t>(from)] = true;
        while (!stack.empty()) {
            const int n = stack.back();
            stack.pop_back();
            for (int m : adj[static_cast<std::size_t>(n)]) {
                if (!seen[static_cast<std::size_t>(m)]) {
                    seen[static_cast<std::size_t>(m)] = true;
                    stack.push_back(m);
                }
            }
        }
    }

    void attach_unreachable() {
        std::vector<std::vector<int>> succ(cfg_.nodes.size());
        for (const auto& e : cfg_.edges) succ[static_cast<std::size_t>(e.src)].push_back(e.dst);
        std::vector<bool> seen(cfg_.nodes.size(), false);
        mark(cfg_.entry, succ, seen);
        for (std::size_t i = 0; i < cfg_.nodes.size(); ++i) {
            if (seen[i]) continue;
            add_edge(cfg_.entry, static_cast<int>(i), "", true);
            mark(static_cast<int>(i), succ, seen);
        }
    }

    void attach_dead_ends() {
        std::vector<std::vector<int>> pred(cfg_.nodes.size());
        for (const auto& e : cfg_.edges) pred[static_cast<std::size_t>(e.dst)].push_back(e.src);
        std::vector<bool> seen(cfg_.nodes.size(), false);
        mark(cfg_.exit, pred, seen);
        for (std::size_t i = cfg_.nodes.size(); i-- > 0;) {
            if (seen[i]) continue;
            add_edge(static_cast<int>(i), cfg_.exit, "", true);
            mark(static_cast<int>(i), pred, seen);
        }
    }

    Cfg cfg_;
    std::vector<JumpContext> contexts_;
};

} // namespace

std::vector<int> Cfg::successors(int id) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.src == id && std::find(out.begin(), out.end(), e.dst) == out.end()) out.push_back(e.dst);
    }
    return out;
}

std::vector<int> Cfg::predecessors(int id) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.dst == id && std::find(out.begin(), out.end(), e.src) == out.end()) out.push_back(e.src);
    }
    return out;
}

Cfg build_cfg(const FunctionDecl& function) {
    const auto lowered = detail::adapter_for(function.language).lower(function);
    return CfgBuilder(function.name).build(lowered, function.body.span);
}

} // namespace cssg
