#include <algorithm>

#include "cssg/pdg.hpp"

namespace cssg {

FunctionGraph build_function_graph(const FunctionDecl& function) {
    const Cfg cfg = build_cfg(function);

    FunctionGraph g;
    g.function_name = function.name;
    g.arity = static_cast<int>(function.params.size());

    // CFG ids map onto graph ids with the exit node removed.
    std::vector<int> id_of(cfg.nodes.size(), -1);
    for (const auto& node : cfg.nodes) {
        if (node.kind == CfgNodeKind::Exit) continue;
        PdgNode p;
        p.id = static_cast<int>(g.nodes.size());
        p.span = node.span;
        if (node.kind == CfgNodeKind::Entry) {
            p.label = {LabelCategory::FunctionName, function.name};
            g.entry = p.id;
        } else {
            p.label = normalize_label(node.label);
        }
        if (node.kind == CfgNodeKind::CallSite) {
            p.callee = node.callee;
            p.call_args = node.call_args;
            p.callee_exact = node.callee_exact;
        }
        id_of[static_cast<std::size_t>(node.id)] = p.id;
        g.nodes.push_back(std::move(p));
    }

    for (const auto& [a, b] : control_dependencies(cfg)) {
        const int src = id_of[static_cast<std::size_t>(a)];
        const int dst = id_of[static_cast<std::size_t>(b)];
        if (src >= 0 && dst >= 0) g.edges.push_back({src, dst, EdgeKind::Control});
    }
    for (const auto& d : data_dependencies(cfg)) {
        if (d.src == d.dst) continue; // only loop predicates may carry self-loops
        const int src = id_of[static_cast<std::size_t>(d.src)];
        const int dst = id_of[static_cast<std::size_t>(d.dst)];
        if (src >= 0 && dst >= 0) g.edges.push_back({src, dst, EdgeKind::Data});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

} // namespace cssg
