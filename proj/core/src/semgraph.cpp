#include "cssg/semgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cssg/errors.hpp"

namespace cssg {

namespace {

using json = nlohmann::json;

const NodeLabel kRootLabel{LabelCategory::Root, "ROOT"};

std::vector<std::vector<int>> adjacency(const SemanticGraph& g, bool ignore_self_loops) {
    std::vector<std::vector<int>> out(g.nodes.size());
    for (const auto& e : g.edges) {
        if (ignore_self_loops && e.src == e.dst) continue;
        out[static_cast<std::size_t>(e.src)].push_back(e.dst);
    }
    return out;
}

bool reaches(const std::vector<std::vector<int>>& adj, int from, int to) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string_view edge_color(EdgeKind kind) {
    switch (kind) {
    case EdgeKind::Data: return "blue";
    case EdgeKind::Control: return "orange";
    case EdgeKind::Call: return "red";
    case EdgeKind::Root: return "gray";
    }
    return "black";
}

std::string to_json(const SemanticGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        nodes.push_back({{"id", n.id},
                         {"category", std::string(to_string(n.label.category))},
                         {"detail", n.label.detail},
                         {"fn", n.function}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"src", e.src}, {"dst", e.dst}, {"kind", std::string(to_string(e.kind))}});
    }
    json doc = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
}

std::string to_dot(const SemanticGraph& g) {
    std::ostringstream out;
    out << "digraph semantic_graph {\n  node [shape=box, fontname=\"monospace\"];\n";
    std::map<std::string, std::vector<int>> by_function;
    for (const auto& n : g.nodes) {
        if (n.id != g.root) by_function[n.function].push_back(n.id);
    }
    out << "  n" << g.root << " [label=\"ROOT\", shape=doublecircle];\n";
    int cluster = 0;
    for (const auto& [fn, ids] : by_function) {
        out << "  subgraph cluster_" << cluster++ << " {\n    label=\"" << dot_escape(fn) << "\";\n";
        for (int id : ids) {
            const auto& n = g.nodes[static_cast<std::size_t>(id)];
            std::string label = n.label.detail;
            if (!n.callee.empty()) label += " " + n.callee;
            out << "    n" << id << " [label=\"" << dot_escape(label) << "\", category=\""
                << to_string(n.label.category) << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& e : g.edges) {
        out << "  n" << e.src << " -> n" << e.dst << " [kind=" << to_string(e.kind) << ", color=" << edge_color(e.kind)
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

// Locates the function `callee` refers to; -1 when it is external.
int resolve_call(const std::map<std::string, int>& entry_of, const std::string& callee, int argc, bool exact) {
    if (auto it = entry_of.find(callee); it != entry_of.end()) return it->second;
    if (exact) return -1;
    if (auto it = entry_of.find(callee + "/" + std::to_string(argc)); it != entry_of.end()) return it->second;
    return -1;
}

} // namespace

std::vector<int> SemanticGraph::entries() const {
    std::vector<int> out;
    for (const auto& n : nodes) {
        if (n.label.category == LabelCategory::FunctionName) out.push_back(n.id);
    }
    return out;
}

std::vector<CallEdge> call_edges(const SemanticGraph& g) {
    std::vector<CallEdge> out;
    for (const auto& e : g.edges) {
        if (e.kind == EdgeKind::Call) out.push_back({e.src, e.dst, g.nodes[static_cast<std::size_t>(e.dst)].label.detail});
    }
    return out;
}

SemanticGraph integrate(std::vector<FunctionGraph> graphs) {
    std::sort(graphs.begin(), graphs.end(),
              [](const FunctionGraph& a, const FunctionGraph& b) { return a.function_name < b.function_name; });

    SemanticGraph g;
    g.nodes.push_back({0, kRootLabel, "", Span{}, "", 0, false});
    g.root = 0;

    std::map<std::string, int> entry_of;
    std::vector<std::vector<int>> id_maps;
    for (const auto& fg : graphs) {
        std::vector<int> order(fg.nodes.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& na = fg.nodes[static_cast<std::size_t>(a)];
            const auto& nb = fg.nodes[static_cast<std::size_t>(b)];
            if (a == fg.entry || b == fg.entry) return a == fg.entry && b != fg.entry;
            if (na.span.start != nb.span.start) return na.span.start < nb.span.start;
            return a < b;
        });
        std::vector<int> id_map(fg.nodes.size(), -1);
        for (int local : order) {
            const auto& n = fg.nodes[static_cast<std::size_t>(local)];
            const int id = static_cast<int>(g.nodes.size());
            id_map[static_cast<std::size_t>(local)] = id;
            g.nodes.push_back({id, n.label, fg.function_name, n.span, n.callee, n.call_args, n.callee_exact});
        }
        entry_of.emplace(fg.function_name, id_map[static_cast<std::size_t>(fg.entry)]);
        id_maps.push_back(std::move(id_map));
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& fg = graphs[i];
        const auto& id_map = id_maps[i];
        g.edges.push_back({g.root, id_map[static_cast<std::size_t>(fg.entry)], EdgeKind::Root});
        for (const auto& e : fg.edges) {
            g.edges.push_back({id_map[static_cast<std::size_t>(e.src)], id_map[static_cast<std::size_t>(e.dst)], e.kind});
        }
        for (const auto& n : fg.nodes) {
            if (!n.is_call_site()) continue;
            const int target = resolve_call(entry_of, n.callee, n.call_args, n.callee_exact);
            if (target >= 0) g.edges.push_back({id_map[static_cast<std::size_t>(n.id)], target, EdgeKind::Call});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

SemanticGraph build_semantic_graph(const SourceUnit& unit) {
    const AstNode ast = parse(unit);
    std::vector<FunctionGraph> graphs;
    for (const auto& f : extract_functions(ast, unit.language)) graphs.push_back(build_function_graph(f));
    return integrate(std::move(graphs));
}

std::string serialize(const SemanticGraph& g, GraphFormat format) {
    return format == GraphFormat::Json ? to_json(g) : to_dot(g);
}

SemanticGraph deserialize_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw GraphFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") || !doc["nodes"].is_array() ||
        !doc["edges"].is_array()) {
        throw GraphFormatError("expected an object with \"nodes\" and \"edges\" arrays");
    }

    SemanticGraph g;
    std::map<long long, int> index_of;
    int roots = 0;
    try {
        for (const auto& jn : doc["nodes"]) {
            const long long raw_id = jn.at("id").get<long long>();
            const auto category = label_category_from_string(jn.at("category").get<std::string>());
            if (!category) throw GraphFormatError("unknown node category in node " + std::to_string(raw_id));
            SemanticNode n;
            n.id = static_cast<int>(g.nodes.size());
            n.label = {*category, jn.at("detail").get<std::string>()};
            n.function = jn.value("fn", std::string());
            if (!index_of.emplace(raw_id, n.id).second) {
                throw GraphFormatError("duplicate node id " + std::to_string(raw_id));
            }
            if (n.label.category == LabelCategory::Root) {
                ++roots;
                g.root = n.id;
            }
            g.nodes.push_back(std::move(n));
        }
        for (const auto& je : doc["edges"]) {
            const auto src = index_of.find(je.at("src").get<long long>());
            const auto dst = index_of.find(je.at("dst").get<long long>());
            if (src == index_of.end() || dst == index_of.end()) throw GraphFormatError("edge references unknown node");
            const auto kind = edge_kind_from_string(je.at("kind").get<std::string>());
            if (!kind) throw GraphFormatError("unknown edge kind");
            g.edges.push_back({src->second, dst->second, *kind});
        }
    } catch (const json::exception& e) {
        throw GraphFormatError(std::string("malformed graph: ") + e.what());
    }
    if (roots != 1) throw GraphFormatError("graph must have exactly one root node");
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    if (const auto problems = validate(g); !problems.empty()) throw GraphFormatError(problems.front());
    return g;
}

std::vector<std::string> validate(const SemanticGraph& g) {
    std::vector<std::string> problems;
    const auto n = static_cast<int>(g.nodes.size());
    if (g.root < 0 || g.root >= n || g.nodes[static_cast<std::size_t>(g.root)].label.category != LabelCategory::Root) {
        problems.emplace_back("root index does not name a root node");
        return problems;
    }
    int roots = 0;
    for (int i = 0; i < n; ++i) {
        const auto& node = g.nodes[static_cast<std::size_t>(i)];
        if (node.id != i) problems.push_back("node " + std::to_string(i) + " has id " + std::to_string(node.id));
        if (node.label.category == LabelCategory::Root) ++roots;
    }
    if (roots != 1) problems.emplace_back("expected exactly one root node");

    std::set<int> entries_with_root_edge;
    for (const auto& e : g.edges) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
            problems.emplace_back("edge references a missing node");
            continue;
        }
        const auto& dst = g.nodes[static_cast<std::size_t>(e.dst)];
        if (e.dst == g.root) problems.emplace_back("root has an incoming edge");
        if (e.kind == EdgeKind::Root) {
            if (e.src != g.root || dst.label.category != LabelCategory::FunctionName) {
                problems.emplace_back("root edge must go from the root to a function entry");
            } else {
                entries_with_root_edge.insert(e.dst);
            }
        }
        if (e.kind == EdgeKind::Call && dst.label.category != LabelCategory::FunctionName) {
            problems.emplace_back("call edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                                  " does not end at a function entry");
        }
        if (e.kind == EdgeKind::Data && e.src == e.dst) {
            problems.emplace_back("data self-loop on node " + std::to_string(e.src));
        }
        if (e.kind != EdgeKind::Root && e.src == g.root) problems.emplace_back("non-root edge leaves the root");
    }
    for (int entry : g.entries()) {
        if (!entries_with_root_edge.count(entry)) {
            problems.push_back("function entry " + std::to_string(entry) + " has no root edge");
        }
    }
    return problems;
}

bool has_cycle(const SemanticGraph& g, bool ignore_self_loops) {
    const auto adj = adjacency(g, ignore_self_loops);
    // Iterative three-colour DFS.
    std::vector<uint8_t> colour(g.nodes.size(), 0);
    for (std::size_t start = 0; start < g.nodes.size(); ++start) {
        if (colour[start] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(start), 0}};
        colour[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& out = adj[static_cast<std::size_t>(v)];
            if (next < out.size()) {
                const int w = out[next++];
                if (colour[static_cast<std::size_t>(w)] == 1) return true;
                if (colour[static_cast<std::size_t>(w)] == 0) {
                    colour[static_cast<std::size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                colour[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

bool has_call_cycle(const SemanticGraph& g) {
    const auto adj = adjacency(g, false);
    for (const auto& e : g.edges) {
        if (e.kind == EdgeKind::Call && reaches(adj, e.dst, e.src)) return true;
    }
    return false;
}

} // namespace cssg
