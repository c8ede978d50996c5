#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cssg/pdg.hpp"

namespace cssg {

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Immediate dominators of `root` over `succ` (Cooper, Harvey, Kennedy).
// Unreachable nodes get -1; the root is its own dominator.
std::vector<int> immediate_dominators(const Adjacency& succ, int root) {
    const std::size_t n = succ.size();
    std::vector<int> order;
    std::vector<int> rpo_index(n, -1);
    {
        std::vector<bool> seen(n, false);
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        seen[static_cast<std::size_t>(root)] = true;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& out = succ[static_cast<std::size_t>(v)];
            if (next < out.size()) {
                const int w = out[next++];
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::reverse(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) rpo_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    Adjacency pred(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (int w : succ[v]) pred[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
    }

    std::vector<int> idom(n, -1);
    idom[static_cast<std::size_t>(root)] = root;
    auto intersect = [&](int a, int b) {
        while (a != b) {
            while (rpo_index[static_cast<std::size_t>(a)] > rpo_index[static_cast<std::size_t>(b)]) {
                a = idom[static_cast<std::size_t>(a)];
            }
            while (rpo_index[static_cast<std::size_t>(b)] > rpo_index[static_cast<std::size_t>(a)]) {
                b = idom[static_cast<std::size_t>(b)];
            }
        }
        return a;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int v : order) {
            if (v == root) continue;
            int candidate = -1;
            for (int p : pred[static_cast<std::size_t>(v)]) {
                if (idom[static_cast<std::size_t>(p)] < 0) continue;
                candidate = candidate < 0 ? p : intersect(p, candidate);
            }
            if (candidate >= 0 && idom[static_cast<std::size_t>(v)] != candidate) {
                idom[static_cast<std::size_t>(v)] = candidate;
                changed = true;
            }
        }
    }
    return idom;
}

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    // this |= other; returns true when anything changed.
    bool merge(const Bitset& other) {
        bool changed = false;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const uint64_t next = words_[i] | other.words_[i];
            changed |= next != words_[i];
            words_[i] = next;
        }
        return changed;
    }

    void subtract(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::vector<uint64_t> words_;
};

} // namespace

std::set<std::pair<int, int>> control_dependencies(const Cfg& cfg) {
    const std::size_t n = cfg.nodes.size();
    Adjacency succ(n);
    Adjacency reverse(n);
    auto add = [&](int a, int b) {
        auto& out = succ[static_cast<std::size_t>(a)];
        if (std::find(out.begin(), out.end(), b) != out.end()) return;
        out.push_back(b);
        reverse[static_cast<std::size_t>(b)].push_back(a);
    };
    for (const auto& e : cfg.edges) add(e.src, e.dst);
    add(cfg.entry, cfg.exit);

    const std::vector<int> ipdom = immediate_dominators(reverse, cfg.exit);
    std::set<std::pair<int, int>> deps;
    for (std::size_t a = 0; a < n; ++a) {
        const int stop = ipdom[a];
        if (stop < 0) continue;
        for (int b : succ[a]) {
            // Walk the post-dominator tree from b up to (excluding) ipdom(a).
            for (int v = b; v >= 0 && v != stop; v = ipdom[static_cast<std::size_t>(v)]) {
                deps.emplace(static_cast<int>(a), v);
                if (v == cfg.exit) break;
            }
        }
    }
    return deps;
}

std::set<DataDependence> data_dependencies(const Cfg& cfg) {
    const std::size_t n = cfg.nodes.size();
    struct Definition {
        int node;
        const std::string* var;
    };
    std::vector<Definition> defs;
    std::map<std::string, std::vector<std::size_t>> defs_of;
    for (const auto& node : cfg.nodes) {
        for (const auto& v : node.defs) {
            defs_of[v].push_back(defs.size());
            defs.push_back({node.id, &v});
        }
    }

    std::vector<Bitset> gen(n, Bitset(defs.size()));
    std::vector<Bitset> kill(n, Bitset(defs.size()));
    for (std::size_t d = 0; d < defs.size(); ++d) {
        const auto node = static_cast<std::size_t>(defs[d].node);
        gen[node].set(d);
        for (std::size_t other : defs_of[*defs[d].var]) kill[node].set(other);
    }

    Adjacency pred(n);
    for (const auto& e : cfg.edges) pred[static_cast<std::size_t>(e.dst)].push_back(e.src);

    std::vector<Bitset> in(n, Bitset(defs.size()));
    std::vector<Bitset> out(n, Bitset(defs.size()));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            Bitset next_in(defs.size());
            for (int p : pred[v]) next_in.merge(out[static_cast<std::size_t>(p)]);
            Bitset next_out = next_in;
            next_out.subtract(kill[v]);
            next_out.merge(gen[v]);
            if (!(next_in == in[v]) || !(next_out == out[v])) {
                in[v] = std::move(next_in);
                out[v] = std::move(next_out);
                changed = true;
            }
        }
    }

    std::set<DataDependence> deps;
    for (const auto& node : cfg.nodes) {
        for (const auto& v : node.uses) {
            const auto it = defs_of.find(v);
            if (it == defs_of.end()) continue;
            for (std::size_t d : it->second) {
                if (in[static_cast<std::size_t>(node.id)].test(d)) deps.insert({defs[d].node, node.id, v});
            }
        }
    }
    return deps;
}

} // namespace cssg
