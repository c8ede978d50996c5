#include "cssg/ged.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>

#include "assignment.hpp"
#include "cssg/errors.hpp"

namespace cssg {

namespace {

using detail::kForbidden;

uint8_t bit(EdgeKind kind) { return static_cast<uint8_t>(1U << static_cast<unsigned>(kind)); }
constexpr std::array<int, 16> kBits{0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4};
int popcount(uint8_t mask) { return kBits[mask & 0xFU]; }

using Neighbours = std::vector<std::pair<int, uint8_t>>; // (node, kind mask), sorted by node

/// Adjacency of one graph with label classes shared between both graphs of a pair.
struct GraphIndex {
    int n = 0;
    int root = 0;
    long long edges = 0;
    std::vector<int> cls;
    std::vector<Neighbours> out; // includes self-loops
    std::vector<Neighbours> in;  // excludes self-loops
    std::vector<uint8_t> self;

    uint8_t mask(int a, int b) const {
        if (a == b) return self[static_cast<std::size_t>(a)];
        const auto& list = out[static_cast<std::size_t>(a)];
        const auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, uint8_t>{b, 0},
                                         [](const auto& x, const auto& y) { return x.first < y.first; });
        return it != list.end() && it->first == b ? it->second : 0;
    }
};

struct IndexedPair {
    GraphIndex g1;
    GraphIndex g2;
    int classes = 0;
};

GraphIndex index_graph(const SemanticGraph& g, std::map<NodeLabel, int>& classes) {
    GraphIndex idx;
    idx.n = static_cast<int>(g.nodes.size());
    idx.root = g.root;
    idx.cls.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto [it, inserted] = classes.emplace(g.nodes[i].label, static_cast<int>(classes.size()));
        idx.cls[i] = it->second;
    }
    std::map<std::pair<int, int>, uint8_t> masks;
    for (const auto& e : g.edges) {
        if (e.src < 0 || e.dst < 0 || e.src >= idx.n || e.dst >= idx.n) {
            throw std::invalid_argument("edge references a missing node");
        }
        uint8_t& m = masks[{e.src, e.dst}];
        if ((m & bit(e.kind)) == 0) ++idx.edges;
        m |= bit(e.kind);
    }
    idx.out.assign(g.nodes.size(), {});
    idx.in.assign(g.nodes.size(), {});
    idx.self.assign(g.nodes.size(), 0);
    for (const auto& [ends, m] : masks) {
        idx.out[static_cast<std::size_t>(ends.first)].emplace_back(ends.second, m);
        if (ends.first == ends.second) {
            idx.self[static_cast<std::size_t>(ends.first)] = m;
        } else {
            idx.in[static_cast<std::size_t>(ends.second)].emplace_back(ends.first, m);
        }
    }
    for (auto& list : idx.in) std::sort(list.begin(), list.end());
    return idx;
}

IndexedPair index_pair(const SemanticGraph& g1, const SemanticGraph& g2) {
    std::map<NodeLabel, int> classes;
    IndexedPair p;
    p.g1 = index_graph(g1, classes);
    p.g2 = index_graph(g2, classes);
    p.classes = static_cast<int>(classes.size());
    return p;
}

void check_mapping(const SemanticGraph& g1, const SemanticGraph& g2, const std::vector<int>& mapping) {
    if (mapping.size() != g1.nodes.size()) throw std::invalid_argument("mapping size differs from |N1|");
    std::vector<bool> used(g2.nodes.size(), false);
    for (std::size_t u = 0; u < mapping.size(); ++u) {
        const int x = mapping[u];
        if (x < 0) continue;
        if (x >= static_cast<int>(g2.nodes.size())) throw std::invalid_argument("mapping image out of range");
        if (used[static_cast<std::size_t>(x)]) throw std::invalid_argument("mapping is not injective");
        used[static_cast<std::size_t>(x)] = true;
        if (!compatible(g1.nodes[u], g2.nodes[static_cast<std::size_t>(x)])) {
            throw std::invalid_argument("mapping pairs incompatible nodes");
        }
    }
    if (mapping[static_cast<std::size_t>(g1.root)] != g2.root) throw std::invalid_argument("roots must correspond");
}

// Number of g1 edges (counted per kind) preserved by `f`.
long long preserved_edges(const IndexedPair& p, const std::vector<int>& f) {
    long long preserved = 0;
    for (int a = 0; a < p.g1.n; ++a) {
        const int fa = f[static_cast<std::size_t>(a)];
        if (fa < 0) continue;
        for (const auto& [b, m] : p.g1.out[static_cast<std::size_t>(a)]) {
            const int fb = f[static_cast<std::size_t>(b)];
            if (fb >= 0) preserved += popcount(m & p.g2.mask(fa, fb));
        }
    }
    return preserved;
}

long long cost_of(const IndexedPair& p, const std::vector<int>& f) {
    long long mapped = 0;
    for (int x : f) mapped += x >= 0 ? 1 : 0;
    return p.g1.n + p.g2.n - 2 * mapped + p.g1.edges + p.g2.edges - 2 * preserved_edges(p, f);
}

// ---------------------------------------------------------------------------
// Assignment-based approximation

// Multiset of (direction, kind, neighbour class) codes around a node.
std::vector<int> neighbourhood(const GraphIndex& g, int classes, int v) {
    std::vector<int> sig;
    auto push = [&](int dir, uint8_t m, int other) {
        for (unsigned k = 0; k < 4; ++k) {
            if (m & (1U << k)) sig.push_back((dir * 4 + static_cast<int>(k)) * classes + g.cls[static_cast<std::size_t>(other)]);
        }
    };
    for (const auto& [w, m] : g.out[static_cast<std::size_t>(v)]) push(w == v ? 2 : 0, m, w);
    for (const auto& [w, m] : g.in[static_cast<std::size_t>(v)]) push(1, m, w);
    std::sort(sig.begin(), sig.end());
    return sig;
}

int multiset_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    int common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<int>(a.size() + b.size()) - 2 * common;
}

std::vector<std::vector<int>> members_by_class(const GraphIndex& g, int classes) {
    std::vector<std::vector<int>> by(static_cast<std::size_t>(classes));
    for (int v = 0; v < g.n; ++v) by[static_cast<std::size_t>(g.cls[static_cast<std::size_t>(v)])].push_back(v);
    return by;
}

std::vector<int> assignment_mapping(const IndexedPair& p) {
    const auto rows_by = members_by_class(p.g1, p.classes);
    const auto cols_by = members_by_class(p.g2, p.classes);
    std::vector<std::vector<int>> sig1(static_cast<std::size_t>(p.g1.n));
    std::vector<std::vector<int>> sig2(static_cast<std::size_t>(p.g2.n));
    for (int v = 0; v < p.g1.n; ++v) sig1[static_cast<std::size_t>(v)] = neighbourhood(p.g1, p.classes, v);
    for (int v = 0; v < p.g2.n; ++v) sig2[static_cast<std::size_t>(v)] = neighbourhood(p.g2, p.classes, v);

    std::vector<int> f(static_cast<std::size_t>(p.g1.n), -1);
    for (int c = 0; c < p.classes; ++c) {
        const auto& rows = rows_by[static_cast<std::size_t>(c)];
        const auto& cols = cols_by[static_cast<std::size_t>(c)];
        if (rows.empty() || cols.empty()) continue;
        const std::size_t r = rows.size();
        const std::size_t k = cols.size();
        const std::size_t n = r + k;
        std::vector<std::vector<int64_t>> cost(n, std::vector<int64_t>(n, kForbidden));
        for (std::size_t i = 0; i < r; ++i) {
            const int u = rows[i];
            const auto& su = sig1[static_cast<std::size_t>(u)];
            for (std::size_t j = 0; j < k; ++j) {
                cost[i][j] = multiset_difference(su, sig2[static_cast<std::size_t>(cols[j])]);
            }
            cost[i][k + i] = u == p.g1.root ? kForbidden : 1 + static_cast<int64_t>(su.size());
        }
        for (std::size_t j = 0; j < k; ++j) {
            const int x = cols[j];
            cost[r + j][j] = x == p.g2.root ? kForbidden : 1 + static_cast<int64_t>(sig2[static_cast<std::size_t>(x)].size());
            for (std::size_t i = 0; i < r; ++i) cost[r + j][k + i] = 0;
        }
        const auto assigned = detail::solve_assignment(cost);
        for (std::size_t i = 0; i < r; ++i) {
            const auto j = static_cast<std::size_t>(assigned[i]);
            if (j < k) f[static_cast<std::size_t>(rows[i])] = cols[j];
        }
    }
    f[static_cast<std::size_t>(p.g1.root)] = p.g2.root;
    return f;
}

// Preserved edges with at least one endpoint among `nodes`, each counted once.
long long local_preserved(const IndexedPair& p, const std::vector<int>& f, std::initializer_list<int> nodes) {
    auto in_set = [&](int v) { return std::find(nodes.begin(), nodes.end(), v) != nodes.end(); };
    long long count = 0;
    for (int s : nodes) {
        if (s < 0) continue;
        const int fs = f[static_cast<std::size_t>(s)];
        if (fs < 0) continue;
        for (const auto& [b, m] : p.g1.out[static_cast<std::size_t>(s)]) {
            const int fb = f[static_cast<std::size_t>(b)];
            if (fb >= 0) count += popcount(m & p.g2.mask(fs, fb));
        }
        for (const auto& [a, m] : p.g1.in[static_cast<std::size_t>(s)]) {
            if (in_set(a)) continue;
            const int fa = f[static_cast<std::size_t>(a)];
            if (fa >= 0) count += popcount(m & p.g2.mask(fa, fs));
        }
    }
    return count;
}

// Hill climbing over single re-assignments and swaps until no move lowers the cost.
void refine(const IndexedPair& p, std::vector<int>& f) {
    std::vector<int> inv(static_cast<std::size_t>(p.g2.n), -1);
    for (int u = 0; u < p.g1.n; ++u) {
        if (f[static_cast<std::size_t>(u)] >= 0) inv[static_cast<std::size_t>(f[static_cast<std::size_t>(u)])] = u;
    }
    const auto cols_by = members_by_class(p.g2, p.classes);

    // Gain = mapped nodes + preserved edges; the cost falls by twice the gain.
    auto local_gain = [&](int u, int v) {
        long long mapped = (f[static_cast<std::size_t>(u)] >= 0 ? 1 : 0) + (v >= 0 && f[static_cast<std::size_t>(v)] >= 0 ? 1 : 0);
        return mapped + (v >= 0 ? local_preserved(p, f, {u, v}) : local_preserved(p, f, {u}));
    };

    // Tries the moves of one node; applies the first improving one.
    auto improve = [&](int u) {
        const int cur = f[static_cast<std::size_t>(u)];
        for (int x : cols_by[static_cast<std::size_t>(p.g1.cls[static_cast<std::size_t>(u)])]) {
            if (x == cur) continue;
            const int v = inv[static_cast<std::size_t>(x)]; // current owner of x, if any
            const long long before = local_gain(u, v);
            f[static_cast<std::size_t>(u)] = x;
            if (v >= 0) f[static_cast<std::size_t>(v)] = cur;
            if (local_gain(u, v) > before) {
                inv[static_cast<std::size_t>(x)] = u;
                if (cur >= 0) inv[static_cast<std::size_t>(cur)] = v;
                return true;
            }
            f[static_cast<std::size_t>(u)] = cur;
            if (v >= 0) f[static_cast<std::size_t>(v)] = x;
        }
        if (cur >= 0) {
            const long long before = local_gain(u, -1);
            f[static_cast<std::size_t>(u)] = -1;
            if (local_gain(u, -1) > before) {
                inv[static_cast<std::size_t>(cur)] = -1;
                return true;
            }
            f[static_cast<std::size_t>(u)] = cur;
        }
        return false;
    };

    for (bool improved = true; improved;) {
        improved = false;
        for (int u = 0; u < p.g1.n; ++u) {
            if (u != p.g1.root && improve(u)) improved = true;
        }
    }
}

std::vector<int> approx_mapping(const IndexedPair& p) {
    std::vector<int> f = assignment_mapping(p);
    refine(p, f);
    return f;
}

IndexedPair swapped(const IndexedPair& p) { return {p.g2, p.g1, p.classes}; }

std::vector<int> invert(const std::vector<int>& f, int n_target) {
    std::vector<int> inv(static_cast<std::size_t>(n_target), -1);
    for (std::size_t u = 0; u < f.size(); ++u) {
        if (f[u] >= 0) inv[static_cast<std::size_t>(f[u])] = static_cast<int>(u);
    }
    return inv;
}

// Better of both directions, expressed as a g1 -> g2 mapping.
std::vector<int> best_approx_mapping(const IndexedPair& p) {
    std::vector<int> forward = approx_mapping(p);
    const std::vector<int> backward = invert(approx_mapping(swapped(p)), p.g1.n);
    return cost_of(p, backward) < cost_of(p, forward) ? backward : forward;
}

// ---------------------------------------------------------------------------
// Branch and bound

class BranchAndBound {
public:
    BranchAndBound(const IndexedPair& p, std::size_t expansion_limit) : p_(p), limit_(expansion_limit) {
        order_nodes();
        members1_ = members_by_class(p_.g1, p_.classes);
        members2_ = members_by_class(p_.g2, p_.classes);
        f_.assign(static_cast<std::size_t>(p_.g1.n), kUndecided);
        inv_.assign(static_cast<std::size_t>(p_.g2.n), -1);
        rem1_.assign(static_cast<std::size_t>(p_.classes), 0);
        avail2_.assign(static_cast<std::size_t>(p_.classes), 0);
        for (int u = 0; u < p_.g1.n; ++u) ++rem1_[static_cast<std::size_t>(p_.g1.cls[static_cast<std::size_t>(u)])];
        for (int x = 0; x < p_.g2.n; ++x) ++avail2_[static_cast<std::size_t>(p_.g2.cls[static_cast<std::size_t>(x)])];

        // g1 edges still open before deciding position i, per kind.
        open1_.assign(order_.size() + 1, {0, 0, 0, 0});
        for (int a = 0; a < p_.g1.n; ++a) {
            for (const auto& [b, m] : p_.g1.out[static_cast<std::size_t>(a)]) {
                const int last = std::max(pos_[static_cast<std::size_t>(a)], pos_[static_cast<std::size_t>(b)]);
                for (unsigned k = 0; k < 4; ++k) {
                    if (m & (1U << k)) {
                        for (int i = 0; i <= last; ++i) ++open1_[static_cast<std::size_t>(i)][k];
                    }
                }
            }
        }
        open2_ = {0, 0, 0, 0};
        for (int x = 0; x < p_.g2.n; ++x) {
            for (const auto& [y, m] : p_.g2.out[static_cast<std::size_t>(x)]) {
                for (unsigned k = 0; k < 4; ++k) open2_[k] += (m >> k) & 1U;
            }
        }
    }

    std::vector<int> solve(std::vector<int> incumbent) {
        best_ = std::move(incumbent);
        best_cost_ = cost_of(p_, best_);
        class_bound_.assign(static_cast<std::size_t>(p_.classes), 0);
        for (int c = 0; c < p_.classes; ++c) class_total_ += class_bound_[static_cast<std::size_t>(c)] = class_bound(c);
        root_bound_ = std::max(simple_bound(0), assignment_bound());
        if (best_cost_ > root_bound_) search(0, 0);
        return best_;
    }

    /// True when the search stopped at the expansion limit before proving optimality.
    bool truncated() const { return truncated_; }

private:
    static constexpr int kUndecided = -2;

    bool decided(int v) const { return f_[static_cast<std::size_t>(v)] != kUndecided; }

    void order_nodes() {
        const int n = p_.g1.n;
        std::vector<int> g2_class_size(static_cast<std::size_t>(p_.classes), 0);
        for (int x = 0; x < p_.g2.n; ++x) ++g2_class_size[static_cast<std::size_t>(p_.g2.cls[static_cast<std::size_t>(x)])];
        std::vector<int> links(static_cast<std::size_t>(n), 0);
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        pos_.assign(static_cast<std::size_t>(n), -1);
        auto place = [&](int v) {
            pos_[static_cast<std::size_t>(v)] = static_cast<int>(order_.size());
            order_.push_back(v);
            placed[static_cast<std::size_t>(v)] = true;
            for (const auto& [w, m] : p_.g1.out[static_cast<std::size_t>(v)]) links[static_cast<std::size_t>(w)] += popcount(m);
            for (const auto& [w, m] : p_.g1.in[static_cast<std::size_t>(v)]) links[static_cast<std::size_t>(w)] += popcount(m);
        };
        place(p_.g1.root);
        while (static_cast<int>(order_.size()) < n) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (pick < 0) {
                    pick = v;
                    continue;
                }
                const auto lv = links[static_cast<std::size_t>(v)];
                const auto lp = links[static_cast<std::size_t>(pick)];
                const auto cv = g2_class_size[static_cast<std::size_t>(p_.g1.cls[static_cast<std::size_t>(v)])];
                const auto cp = g2_class_size[static_cast<std::size_t>(p_.g1.cls[static_cast<std::size_t>(pick)])];
                if (lv > lp || (lv == lp && cv < cp)) pick = v;
            }
            place(pick);
        }
    }

    // Cost of the edges between `u` and decided nodes if `u` maps to `x` (or is deleted when x < 0).
    long long anchored_delta(int u, int x) const {
        long long g1_edges = 0;
        long long g2_edges = 0;
        long long kept = 0;
        const auto self1 = p_.g1.self[static_cast<std::size_t>(u)];
        g1_edges += popcount(self1);
        if (x >= 0) {
            const auto self2 = p_.g2.self[static_cast<std::size_t>(x)];
            g2_edges += popcount(self2);
            kept += popcount(self1 & self2);
        }
        for (const auto& [b, m] : p_.g1.out[static_cast<std::size_t>(u)]) {
            if (b == u || !decided(b)) continue;
            g1_edges += popcount(m);
            const int fb = f_[static_cast<std::size_t>(b)];
            if (x >= 0 && fb >= 0) kept += popcount(m & p_.g2.mask(x, fb));
        }
        for (const auto& [a, m] : p_.g1.in[static_cast<std::size_t>(u)]) {
            if (!decided(a)) continue;
            g1_edges += popcount(m);
            const int fa = f_[static_cast<std::size_t>(a)];
            if (x >= 0 && fa >= 0) kept += popcount(m & p_.g2.mask(fa, x));
        }
        if (x >= 0) {
            for (const auto& [y, m] : p_.g2.out[static_cast<std::size_t>(x)]) {
                if (y != x && inv_[static_cast<std::size_t>(y)] >= 0) g2_edges += popcount(m);
            }
            for (const auto& [y, m] : p_.g2.in[static_cast<std::size_t>(x)]) {
                if (inv_[static_cast<std::size_t>(y)] >= 0) g2_edges += popcount(m);
            }
        }
        return g1_edges + g2_edges - 2 * kept;
    }

    // Edges of g2 that stop being open once `x` becomes an image, per kind.
    std::array<long long, 4> closing(int x) const {
        std::array<long long, 4> closed{0, 0, 0, 0};
        auto add = [&](uint8_t m) {
            for (unsigned k = 0; k < 4; ++k) closed[k] += (m >> k) & 1U;
        };
        for (const auto& [y, m] : p_.g2.out[static_cast<std::size_t>(x)]) {
            if (y == x || inv_[static_cast<std::size_t>(y)] >= 0) add(m);
        }
        for (const auto& [y, m] : p_.g2.in[static_cast<std::size_t>(x)]) {
            if (inv_[static_cast<std::size_t>(y)] >= 0) add(m);
        }
        return closed;
    }

    long long simple_bound(int depth) const {
        long long lb = 0;
        for (int c = 0; c < p_.classes; ++c) {
            lb += std::abs(static_cast<long long>(rem1_[static_cast<std::size_t>(c)]) - avail2_[static_cast<std::size_t>(c)]);
        }
        for (unsigned k = 0; k < 4; ++k) lb += std::abs(open1_[static_cast<std::size_t>(depth)][k] - open2_[k]);
        return lb;
    }

    // Signatures of edges between `v` and other undecided (free) nodes.
    std::vector<int> free_signature(const GraphIndex& g, int v, bool first) const {
        auto is_free = [&](int w) { return first ? !decided(w) : inv_[static_cast<std::size_t>(w)] < 0; };
        std::vector<int> sig;
        auto push = [&](int dir, uint8_t m, int other) {
            for (unsigned k = 0; k < 4; ++k) {
                if (m & (1U << k)) sig.push_back((dir * 4 + static_cast<int>(k)) * p_.classes + g.cls[static_cast<std::size_t>(other)]);
            }
        };
        for (const auto& [w, m] : g.out[static_cast<std::size_t>(v)]) {
            if (w != v && is_free(w)) push(0, m, w);
        }
        for (const auto& [w, m] : g.in[static_cast<std::size_t>(v)]) {
            if (is_free(w)) push(1, m, w);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    }

    long long anchored_count2(int x) const {
        long long count = popcount(p_.g2.self[static_cast<std::size_t>(x)]);
        for (const auto& [y, m] : p_.g2.out[static_cast<std::size_t>(x)]) {
            if (y != x && inv_[static_cast<std::size_t>(y)] >= 0) count += popcount(m);
        }
        for (const auto& [y, m] : p_.g2.in[static_cast<std::size_t>(x)]) {
            if (inv_[static_cast<std::size_t>(y)] >= 0) count += popcount(m);
        }
        return count;
    }

    // Doubled assignment bound of one label class over the undecided nodes:
    // exact cost of edges towards decided nodes plus the mismatch of edges
    // among undecided ones (each such edge is seen from both ends).
    long long class_bound(int c) const {
        std::vector<int> r;
        std::vector<int> k;
        for (int u : members1_[static_cast<std::size_t>(c)]) {
            if (!decided(u)) r.push_back(u);
        }
        for (int x : members2_[static_cast<std::size_t>(c)]) {
            if (inv_[static_cast<std::size_t>(x)] < 0) k.push_back(x);
        }
        if (r.empty() && k.empty()) return 0;
        std::vector<std::vector<int>> sig1(r.size());
        std::vector<std::vector<int>> sig2(k.size());
        std::vector<int64_t> del(r.size());
        std::vector<int64_t> ins(k.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            sig1[i] = free_signature(p_.g1, r[i], true);
            del[i] = 2 * anchored_delta(r[i], -1) + 2 + static_cast<int64_t>(sig1[i].size());
        }
        for (std::size_t j = 0; j < k.size(); ++j) {
            sig2[j] = free_signature(p_.g2, k[j], false);
            ins[j] = 2 * anchored_count2(k[j]) + 2 + static_cast<int64_t>(sig2[j].size());
        }
        std::vector<int64_t> pair(r.size() * k.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            for (std::size_t j = 0; j < k.size(); ++j) {
                pair[i * k.size() + j] = 2 * anchored_delta(r[i], k[j]) + multiset_difference(sig1[i], sig2[j]);
            }
        }
        return detail::min_partial_matching(r.size(), k.size(), pair, del, ins);
    }

    // Classes whose bound can change when `u` is decided as `x`.
    std::vector<int> touched_classes(int u, int x) const {
        std::vector<int> out{p_.g1.cls[static_cast<std::size_t>(u)]};
        for (const auto& [w, m] : p_.g1.out[static_cast<std::size_t>(u)]) out.push_back(p_.g1.cls[static_cast<std::size_t>(w)]);
        for (const auto& [w, m] : p_.g1.in[static_cast<std::size_t>(u)]) out.push_back(p_.g1.cls[static_cast<std::size_t>(w)]);
        if (x >= 0) {
            for (const auto& [y, m] : p_.g2.out[static_cast<std::size_t>(x)]) out.push_back(p_.g2.cls[static_cast<std::size_t>(y)]);
            for (const auto& [y, m] : p_.g2.in[static_cast<std::size_t>(x)]) out.push_back(p_.g2.cls[static_cast<std::size_t>(y)]);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    long long assignment_bound() const { return (class_total_ + 1) / 2; }

    void map(int u, int x) {
        f_[static_cast<std::size_t>(u)] = x;
        --rem1_[static_cast<std::size_t>(p_.g1.cls[static_cast<std::size_t>(u)])];
        if (x >= 0) {
            const auto closed = closing(x);
            for (unsigned k = 0; k < 4; ++k) open2_[k] -= closed[k];
            inv_[static_cast<std::size_t>(x)] = u;
            --avail2_[static_cast<std::size_t>(p_.g2.cls[static_cast<std::size_t>(x)])];
        }
    }

    void unmap(int u) {
        const int x = f_[static_cast<std::size_t>(u)];
        f_[static_cast<std::size_t>(u)] = kUndecided;
        ++rem1_[static_cast<std::size_t>(p_.g1.cls[static_cast<std::size_t>(u)])];
        if (x >= 0) {
            inv_[static_cast<std::size_t>(x)] = -1;
            ++avail2_[static_cast<std::size_t>(p_.g2.cls[static_cast<std::size_t>(x)])];
            const auto closed = closing(x);
            for (unsigned k = 0; k < 4; ++k) open2_[k] += closed[k];
        }
    }

    void search(int depth, long long cost) {
        if (limit_ != 0 && ++expanded_ > limit_) {
            truncated_ = true;
            return;
        }
        if (depth == static_cast<int>(order_.size())) {
            long long total = cost;
            for (auto a : avail2_) total += a;
            for (auto e : open2_) total += e;
            if (total < best_cost_) {
                std::vector<int> found(f_);
                refine(p_, found);
                best_cost_ = cost_of(p_, found);
                best_ = std::move(found);
            }
            return;
        }

        // Children are bounded before descent and visited best-bound first.
        const int u = order_[static_cast<std::size_t>(depth)];
        const int cls = p_.g1.cls[static_cast<std::size_t>(u)];
        std::vector<std::pair<long long, int>> candidates;
        for (int x = 0; x < p_.g2.n; ++x) {
            if (inv_[static_cast<std::size_t>(x)] >= 0 || p_.g2.cls[static_cast<std::size_t>(x)] != cls) continue;
            if (u == p_.g1.root && x != p_.g2.root) continue;
            candidates.emplace_back(anchored_delta(u, x), x);
        }
        if (u != p_.g1.root) candidates.emplace_back(1 + anchored_delta(u, -1), -1);

        struct Child {
            long long bound;
            long long step;
            int image;
            std::vector<std::pair<int, long long>> classes; // class bounds after the decision
        };
        std::vector<Child> children;
        const bool last = depth + 1 == static_cast<int>(order_.size());
        for (const auto& [step, x] : candidates) {
            if (cost + step >= best_cost_) continue;
            map(u, x);
            long long bound = cost + step + simple_bound(depth + 1);
            Child child{bound, step, x, {}};
            if (bound < best_cost_ && !last) {
                long long total = class_total_;
                for (int c : touched_classes(u, x)) {
                    const long long value = class_bound(c);
                    total += value - class_bound_[static_cast<std::size_t>(c)];
                    child.classes.emplace_back(c, value);
                }
                child.bound = std::max(bound, cost + step + (total + 1) / 2);
            }
            unmap(u);
            if (child.bound < best_cost_) children.push_back(std::move(child));
        }
        std::stable_sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
            return a.bound < b.bound || (a.bound == b.bound && a.step < b.step);
        });
        for (auto& child : children) {
            if (child.bound >= best_cost_) break;
            map(u, child.image);
            for (auto& [c, value] : child.classes) {
                class_total_ += value - class_bound_[static_cast<std::size_t>(c)];
                std::swap(value, class_bound_[static_cast<std::size_t>(c)]);
            }
            search(depth + 1, cost + child.step);
            for (auto& [c, value] : child.classes) {
                class_total_ += value - class_bound_[static_cast<std::size_t>(c)];
                std::swap(value, class_bound_[static_cast<std::size_t>(c)]);
            }
            unmap(u);
            if (best_cost_ == root_bound_ || truncated_) return;
        }
    }

    const IndexedPair& p_;
    std::vector<int> order_;
    std::vector<int> pos_;
    std::vector<int> f_;
    std::vector<int> inv_;
    std::vector<int> rem1_;
    std::vector<int> avail2_;
    std::vector<std::array<long long, 4>> open1_;
    std::array<long long, 4> open2_{};
    std::vector<std::vector<int>> members1_;
    std::vector<std::vector<int>> members2_;
    std::vector<long long> class_bound_;
    long long class_total_ = 0;
    std::vector<int> best_;
    long long best_cost_ = 0;
    long long root_bound_ = 0;
    std::size_t limit_ = 0;
    std::size_t expanded_ = 0;
    bool truncated_ = false;
};

bool branch_on_first(const SemanticGraph& g1, const SemanticGraph& g2) {
    if (g1.nodes.size() != g2.nodes.size()) return g1.nodes.size() > g2.nodes.size();
    if (g1.edges.size() != g2.edges.size()) return g1.edges.size() > g2.edges.size();
    return serialize(g1, GraphFormat::Json) >= serialize(g2, GraphFormat::Json);
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

class Enumerator {
public:
    explicit Enumerator(const IndexedPair& p) : p_(p) {
        f_.assign(static_cast<std::size_t>(p_.g1.n), -1);
        used_.assign(static_cast<std::size_t>(p_.g2.n), false);
        f_[static_cast<std::size_t>(p_.g1.root)] = p_.g2.root;
        used_[static_cast<std::size_t>(p_.g2.root)] = true;
        best_ = cost_of(p_, f_);
    }

    long long run() {
        visit(0);
        return best_;
    }

private:
    void visit(int u) {
        if (u == p_.g1.n) {
            best_ = std::min(best_, cost_of(p_, f_));
            return;
        }
        if (u == p_.g1.root) {
            visit(u + 1);
            return;
        }
        f_[static_cast<std::size_t>(u)] = -1;
        visit(u + 1);
        for (int x = 0; x < p_.g2.n; ++x) {
            if (used_[static_cast<std::size_t>(x)]) continue;
            if (p_.g2.cls[static_cast<std::size_t>(x)] != p_.g1.cls[static_cast<std::size_t>(u)]) continue;
            used_[static_cast<std::size_t>(x)] = true;
            f_[static_cast<std::size_t>(u)] = x;
            visit(u + 1);
            used_[static_cast<std::size_t>(x)] = false;
        }
        f_[static_cast<std::size_t>(u)] = -1;
    }

    const IndexedPair& p_;
    std::vector<int> f_;
    std::vector<bool> used_;
    long long best_ = 0;
};

void require_roots(const SemanticGraph& g1, const SemanticGraph& g2) {
    auto ok = [](const SemanticGraph& g) {
        return g.root >= 0 && g.root < static_cast<int>(g.nodes.size()) &&
               g.nodes[static_cast<std::size_t>(g.root)].label.category == LabelCategory::Root;
    };
    if (!ok(g1) || !ok(g2)) throw std::invalid_argument("both graphs need a root node");
}

} // namespace

std::string_view to_string(EditKind kind) {
    switch (kind) {
    case EditKind::NodeInsert: return "node_insert";
    case EditKind::NodeDelete: return "node_delete";
    case EditKind::NodeSubstitute: return "node_substitute";
    case EditKind::EdgeInsert: return "edge_insert";
    case EditKind::EdgeDelete: return "edge_delete";
    case EditKind::EdgeSubstitute: return "edge_substitute";
    }
    return "node_insert";
}

std::string_view to_string(Solver solver) {
    switch (solver) {
    case Solver::Exact: return "exact";
    case Solver::Approx: return "approx";
    case Solver::Oracle: return "oracle";
    }
    return "exact";
}

bool compatible(const SemanticNode& a, const SemanticNode& b) { return a.label == b.label; }

long long mapping_cost(const SemanticGraph& g1, const SemanticGraph& g2, const std::vector<int>& mapping) {
    require_roots(g1, g2);
    check_mapping(g1, g2, mapping);
    return cost_of(index_pair(g1, g2), mapping);
}

EditScript script_from_mapping(const SemanticGraph& g1, const SemanticGraph& g2, std::vector<int> mapping,
                               Solver solver) {
    require_roots(g1, g2);
    check_mapping(g1, g2, mapping);
    EditScript script;
    script.solver = solver;
    std::vector<bool> image(g2.nodes.size(), false);
    for (std::size_t u = 0; u < mapping.size(); ++u) {
        EditOp op;
        op.g1_node = static_cast<int>(u);
        if (mapping[u] >= 0) {
            op.kind = EditKind::NodeSubstitute;
            op.g2_node = mapping[u];
            op.label = g1.nodes[u].label;
            op.function = g2.nodes[static_cast<std::size_t>(mapping[u])].function;
            image[static_cast<std::size_t>(mapping[u])] = true;
        } else {
            op.kind = EditKind::NodeDelete;
            op.cost = 1;
        }
        script.operations.push_back(std::move(op));
    }
    for (std::size_t x = 0; x < g2.nodes.size(); ++x) {
        if (image[x]) continue;
        EditOp op;
        op.kind = EditKind::NodeInsert;
        op.g2_node = static_cast<int>(x);
        op.label = g2.nodes[x].label;
        op.function = g2.nodes[x].function;
        op.cost = 1;
        script.operations.push_back(std::move(op));
    }

    std::vector<PdgEdge> e2 = g2.edges;
    std::sort(e2.begin(), e2.end());
    e2.erase(std::unique(e2.begin(), e2.end()), e2.end());
    std::vector<bool> kept(e2.size(), false);
    std::vector<PdgEdge> e1 = g1.edges;
    std::sort(e1.begin(), e1.end());
    e1.erase(std::unique(e1.begin(), e1.end()), e1.end());
    for (const auto& e : e1) {
        EditOp op;
        op.g1_edge = e;
        const int a = mapping[static_cast<std::size_t>(e.src)];
        const int b = mapping[static_cast<std::size_t>(e.dst)];
        const PdgEdge target{a, b, e.kind};
        const auto it = a >= 0 && b >= 0 ? std::lower_bound(e2.begin(), e2.end(), target) : e2.end();
        if (it != e2.end() && *it == target) {
            op.kind = EditKind::EdgeSubstitute;
            op.g2_edge = target;
            kept[static_cast<std::size_t>(it - e2.begin())] = true;
        } else {
            op.kind = EditKind::EdgeDelete;
            op.cost = 1;
        }
        script.operations.push_back(std::move(op));
    }
    for (std::size_t i = 0; i < e2.size(); ++i) {
        if (kept[i]) continue;
        EditOp op;
        op.kind = EditKind::EdgeInsert;
        op.g2_edge = e2[i];
        op.cost = 1;
        script.operations.push_back(std::move(op));
    }
    for (const auto& op : script.operations) script.total_cost += op.cost;
    script.mapping = std::move(mapping);
    return script;
}

SemanticGraph apply_edit_script(const SemanticGraph& g1, const EditScript& script) {
    std::vector<int> node_seen(g1.nodes.size(), 0);
    std::vector<int> image(g1.nodes.size(), -1);
    std::vector<std::optional<SemanticNode>> nodes;
    auto slot = [&](int id) -> std::optional<SemanticNode>& {
        if (id < 0) throw std::invalid_argument("edit operation without a target node");
        if (static_cast<std::size_t>(id) >= nodes.size()) nodes.resize(static_cast<std::size_t>(id) + 1);
        return nodes[static_cast<std::size_t>(id)];
    };
    auto g1_node = [&](int u) -> const SemanticNode& {
        if (u < 0 || u >= static_cast<int>(g1.nodes.size())) throw std::invalid_argument("unknown source node");
        ++node_seen[static_cast<std::size_t>(u)];
        return g1.nodes[static_cast<std::size_t>(u)];
    };

    for (const auto& op : script.operations) {
        switch (op.kind) {
        case EditKind::NodeDelete: g1_node(op.g1_node); break;
        case EditKind::NodeSubstitute: {
            SemanticNode n = g1_node(op.g1_node);
            if (n.label != op.label) throw std::invalid_argument("substitution changes the label");
            auto& s = slot(op.g2_node);
            if (s) throw std::invalid_argument("target node created twice");
            n.id = op.g2_node;
            n.function = op.function;
            s = std::move(n);
            image[static_cast<std::size_t>(op.g1_node)] = op.g2_node;
            break;
        }
        case EditKind::NodeInsert: {
            auto& s = slot(op.g2_node);
            if (s) throw std::invalid_argument("target node created twice");
            SemanticNode n;
            n.id = op.g2_node;
            n.label = op.label;
            n.function = op.function;
            s = std::move(n);
            break;
        }
        default: break;
        }
    }
    for (std::size_t u = 0; u < node_seen.size(); ++u) {
        if (node_seen[u] != 1) throw std::invalid_argument("script must delete or substitute every source node once");
    }

    SemanticGraph out;
    out.root = -1;
    for (auto& n : nodes) {
        if (!n) throw std::invalid_argument("script leaves a gap in the target numbering");
        if (n->label.category == LabelCategory::Root) out.root = n->id;
        out.nodes.push_back(std::move(*n));
    }
    const auto target_count = static_cast<int>(out.nodes.size());

    std::vector<PdgEdge> e1 = g1.edges;
    std::sort(e1.begin(), e1.end());
    e1.erase(std::unique(e1.begin(), e1.end()), e1.end());
    std::vector<int> edge_seen(e1.size(), 0);
    auto source_edge = [&](const PdgEdge& e) {
        const auto it = std::lower_bound(e1.begin(), e1.end(), e);
        if (it == e1.end() || !(*it == e)) throw std::invalid_argument("edge operation on a missing source edge");
        ++edge_seen[static_cast<std::size_t>(it - e1.begin())];
    };
    auto check_target = [&](const PdgEdge& e) {
        if (e.src < 0 || e.dst < 0 || e.src >= target_count || e.dst >= target_count) {
            throw std::invalid_argument("edge endpoint missing in the target");
        }
    };
    for (const auto& op : script.operations) {
        switch (op.kind) {
        case EditKind::EdgeDelete: source_edge(op.g1_edge); break;
        case EditKind::EdgeSubstitute: {
            source_edge(op.g1_edge);
            check_target(op.g2_edge);
            if (image[static_cast<std::size_t>(op.g1_edge.src)] != op.g2_edge.src ||
                image[static_cast<std::size_t>(op.g1_edge.dst)] != op.g2_edge.dst || op.g1_edge.kind != op.g2_edge.kind) {
                throw std::invalid_argument("edge substitution inconsistent with the node mapping");
            }
            out.edges.push_back(op.g2_edge);
            break;
        }
        case EditKind::EdgeInsert:
            check_target(op.g2_edge);
            out.edges.push_back(op.g2_edge);
            break;
        default: break;
        }
    }
    for (int seen : edge_seen) {
        if (seen != 1) throw std::invalid_argument("script must delete or substitute every source edge once");
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (std::adjacent_find(out.edges.begin(), out.edges.end()) != out.edges.end()) {
        throw std::invalid_argument("script creates a duplicate edge");
    }
    return out;
}

EditScript ged_exact(const SemanticGraph& g1, const SemanticGraph& g2, std::size_t budget, std::size_t expansion_limit) {
    if (g1.nodes.size() + g2.nodes.size() > budget) {
        throw BudgetExceeded("exact GED limited to " + std::to_string(budget) + " combined nodes, got " +
                             std::to_string(g1.nodes.size() + g2.nodes.size()));
    }
    require_roots(g1, g2);
    // Branching over the larger graph prunes better; a fixed orientation also
    // keeps truncated searches symmetric.
    const bool flip = !branch_on_first(g1, g2);
    const IndexedPair p = flip ? index_pair(g2, g1) : index_pair(g1, g2);
    BranchAndBound bnb(p, expansion_limit);
    auto best = bnb.solve(best_approx_mapping(p));
    if (flip) best = invert(best, static_cast<int>(g1.nodes.size()));
    return script_from_mapping(g1, g2, std::move(best), bnb.truncated() ? Solver::Approx : Solver::Exact);
}

EditScript ged_approx(const SemanticGraph& g1, const SemanticGraph& g2) {
    require_roots(g1, g2);
    const IndexedPair p = index_pair(g1, g2);
    return script_from_mapping(g1, g2, best_approx_mapping(p), Solver::Approx);
}

long long ged_oracle(const SemanticGraph& g1, const SemanticGraph& g2) {
    if (g1.nodes.size() > kOracleMaxNodes || g2.nodes.size() > kOracleMaxNodes) {
        throw OracleTooLarge("oracle limited to " + std::to_string(kOracleMaxNodes) + " nodes per graph");
    }
    require_roots(g1, g2);
    const IndexedPair p = index_pair(g1, g2);
    return Enumerator(p).run();
}

} // namespace cssg
