#include "cssg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "cssg/errors.hpp"

namespace cssg {

namespace {

using Ngram = std::vector<std::string_view>;

std::map<Ngram, int> ngram_counts(const std::vector<std::string_view>& tokens, std::size_t n) {
    std::map<Ngram, int> counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++counts[Ngram(tokens.begin() + static_cast<long>(i), tokens.begin() + static_cast<long>(i + n))];
    return counts;
}

std::vector<std::string_view> texts(const TokenStream& s) {
    std::vector<std::string_view> out;
    out.reserve(s.tokens.size());
    for (const auto& t : s.tokens) out.emplace_back(t.text);
    return out;
}

bool is_identifier_kind(std::string_view kind) { return kind.find("identifier") != std::string_view::npos; }

void flatten(const AstNode& node, const TsedOptions& options, LabeledTree& tree) {
    const int first = static_cast<int>(tree.labels.size());
    for (const auto& c : node.children) flatten(c, options, tree);
    std::string label = node.kind;
    if (!node.op.empty()) label += " " + node.op;
    if (options.name_sensitive && node.is_leaf() && is_identifier_kind(node.kind)) label += " " + node.text;
    tree.leftmost.push_back(node.children.empty() ? static_cast<int>(tree.labels.size()) : tree.leftmost[static_cast<std::size_t>(first)]);
    tree.labels.push_back(std::move(label));
}

} // namespace

std::string_view to_string(Metric metric) {
    switch (metric) {
    case Metric::Bleu: return "bleu";
    case Metric::Jaccard: return "jaccard";
    case Metric::Tsed: return "tsed";
    case Metric::Cssg: return "cssg";
    }
    return "cssg";
}

std::string_view display_name(Metric metric) {
    switch (metric) {
    case Metric::Bleu: return "BLEU";
    case Metric::Jaccard: return "Jaccard";
    case Metric::Tsed: return "TSED";
    case Metric::Cssg: return "CSSG";
    }
    return "CSSG";
}

std::optional<Metric> metric_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Metric m : kAllMetrics) {
        if (to_string(m) == lower) return m;
    }
    return std::nullopt;
}

long long max_edit_distance(const SemanticGraph& g1, const SemanticGraph& g2) {
    return static_cast<long long>(g1.node_count() + g1.edge_count() + g2.node_count() + g2.edge_count());
}

SimilarityResult cssg_graphs(const SemanticGraph& g1, const SemanticGraph& g2, const CssgOptions& options) {
    SimilarityResult r;
    r.metric = Metric::Cssg;
    const bool exact = g1.node_count() + g2.node_count() <= options.exact_budget;
    const EditScript script = exact ? ged_exact(g1, g2, options.exact_budget, options.expansion_limit) : ged_approx(g1, g2);
    r.ged = script.total_cost;
    r.solver = script.solver;
    r.d_max = max_edit_distance(g1, g2);
    r.degenerate = g1.node_count() == 1 && g2.node_count() == 1;
    r.score = 1.0 - static_cast<double>(r.ged) / static_cast<double>(r.d_max);
    return r;
}

SimilarityResult cssg(const SourceUnit& a, const SourceUnit& b, const CssgOptions& options) {
    return cssg_graphs(build_semantic_graph(a), build_semantic_graph(b), options);
}

double bleu(const TokenStream& reference, const TokenStream& candidate) {
    if (reference.empty()) throw EmptyInput("BLEU needs a non-empty reference");
    const auto ref = texts(reference);
    const auto cand = texts(candidate);
    if (cand.empty()) return 0.0;

    double log_sum = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto cand_counts = ngram_counts(cand, n);
        const auto ref_counts = ngram_counts(ref, n);
        long long matches = 0;
        long long total = 0;
        for (const auto& [gram, count] : cand_counts) {
            total += count;
            const auto it = ref_counts.find(gram);
            if (it != ref_counts.end()) matches += std::min(count, it->second);
        }
        double precision = 0.0;
        if (n == 1) {
            if (matches == 0) return 0.0;
            precision = static_cast<double>(matches) / static_cast<double>(total);
        } else {
            precision = static_cast<double>(matches + 1) / static_cast<double>(total + 1);
        }
        log_sum += std::log(precision) / 4.0;
    }
    const auto c = static_cast<double>(cand.size());
    const auto r = static_cast<double>(ref.size());
    const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
    return brevity * std::exp(log_sum);
}

double jaccard(const TokenStream& a, const TokenStream& b) {
    std::set<std::string_view> sa;
    std::set<std::string_view> sb;
    for (const auto& t : a.tokens) sa.insert(t.text);
    for (const auto& t : b.tokens) sb.insert(t.text);
    if (sa.empty() && sb.empty()) return 1.0;
    std::size_t common = 0;
    for (const auto& t : sa) common += sb.count(t);
    return static_cast<double>(common) / static_cast<double>(sa.size() + sb.size() - common);
}

LabeledTree tsed_tree(const AstNode& ast, const TsedOptions& options) {
    LabeledTree tree;
    flatten(ast, options, tree);
    return tree;
}

std::size_t tree_edit_distance(const LabeledTree& a, const LabeledTree& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0 || m == 0) return n + m;

    // Intern labels so the inner loop compares integers.
    std::unordered_map<std::string_view, int> ids;
    auto intern = [&](const LabeledTree& t) {
        std::vector<int> out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) out[i] = ids.emplace(t.labels[i], static_cast<int>(ids.size())).first->second;
        return out;
    };
    const auto la = intern(a);
    const auto lb = intern(b);

    auto keyroots = [](const LabeledTree& t) {
        std::vector<int> roots;
        std::vector<bool> seen(t.size(), false);
        for (std::size_t i = t.size(); i-- > 0;) {
            const auto l = static_cast<std::size_t>(t.leftmost[i]);
            if (!seen[l]) {
                seen[l] = true;
                roots.push_back(static_cast<int>(i));
            }
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    };
    const auto ka = keyroots(a);
    const auto kb = keyroots(b);

    std::vector<int> td(n * m, 0);
    std::vector<int> fd((n + 1) * (m + 1), 0);
    const std::size_t stride = m + 1;
    for (int i : ka) {
        for (int j : kb) {
            const int li = a.leftmost[static_cast<std::size_t>(i)];
            const int lj = b.leftmost[static_cast<std::size_t>(j)];
            const auto rows = static_cast<std::size_t>(i - li + 2);
            const auto cols = static_cast<std::size_t>(j - lj + 2);
            fd[0] = 0;
            for (std::size_t x = 1; x < rows; ++x) fd[x * stride] = fd[(x - 1) * stride] + 1;
            for (std::size_t y = 1; y < cols; ++y) fd[y] = fd[y - 1] + 1;
            for (std::size_t x = 1; x < rows; ++x) {
                const auto di = static_cast<std::size_t>(li) + x - 1;
                for (std::size_t y = 1; y < cols; ++y) {
                    const auto dj = static_cast<std::size_t>(lj) + y - 1;
                    const int del = fd[(x - 1) * stride + y] + 1;
                    const int ins = fd[x * stride + y - 1] + 1;
                    if (a.leftmost[di] == li && b.leftmost[dj] == lj) {
                        const int ren = fd[(x - 1) * stride + y - 1] + (la[di] == lb[dj] ? 0 : 1);
                        fd[x * stride + y] = std::min({del, ins, ren});
                        td[di * m + dj] = fd[x * stride + y];
                    } else {
                        const auto px = static_cast<std::size_t>(a.leftmost[di] - li);
                        const auto py = static_cast<std::size_t>(b.leftmost[dj] - lj);
                        fd[x * stride + y] = std::min({del, ins, fd[px * stride + py] + td[di * m + dj]});
                    }
                }
            }
        }
    }
    return static_cast<std::size_t>(td[(n - 1) * m + (m - 1)]);
}

double tsed(const SourceUnit& a, const SourceUnit& b, const TsedOptions& options) {
    const LabeledTree ta = tsed_tree(parse(a), options);
    const LabeledTree tb = tsed_tree(parse(b), options);
    const auto largest = static_cast<double>(std::max(ta.size(), tb.size()));
    const auto dist = static_cast<double>(tree_edit_distance(ta, tb));
    return std::max(0.0, 1.0 - dist / largest);
}

SimilarityResult score_pair(Metric metric, const SourceUnit& reference, const SourceUnit& candidate,
                            const MetricOptions& options) {
    if (metric == Metric::Cssg) return cssg(reference, candidate, options.cssg);
    SimilarityResult r;
    r.metric = metric;
    switch (metric) {
    case Metric::Bleu: r.score = bleu(tokenize(reference), tokenize(candidate)); break;
    case Metric::Jaccard: r.score = jaccard(tokenize(reference), tokenize(candidate)); break;
    case Metric::Tsed: r.score = tsed(reference, candidate, options.tsed); break;
    case Metric::Cssg: break;
    }
    return r;
}

} // namespace cssg
