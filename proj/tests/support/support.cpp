#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cssg::testing {

namespace fs = std::filesystem;

fs::path data_dir() { return fs::path(CSSG_TEST_DATA_DIR); }

fs::path golden(const std::string& name) { return data_dir() / "golden" / name; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SourceUnit load_unit(const fs::path& path) {
    const auto lang = language_from_extension(path);
    if (!lang) throw std::runtime_error("unknown extension: " + path.string());
    return {*lang, read_file(path), path.filename().string()};
}

std::vector<fs::path> desk_files(Language lang) {
    const std::string ext = lang == Language::Java ? ".java" : ".py";
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(data_dir() / "desk_corpus" / "problems")) {
        if (entry.is_regular_file() && entry.path().extension() == ext) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

const NodeLabel kBodyLabels[] = {
    {LabelCategory::Operation, "assign"},      {LabelCategory::Operation, "+"},
    {LabelCategory::Operation, "call"},        {LabelCategory::IdentifierClass, "VAR"},
    {LabelCategory::ConstantClass, "INT_LIT"},
};

} // namespace

SemanticGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes) {
    static const char* const names[] = {"f", "g", "h"};
    const int n = pick(rng, 1, static_cast<int>(max_nodes));
    SemanticGraph g;
    g.nodes.push_back({0, {LabelCategory::Root, "ROOT"}, "", {}, "", 0, false});
    if (n == 1) return g;

    const int functions = pick(rng, 1, std::min(2, n - 1));
    std::vector<std::string> chosen(std::begin(names), std::end(names));
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(static_cast<std::size_t>(functions));
    std::sort(chosen.begin(), chosen.end());

    // Body nodes are spread over the functions; each function keeps its entry first.
    std::vector<std::vector<NodeLabel>> bodies(chosen.size());
    for (int i = functions + 1; i < n; ++i) {
        bodies[static_cast<std::size_t>(pick(rng, 0, functions - 1))].push_back(
            kBodyLabels[pick(rng, 0, static_cast<int>(std::size(kBodyLabels)) - 1)]);
    }
    std::vector<int> entry_of;
    std::vector<int> owner;
    owner.push_back(-1);
    for (std::size_t f = 0; f < chosen.size(); ++f) {
        const int entry = static_cast<int>(g.nodes.size());
        entry_of.push_back(entry);
        g.nodes.push_back({entry, {LabelCategory::FunctionName, chosen[f]}, chosen[f], {}, "", 0, false});
        owner.push_back(static_cast<int>(f));
        for (const auto& label : bodies[f]) {
            const int id = static_cast<int>(g.nodes.size());
            g.nodes.push_back({id, label, chosen[f], {}, "", 0, false});
            owner.push_back(static_cast<int>(f));
        }
    }
    for (int entry : entry_of) g.edges.push_back({0, entry, EdgeKind::Root});

    const int size = static_cast<int>(g.nodes.size());
    for (int u = 1; u < size; ++u) {
        for (int v = 1; v < size; ++v) {
            if (owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)]) {
                if (u != v && chance(rng, 0.25)) g.edges.push_back({u, v, EdgeKind::Data});
                if (chance(rng, 0.2)) g.edges.push_back({u, v, EdgeKind::Control});
            }
        }
        auto& node = g.nodes[static_cast<std::size_t>(u)];
        if (node.label.detail == "call" && chance(rng, 0.7)) {
            const int target = entry_of[static_cast<std::size_t>(pick(rng, 0, functions - 1))];
            node.callee = g.nodes[static_cast<std::size_t>(target)].label.detail;
            node.callee_exact = true;
            g.edges.push_back({u, target, EdgeKind::Call});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

Cfg random_cfg(std::mt19937_64& rng, std::size_t max_nodes) {
    static const char* const vars[] = {"a", "b", "c"};
    const int n = pick(rng, 3, static_cast<int>(max_nodes));
    Cfg cfg;
    cfg.function_name = "random";
    cfg.entry = 0;
    cfg.exit = 1;
    for (int i = 0; i < n; ++i) {
        CfgNode node;
        node.id = i;
        node.kind = i == 0 ? CfgNodeKind::Entry : i == 1 ? CfgNodeKind::Exit : CfgNodeKind::Statement;
        if (i >= 2) {
            for (const char* v : vars) {
                if (chance(rng, 0.3)) node.defs.emplace_back(v);
                if (chance(rng, 0.4)) node.uses.emplace_back(v);
            }
        }
        cfg.nodes.push_back(std::move(node));
    }
    // Backbone 0 -> 2 -> 3 -> ... -> 1 keeps every node on an entry-exit path.
    std::vector<int> chain{0};
    for (int i = 2; i < n; ++i) chain.push_back(i);
    chain.push_back(1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) cfg.edges.push_back({chain[i], chain[i + 1], "", false});
    for (int i = 2; i < n; ++i) {
        if (chance(rng, 0.5)) {
            const int dst = pick(rng, 1, n - 1);
            const CfgEdge e{i, dst, "", false};
            if (std::find(cfg.edges.begin(), cfg.edges.end(), e) == cfg.edges.end()) cfg.edges.push_back(e);
        }
    }
    for (auto& node : cfg.nodes) {
        if (node.id >= 2 && cfg.successors(node.id).size() > 1) node.kind = CfgNodeKind::Predicate;
    }
    return cfg;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::size_t indent_of(const std::string& line) { return line.find_first_not_of(' '); }

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

int bracket_balance(const std::string& line) {
    int balance = 0;
    for (char c : line) {
        if (c == '(' || c == '[' || c == '{') ++balance;
        if (c == ')' || c == ']' || c == '}') --balance;
    }
    return balance;
}

} // namespace

std::vector<std::size_t> deletable_lines(const std::string& python_source) {
    const auto lines = split_lines(python_source);
    std::vector<std::size_t> out;
    int open = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const int balance = bracket_balance(line);
        if (open == 0 && balance == 0 && !blank(line)) {
            const std::string stripped = line.substr(indent_of(line));
            const bool header = stripped.back() == ':' || stripped.rfind('@', 0) == 0;
            if (!header && stripped.front() != '#') out.push_back(i);
        }
        open += balance;
    }
    return out;
}

std::string delete_statements(const std::string& python_source, std::size_t k, std::mt19937_64& rng) {
    const auto lines = split_lines(python_source);
    auto candidates = deletable_lines(python_source);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(std::min(k, candidates.size()));
    const std::set<std::size_t> removed(candidates.begin(), candidates.end());

    std::vector<std::string> kept;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!removed.count(i)) {
            kept.push_back(lines[i]);
            continue;
        }
        const std::size_t depth = indent_of(lines[i]);
        const std::string* previous = nullptr;
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            if (!blank(*it)) {
                previous = &*it;
                break;
            }
        }
        const std::string* next = nullptr;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (!removed.count(j) && !blank(lines[j])) {
                next = &lines[j];
                break;
            }
        }
        const bool opens_block = previous && previous->back() == ':' && indent_of(*previous) < depth;
        const bool block_ends = !next || indent_of(*next) < depth;
        if (opens_block && block_ends) kept.push_back(std::string(depth, ' ') + "pass");
    }
    std::string out;
    for (const auto& line : kept) out += line + "\n";
    return out;
}

std::string span_text(const std::string& text, const Span& span) {
    if (span.end <= span.start || span.end > text.size()) return {};
    std::string t = text.substr(span.start, span.end - span.start);
    if (const auto nl = t.find('\n'); nl != std::string::npos) t.resize(nl);
    return t;
}

} // namespace cssg::testing
