// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cssg/eval.hpp"
#include "cssg/ged.hpp"
#include "cssg/metrics.hpp"
#include "cssg/semgraph.hpp"
#include "support.hpp"

namespace {

using namespace cssg;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Library {
    std::vector<SourceUnit> units;
    std::vector<SemanticGraph> graphs;
};

const Library& desk_library() {
    static const Library lib = [] {
        Library l;
        for (const auto lang : {Language::Python, Language::Java}) {
            for (const auto& path : testing::desk_files(lang)) {
                l.units.push_back(testing::load_unit(path));
                l.graphs.push_back(build_semantic_graph(l.units.back()));
            }
        }
        return l;
    }();
    return lib;
}

Outcome identity() {
    const auto start = Clock::now();
    std::vector<SourceUnit> files;
    for (const auto lang : {Language::Python, Language::Java}) {
        const auto paths = testing::desk_files(lang);
        for (std::size_t i = 0; i < 15; ++i) files.push_back(testing::load_unit(paths[i * paths.size() / 15]));
    }
    std::size_t bad = 0;
    double worst_bleu = 1.0;
    for (const auto& f : files) {
        for (const auto metric : {Metric::Cssg, Metric::Jaccard, Metric::Tsed}) bad += score_pair(metric, f, f).score != 1.0;
        const double b = score_pair(Metric::Bleu, f, f).score;
        worst_bleu = std::min(worst_bleu, b);
        bad += b < 0.999;
    }
    const double t = seconds_since(start);
    return {bad == 0 && t < 30.0, std::to_string(files.size()) + " files, " + std::to_string(bad) +
                                      " violations, min BLEU " + fixed(worst_bleu) + ", " + fixed(t, 2) + " s"};
}

Outcome normalization() {
    const auto& lib = desk_library();
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> pick(0, lib.graphs.size() - 1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto r = cssg_graphs(lib.graphs[pick(rng)], lib.graphs[pick(rng)]);
        const double recomputed = 1.0 - static_cast<double>(r.ged) / static_cast<double>(r.d_max);
        worst = std::max(worst, std::abs(recomputed - r.score));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    return {worst <= 1e-12, "100 pairs, max |score - (1 - ged/dmax)| = " + std::string(buf)};
}

Outcome oracle() {
    const auto start = Clock::now();
    std::mt19937_64 rng(202);
    int equal = 0;
    int upper = 0;
    for (int i = 0; i < 200; ++i) {
        const auto a = testing::random_graph(rng, kOracleMaxNodes);
        const auto b = testing::random_graph(rng, kOracleMaxNodes);
        const auto exact = ged_exact(a, b).total_cost;
        equal += exact == ged_oracle(a, b);
        upper += ged_approx(a, b).total_cost >= exact;
    }
    const double t = seconds_since(start);
    return {equal == 200 && upper == 200 && t < 300.0, "exact=oracle " + std::to_string(equal) + "/200, approx>=exact " +
                                                           std::to_string(upper) + "/200, " + fixed(t, 2) + " s"};
}

Outcome symmetry_and_bounds() {
    const auto& lib = desk_library();
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<std::size_t> pick(0, lib.units.size() - 1);
    int asymmetric = 0;
    int out_of_range = 0;
    int approx = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        const auto ab = cssg_graphs(lib.graphs[a], lib.graphs[b]);
        const auto ba = cssg_graphs(lib.graphs[b], lib.graphs[a]);
        asymmetric += ab.score != ba.score;
        approx += ab.solver != Solver::Exact;
        for (const auto metric : {Metric::Bleu, Metric::Jaccard, Metric::Tsed}) {
            const double s = score_pair(metric, lib.units[a], lib.units[b]).score;
            out_of_range += s < 0.0 || s > 1.0;
        }
        out_of_range += ab.score < 0.0 || ab.score > 1.0;
    }
    return {asymmetric == 0 && out_of_range == 0, "500 pairs, " + std::to_string(asymmetric) + " asymmetric, " +
                                                      std::to_string(out_of_range) + " out of [0,1], " +
                                                      std::to_string(approx) + " approx"};
}

SourceUnit golden(const std::string& name) { return testing::load_unit(testing::golden(name)); }

Outcome golden_dataflow() {
    const auto a = golden("dataflow_x.py");
    const auto b = golden("dataflow_y.py");
    const double t = tsed(a, b);
    const double c = cssg::cssg(a, b).score;
    return {t == 1.0 && c <= 1.0 - 0.01, "tsed " + fixed(t) + ", cssg " + fixed(c)};
}

Outcome golden_control() {
    const auto guarded = golden("guarded_call.py");
    const auto g = build_semantic_graph(guarded);
    bool edge = false;
    for (const auto& e : g.edges) {
        const auto& src = g.nodes[static_cast<std::size_t>(e.src)];
        const auto& dst = g.nodes[static_cast<std::size_t>(e.dst)];
        const bool predicate = testing::span_text(guarded.text, src.span) == "if data is None:";
        edge |= e.kind == EdgeKind::Control && predicate && dst.callee == "save";
    }
    const double self = cssg::cssg(guarded, guarded).score;
    const double changed = cssg::cssg(guarded, golden("unguarded_call.py")).score;
    return {edge && self - changed > 0.0, std::string("control edge predicate->save ") + (edge ? "present" : "missing") +
                                              ", cssg without guard " + fixed(changed)};
}

Outcome golden_call() {
    const auto rec = golden("recursive.py");
    const auto it = golden("iterative.py");
    const bool cycle = has_call_cycle(build_semantic_graph(rec));
    const bool acyclic = !has_cycle(build_semantic_graph(it), true);
    const double c = cssg::cssg(rec, it).score;
    return {cycle && acyclic && c < 1.0, std::string("call cycle ") + (cycle ? "yes" : "no") + ", iterative acyclic " +
                                             (acyclic ? "yes" : "no") + ", cssg " + fixed(c)};
}

Outcome directional() {
    const auto start = Clock::now();
    const auto corpus = ingest(testing::data_dir() / "desk_corpus" / "corpus.jsonl");
    const auto set = build_triplets(corpus.submissions, {});
    const auto table = score_all(set.triplets, {Metric::Tsed, Metric::Cssg});
    std::map<Metric, std::optional<double>> d;
    for (const auto& row : effect_sizes(table, "Python")) d[row.metric] = row.effect.d;
    const double t = seconds_since(start);
    if (!d[Metric::Cssg] || !d[Metric::Tsed]) return {false, "effect size undefined"};
    const double dc = *d[Metric::Cssg];
    const double dt = *d[Metric::Tsed];
    return {set.triplets.size() >= 30 && dc > 0.0 && dc >= dt - 0.05 && t < 600.0,
            std::to_string(set.triplets.size()) + " triplets, d(CSSG) " + fixed(dc) + ", d(TSED) " + fixed(dt) + ", " +
                fixed(t, 2) + " s"};
}

Outcome statistics() {
    const double d = *cohens_d({0.8, 0.9}, {0.5, 0.6}).d;
    const std::vector<double> x{0.12, 0.5, 0.33, 0.91, 0.07, 0.64};
    std::vector<double> y;
    for (double v : x) y.push_back(2 * v + 1);
    const double r = pearson(x, y);
    const std::vector<double> pos{0.3, 0.55, 0.8, 0.41};
    const std::vector<double> neg{0.2, 0.15, 0.62};
    auto shift = [](std::vector<double> v) {
        for (auto& e : v) e += 0.37;
        return v;
    };
    const double drift = std::abs(*cohens_d(pos, neg).d - *cohens_d(shift(pos), shift(neg)).d);
    char buf[160];
    std::snprintf(buf, sizeof buf, "d %.4f, r %.12f, shift drift %.3g", d, r, drift);
    return {std::abs(d - 4.2426) <= 1e-3 && std::abs(r - 1.0) <= 1e-12 && drift <= 1e-12, buf};
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            double below = 0;
            double equal = 0;
            for (double w : v) {
                below += w < v[i];
                equal += w == v[i];
            }
            r[i] = below + (equal + 1) / 2;
        }
        return r;
    };
    return pearson(ranks(x), ranks(y));
}

Outcome mutation() {
    std::vector<SourceUnit> pool;
    for (const auto& path : testing::desk_files(Language::Python)) {
        auto unit = testing::load_unit(path);
        if (testing::deletable_lines(unit.text).size() >= 8) pool.push_back(std::move(unit));
    }
    if (pool.empty()) return {false, "no file with 8 deletable statements"};
    const std::vector<std::size_t> ks{1, 2, 4, 8};
    std::vector<double> mean(ks.size(), 0.0);
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& unit = pool[rng() % pool.size()];
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const SourceUnit mutated{unit.language, testing::delete_statements(unit.text, ks[i], rng), unit.id};
            mean[i] += cssg::cssg(unit, mutated).score / 50.0;
        }
    }
    double rho = 0.0;
    try {
        rho = spearman({1, 2, 4, 8}, mean);
    } catch (const std::exception&) {
        return {false, "constant mean scores"};
    }
    std::string means;
    for (double m : mean) means += (means.empty() ? "" : " ") + fixed(m, 4);
    return {rho < 0.0, std::to_string(pool.size()) + " files, mean cssg by k=1,2,4,8: " + means + ", spearman " + fixed(rho, 3)};
}

Outcome cli_determinism() {
    const auto out = fs::temp_directory_path() / "cssg_acceptance_eval";
    fs::remove_all(out);
    const std::vector<std::string> args{"eval", "--corpus", (testing::data_dir() / "desk_corpus" / "corpus.jsonl").string(),
                                        "--out", out.string()};
    const char* files[] = {"effect_sizes.csv", "effect_sizes_detail.csv", "correlation.csv", "scores.csv", "manifest.json"};
    std::ostringstream sink;
    if (cli::run(args, sink, sink) != 0) return {false, "first run failed: " + sink.str()};
    std::map<std::string, std::string> first;
    for (const char* f : files) first[f] = testing::read_file(out / f);
    if (cli::run(args, sink, sink) != 0) return {false, "second run failed: " + sink.str()};
    int differing = 0;
    for (const char* f : files) differing += testing::read_file(out / f) != first[f];
    return {differing == 0, std::to_string(std::size(files)) + " files compared, " + std::to_string(differing) + " differ"};
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"identity", identity},
        {"normalization", normalization},
        {"ged-oracle", oracle},
        {"symmetry-bounds", symmetry_and_bounds},
        {"golden-dataflow", golden_dataflow},
        {"golden-control", golden_control},
        {"golden-call", golden_call},
        {"directional-effect-size", directional},
        {"statistics", statistics},
        {"mutation-monotonicity", mutation},
        {"cli-determinism", cli_determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (std::size(criteria) - static_cast<std::size_t>(failed)) << "/" << std::size(criteria) << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
