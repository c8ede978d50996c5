#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cssg/errors.hpp"
#include "cssg/eval.hpp"
#include "cssg/metrics.hpp"
#include "cssg/semgraph.hpp"

#ifndef CSSG_VERSION
#define CSSG_VERSION "0.0.0"
#endif

namespace cssg::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("failed reading " + path);
    return text;
}

Language resolve_language(const std::string& path, const std::string& flag) {
    if (!flag.empty()) {
        const auto lang = language_from_string(flag);
        if (!lang) throw UsageError("unknown language '" + flag + "'");
        return *lang;
    }
    const auto lang = language_from_extension(path);
    if (!lang) throw UsageError("cannot infer the language of " + path + "; pass --lang");
    return *lang;
}

SourceUnit load_unit(const std::string& path, const std::string& lang_flag) {
    const Language lang = resolve_language(path, lang_flag);
    return {lang, read_file(path), path};
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& names) {
    if (names.empty()) return {std::begin(kAllMetrics), std::end(kAllMetrics)};
    std::vector<Metric> out;
    for (const auto& name : names) {
        const auto m = metric_from_string(name);
        if (!m) throw UsageError("unknown metric '" + name + "'");
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    return out;
}

struct BudgetFlags {
    long long exact_budget = -1; // -1 = not given
    std::size_t expansion_limit = kDefaultExpansionLimit;
};

// Flag first, then CSSG_EXACT_BUDGET, then the default.
std::size_t effective_budget(const BudgetFlags& flags) {
    if (flags.exact_budget >= 0) return static_cast<std::size_t>(flags.exact_budget);
    if (const char* env = std::getenv("CSSG_EXACT_BUDGET"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (*end != '\0' || v < 0) throw UsageError("CSSG_EXACT_BUDGET must be a non-negative integer");
        return static_cast<std::size_t>(v);
    }
    return kDefaultExactBudget;
}

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--exact-budget", flags.exact_budget, "Largest combined node count solved exactly")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--expansion-limit", flags.expansion_limit, "Branch-and-bound expansions before falling back (0 = none)");
}

std::string score_line(Metric metric, const SimilarityResult& r) {
    std::string line = std::string(to_string(metric)) + " " + format_fixed(r.score);
    if (metric == Metric::Cssg) {
        line += " ged=" + std::to_string(r.ged) + " dmax=" + std::to_string(r.d_max) + " solver=" + std::string(to_string(r.solver));
    }
    return line;
}

// ---------------------------------------------------------------------------

struct CompareArgs {
    std::string file_a;
    std::string file_b;
    std::string lang;
    std::vector<std::string> metrics;
    bool name_sensitive = false;
    BudgetFlags budget;
};

int cmd_compare(const CompareArgs& args, std::ostream& out) {
    const SourceUnit a = load_unit(args.file_a, args.lang);
    const SourceUnit b = load_unit(args.file_b, args.lang);
    MetricOptions options;
    options.cssg.exact_budget = effective_budget(args.budget);
    options.cssg.expansion_limit = args.budget.expansion_limit;
    options.tsed.name_sensitive = args.name_sensitive;
    std::vector<std::string> lines;
    for (Metric m : parse_metrics(args.metrics)) lines.push_back(score_line(m, score_pair(m, a, b, options)));
    for (const auto& line : lines) out << line << '\n';
    return kOk;
}

struct GraphArgs {
    std::string file;
    std::string lang;
    std::string format = "json";
};

int cmd_graph(const GraphArgs& args, std::ostream& out) {
    const SourceUnit unit = load_unit(args.file, args.lang);
    const GraphFormat format = args.format == "dot" ? GraphFormat::Dot : GraphFormat::Json;
    out << serialize(build_semantic_graph(unit), format);
    return kOk;
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(file);
    SemanticGraph g;
    try {
        g = deserialize_json(text);
    } catch (const GraphFormatError& e) {
        err << "invalid: " << e.what() << '\n';
        return kParse;
    }
    const auto problems = validate(g);
    if (!problems.empty()) {
        for (const auto& p : problems) err << "invalid: " << p << '\n';
        return kParse;
    }
    out << "valid nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string corpus;
    std::string setting = "monolingual";
    std::vector<std::string> target_langs{"python"};
    std::vector<std::string> source_langs;
    uint64_t seed = 0;
    std::size_t per_problem = 1;
    std::string out_dir;
    std::vector<std::string> metrics;
    std::string correlation = "scores";
    bool name_sensitive = false;
    unsigned jobs = 0;
    BudgetFlags budget;
};

std::vector<Language> parse_languages(const std::vector<std::string>& names) {
    std::vector<Language> out;
    for (const auto& n : names) {
        const auto lang = language_from_string(n);
        if (!lang) throw UsageError("unknown language '" + n + "'");
        if (std::find(out.begin(), out.end(), *lang) == out.end()) out.push_back(*lang);
    }
    return out;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    const auto setting = setting_from_string(args.setting);
    if (!setting) throw UsageError("--setting must be monolingual or crosslingual");
    const auto targets = parse_languages(args.target_langs);
    const auto sources = parse_languages(args.source_langs);
    if (targets.empty()) throw UsageError("--target-lang needs at least one language");
    if (*setting == Setting::Crosslingual && sources.empty()) throw UsageError("crosslingual runs need --source-lang");
    if (args.correlation != "scores" && args.correlation != "effect-sizes") {
        throw UsageError("--correlation must be scores or effect-sizes");
    }
    const auto metrics = parse_metrics(args.metrics);

    ScoreOptions score_options;
    score_options.metric.cssg.exact_budget = effective_budget(args.budget);
    score_options.metric.cssg.expansion_limit = args.budget.expansion_limit;
    score_options.metric.tsed.name_sensitive = args.name_sensitive;
    score_options.jobs = args.jobs;

    Corpus corpus;
    try {
        corpus = ingest(std::filesystem::path(args.corpus));
    } catch (const EmptyCorpus& e) {
        err << "error: " << e.what() << '\n';
        return kEmpty;
    }
    for (const auto& d : corpus.diagnostics) err << "skipped " << d << '\n';

    std::vector<std::pair<Language, Language>> pairs; // (target, source)
    for (Language t : targets) {
        if (*setting == Setting::Monolingual) {
            pairs.emplace_back(t, t);
            continue;
        }
        for (Language s : sources) {
            if (s != t) pairs.emplace_back(t, s);
        }
    }
    if (pairs.empty()) throw UsageError("no distinct (target, source) language pair");

    ReportInputs report;
    report.metrics = metrics;
    std::vector<ScoreTable> tables;
    tables.reserve(pairs.size());
    nlohmann::json pair_info = nlohmann::json::array();
    std::size_t total_triplets = 0;
    for (const auto& [target, source] : pairs) {
        TripletOptions topt;
        topt.setting = *setting;
        topt.target_lang = target;
        topt.source_lang = source;
        topt.seed = args.seed;
        topt.per_problem = args.per_problem;
        const auto set = build_triplets(corpus.submissions, topt);
        const std::string label = language_pair_label(*setting, target, source);
        for (const auto& [problem, reason] : set.skipped) err << "skipped problem " << problem << " (" << label << "): " << reason << '\n';
        total_triplets += set.triplets.size();

        tables.push_back(score_all(set.triplets, metrics, score_options));
        const ScoreTable& table = tables.back();
        auto rows = effect_sizes(table, label);
        report.effects.insert(report.effects.end(), rows.begin(), rows.end());
        if (!set.triplets.empty()) {
            report.language_pairs.push_back(label);
            report.tables.emplace_back(label, &table);
        }

        std::size_t exact = 0;
        std::size_t approx = 0;
        nlohmann::json failures = nlohmann::json::object();
        for (Metric m : metrics) failures[std::string(to_string(m))] = table.failures(m);
        for (const auto& row : table.rows) {
            if (row.metric == Metric::Cssg && row.result) (row.result->solver == Solver::Exact ? exact : approx)++;
        }
        nlohmann::json skipped = nlohmann::json::array();
        for (const auto& [problem, reason] : set.skipped) skipped.push_back({{"problem_id", problem}, {"reason", reason}});
        pair_info.push_back({{"language_pair", label},
                             {"target_lang", to_string(target)},
                             {"source_lang", to_string(source)},
                             {"triplets", set.triplets.size()},
                             {"skipped_problems", skipped},
                             {"failures", failures},
                             {"cssg_solver_counts", {{"exact", exact}, {"approx", approx}}}});
    }

    std::vector<const ScoreTable*> table_ptrs;
    for (const auto& t : tables) table_ptrs.push_back(&t);
    report.correlation = args.correlation == "scores" ? pearson_matrix(table_ptrs) : pearson_matrix(report.effects, metrics);

    nlohmann::json metric_names = nlohmann::json::array();
    for (Metric m : metrics) metric_names.push_back(to_string(m));
    nlohmann::json manifest = {
        {"tool", "cssg"},
        {"version", CSSG_VERSION},
        {"command", "eval"},
        {"flags",
         {{"corpus", args.corpus},
          {"setting", to_string(*setting)},
          {"target_lang", args.target_langs},
          {"source_lang", args.source_langs},
          {"seed", args.seed},
          {"per_problem", args.per_problem},
          {"out", args.out_dir},
          {"metric", metric_names},
          {"correlation", args.correlation},
          {"name_sensitive", args.name_sensitive},
          {"jobs", args.jobs},
          {"exact_budget", score_options.metric.cssg.exact_budget},
          {"expansion_limit", score_options.metric.cssg.expansion_limit}}},
        {"corpus", {{"hash_fnv1a64", hex64(corpus.hash)}, {"submissions", corpus.submissions.size()}, {"skipped_lines", corpus.skipped}}},
        {"language_pairs", pair_info},
        {"triplets", total_triplets},
    };
    report.manifest_json = manifest.dump(2) + "\n";
    emit_report(report, args.out_dir);

    for (const auto& label : report.language_pairs) {
        out << label;
        for (Metric m : metrics) {
            for (const auto& r : report.effects) {
                if (r.language_pair == label && r.metric == m) out << ' ' << to_string(m) << '=' << (r.effect.d ? format_fixed(*r.effect.d) : "NA");
            }
        }
        out << '\n';
    }
    if (total_triplets == 0) {
        err << "error: no triplets could be built (need 2 correct and 1 incorrect submission per problem)\n";
        return kEmpty;
    }
    return kOk;
}

// ---------------------------------------------------------------------------

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

struct ReportArgs {
    std::string scores;
    std::string out_dir;
    std::string correlation = "scores";
};

// Recomputes effect sizes and correlations from a scores.csv written by eval.
int cmd_report(const ReportArgs& args, std::ostream& out) {
    if (args.correlation != "scores" && args.correlation != "effect-sizes") {
        throw UsageError("--correlation must be scores or effect-sizes");
    }
    std::istringstream in(read_file(args.scores));
    std::string line;
    if (!std::getline(in, line)) throw IoError(args.scores + " is empty");
    const auto header = split_csv_line(line);
    const std::vector<std::string> expected{"language_pair", "triplet", "problem_id", "role", "reference", "candidate",
                                            "metric", "score", "ged", "d_max", "solver", "error"};
    if (header != expected) throw UsageError(args.scores + " is not a scores.csv file");

    struct Cell {
        std::optional<double> score;
    };
    std::vector<std::string> pair_order;
    std::vector<Metric> metrics;
    std::map<std::string, std::map<std::pair<std::size_t, int>, std::map<Metric, Cell>>> cells;
    std::map<std::string, std::map<std::size_t, std::string>> problems;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != expected.size()) throw UsageError("malformed row in " + args.scores);
        const auto metric = metric_from_string(f[6]);
        if (!metric) throw UsageError("unknown metric '" + f[6] + "' in " + args.scores);
        if (std::find(pair_order.begin(), pair_order.end(), f[0]) == pair_order.end()) pair_order.push_back(f[0]);
        if (std::find(metrics.begin(), metrics.end(), *metric) == metrics.end()) metrics.push_back(*metric);
        const std::size_t triplet = std::stoul(f[1]);
        Cell cell;
        if (f[7] != "NA") cell.score = std::stod(f[7]);
        cells[f[0]][{triplet, f[3] == "pos" ? 0 : 1}][*metric] = cell;
        problems[f[0]][triplet] = f[2];
    }

    ReportInputs report;
    report.metrics = metrics;
    std::vector<ScoreTable> tables;
    tables.reserve(pair_order.size());
    for (const auto& label : pair_order) {
        ScoreTable table;
        table.metrics = metrics;
        const auto& by_pair = cells[label];
        const std::size_t n = by_pair.empty() ? 0 : by_pair.rbegin()->first.first + 1;
        table.triplets.resize(n);
        for (std::size_t t = 0; t < n; ++t) {
            table.triplets[t].id = t;
            table.triplets[t].pos1.problem_id = problems[label][t];
            for (int role = 0; role < 2; ++role) {
                for (Metric m : metrics) {
                    PairScore row;
                    row.triplet = t;
                    row.role = role == 0 ? PairRole::Positive : PairRole::Negative;
                    row.metric = m;
                    const auto it = by_pair.find({t, role});
                    if (it != by_pair.end() && it->second.count(m) && it->second.at(m).score) {
                        SimilarityResult r;
                        r.metric = m;
                        r.score = *it->second.at(m).score;
                        row.result = r;
                    } else {
                        row.error = "missing";
                    }
                    table.rows.push_back(std::move(row));
                }
            }
        }
        tables.push_back(std::move(table));
        auto rows = effect_sizes(tables.back(), label);
        report.effects.insert(report.effects.end(), rows.begin(), rows.end());
        report.language_pairs.push_back(label);
    }
    std::vector<const ScoreTable*> table_ptrs;
    for (const auto& t : tables) table_ptrs.push_back(&t);
    report.correlation = args.correlation == "scores" ? pearson_matrix(table_ptrs) : pearson_matrix(report.effects, metrics);
    nlohmann::json manifest = {{"tool", "cssg"},
                               {"version", CSSG_VERSION},
                               {"command", "report"},
                               {"flags", {{"scores", args.scores}, {"out", args.out_dir}, {"correlation", args.correlation}}}};
    report.manifest_json = manifest.dump(2) + "\n";
    report.write_scores = false;
    emit_report(report, args.out_dir);
    for (const auto& label : report.language_pairs) out << label << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Code similarity via semantic graphs", "cssg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CSSG_VERSION);

    CompareArgs compare;
    auto* c = app.add_subcommand("compare", "Score a pair of source files");
    c->add_option("file_a", compare.file_a, "Reference file")->required();
    c->add_option("file_b", compare.file_b, "Candidate file")->required();
    c->add_option("--lang", compare.lang, "Language of both files (default: from extension)");
    c->add_option("--metric", compare.metrics, "Metrics: cssg,bleu,jaccard,tsed (default: all)")->delimiter(',');
    c->add_flag("--name-sensitive", compare.name_sensitive, "Keep identifier names in TSED");
    add_budget_flags(c, compare.budget);

    GraphArgs graph;
    auto* g = app.add_subcommand("graph", "Print the semantic graph of a file");
    g->add_option("file", graph.file, "Source file")->required();
    g->add_option("--lang", graph.lang, "Language (default: from extension)");
    g->add_option("--format", graph.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    std::string validate_file;
    auto* v = app.add_subcommand("validate", "Check a JSON semantic graph");
    v->add_option("file", validate_file, "Graph file or - for stdin")->required();

    EvalArgs eval;
    auto* e = app.add_subcommand("eval", "Score a corpus and write effect-size reports");
    e->add_option("--corpus", eval.corpus, "JSONL corpus")->required();
    e->add_option("--setting", eval.setting, "monolingual or crosslingual");
    e->add_option("--target-lang", eval.target_langs, "Target languages")->delimiter(',');
    e->add_option("--source-lang", eval.source_langs, "Source languages (crosslingual)")->delimiter(',');
    e->add_option("--seed", eval.seed, "Sampling seed");
    e->add_option("--per-problem", eval.per_problem, "Triplets per problem")->check(CLI::PositiveNumber);
    e->add_option("--out", eval.out_dir, "Report directory")->required();
    e->add_option("--metric", eval.metrics, "Metrics (default: all)")->delimiter(',');
    e->add_option("--correlation", eval.correlation, "scores or effect-sizes");
    e->add_flag("--name-sensitive", eval.name_sensitive, "Keep identifier names in TSED");
    e->add_option("--jobs", eval.jobs, "Worker threads (default: all cores)");
    add_budget_flags(e, eval.budget);

    ReportArgs report;
    auto* r = app.add_subcommand("report", "Rebuild effect sizes and correlations from scores.csv");
    r->add_option("--scores", report.scores, "scores.csv from eval")->required();
    r->add_option("--out", report.out_dir, "Report directory")->required();
    r->add_option("--correlation", report.correlation, "scores or effect-sizes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (c->parsed()) return cmd_compare(compare, out);
        if (g->parsed()) return cmd_graph(graph, out);
        if (v->parsed()) return cmd_validate(validate_file, out, err);
        if (e->parsed()) return cmd_eval(eval, out, err);
        if (r->parsed()) return cmd_report(report, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const ParseFailure& ex) {
        err << "parse error: " << ex.what() << '\n';
        return kParse;
    } catch (const UnsupportedLanguage& ex) {
        err << "unsupported language: " << ex.what() << '\n';
        return kParse;
    } catch (const IoError& ex) {
        err << "I/O error: " << ex.what() << '\n';
        return kIo;
    } catch (const std::filesystem::filesystem_error& ex) {
        err << "I/O error: " << ex.what() << '\n';
        return kIo;
    } catch (const EmptyInput& ex) {
        err << "error: " << ex.what() << '\n';
        return kParse;
    }
    return kUsage;
}

} // namespace cssg::cli
