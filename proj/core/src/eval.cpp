#include "cssg/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cssg/errors.hpp"

namespace cssg {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

uint64_t fnv1a(std::string_view bytes, uint64_t h = kFnvOffset) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

uint64_t splitmix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::optional<Verdict> verdict_from_string(std::string_view name) {
    if (name == "correct") return Verdict::Correct;
    if (name == "incorrect") return Verdict::Incorrect;
    return std::nullopt;
}

Submission parse_submission(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    if (!j.is_object()) throw std::invalid_argument("not a JSON object");
    auto field = [&](const char* key) {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_string()) throw std::invalid_argument(std::string("missing string field '") + key + "'");
        return it->get<std::string>();
    };
    Submission s;
    s.problem_id = field("problem_id");
    s.submission_id = field("submission_id");
    s.source = field("source");
    const auto lang = language_from_string(field("language"));
    if (!lang) throw std::invalid_argument("unknown language");
    s.language = *lang;
    const auto verdict = verdict_from_string(field("verdict"));
    if (!verdict) throw std::invalid_argument("verdict must be 'correct' or 'incorrect'");
    s.verdict = *verdict;
    if (s.problem_id.empty()) throw std::invalid_argument("empty problem_id");
    if (s.source.empty()) throw std::invalid_argument("empty source");
    return s;
}

// Deterministic Fisher-Yates so the order does not depend on the standard library.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

double mean(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v, double m) {
    double sum = 0.0;
    for (double x : v) sum += (x - m) * (x - m);
    return sum / static_cast<double>(v.size() - 1);
}

std::optional<double> maybe_pearson(const std::vector<double>& x, const std::vector<double>& y) {
    try {
        return pearson(x, y);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string cell(const std::optional<double>& v) { return v ? format_fixed(*v) : "NA"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("failed writing " + path.string());
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string_view to_string(Verdict verdict) { return verdict == Verdict::Correct ? "correct" : "incorrect"; }

std::string_view to_string(Setting setting) { return setting == Setting::Monolingual ? "monolingual" : "crosslingual"; }

std::optional<Setting> setting_from_string(std::string_view name) {
    if (name == "monolingual" || name == "mono") return Setting::Monolingual;
    if (name == "crosslingual" || name == "cross") return Setting::Crosslingual;
    return std::nullopt;
}

std::string_view to_string(PairRole role) { return role == PairRole::Positive ? "pos" : "neg"; }

Corpus ingest(std::istream& in) {
    Corpus corpus;
    corpus.hash = kFnvOffset;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        corpus.hash = fnv1a(line + "\n", corpus.hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            corpus.submissions.push_back(parse_submission(line));
        } catch (const std::exception& e) {
            ++corpus.skipped;
            corpus.diagnostics.push_back("line " + std::to_string(number) + ": " + e.what());
        }
    }
    if (corpus.submissions.empty()) throw EmptyCorpus("corpus contains no valid submissions");
    return corpus;
}

Corpus ingest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    return ingest(in);
}

std::string language_pair_label(Setting setting, Language target, Language source) {
    if (setting == Setting::Monolingual) return std::string(to_string(target));
    return "(" + std::string(to_string(target)) + ", " + std::string(to_string(source)) + ")";
}

TripletSet build_triplets(const std::vector<Submission>& submissions, const TripletOptions& options) {
    const bool mono = options.setting == Setting::Monolingual;
    const Language source = mono ? options.target_lang : options.source_lang;

    struct Pools {
        std::vector<const Submission*> target_correct;
        std::vector<const Submission*> source_correct;
        std::vector<const Submission*> source_incorrect;
    };
    std::map<std::string, Pools> problems;
    for (const auto& s : submissions) {
        auto& pools = problems[s.problem_id];
        if (s.verdict == Verdict::Correct && s.language == options.target_lang) pools.target_correct.push_back(&s);
        if (!mono && s.verdict == Verdict::Correct && s.language == source) pools.source_correct.push_back(&s);
        if (s.verdict == Verdict::Incorrect && s.language == source) pools.source_incorrect.push_back(&s);
    }

    auto by_id = [](const Submission* a, const Submission* b) { return a->submission_id < b->submission_id; };
    const std::string pair = language_pair_label(options.setting, options.target_lang, source);
    TripletSet out;
    for (auto& [problem, pools] : problems) {
        std::sort(pools.target_correct.begin(), pools.target_correct.end(), by_id);
        std::sort(pools.source_correct.begin(), pools.source_correct.end(), by_id);
        std::sort(pools.source_incorrect.begin(), pools.source_incorrect.end(), by_id);
        std::mt19937_64 rng(splitmix(options.seed ^ fnv1a(problem + "\x1f" + pair)));
        shuffle(pools.target_correct, rng);
        shuffle(pools.source_correct, rng);
        shuffle(pools.source_incorrect, rng);

        std::size_t made = 0;
        std::size_t tc = 0;
        std::size_t sc = 0;
        std::size_t si = 0;
        while (made < options.per_problem) {
            const Submission* pos1 = nullptr;
            const Submission* pos2 = nullptr;
            if (mono) {
                if (tc + 2 > pools.target_correct.size()) break;
                pos1 = pools.target_correct[tc];
                pos2 = pools.target_correct[tc + 1];
            } else {
                if (tc + 1 > pools.target_correct.size() || sc + 1 > pools.source_correct.size()) break;
                pos1 = pools.target_correct[tc];
                pos2 = pools.source_correct[sc];
            }
            if (si + 1 > pools.source_incorrect.size()) break;
            const Submission* neg = pools.source_incorrect[si++];
            tc += mono ? 2 : 1;
            sc += mono ? 0 : 1;
            Triplet t;
            t.id = out.triplets.size();
            t.pos1 = *pos1;
            t.pos2 = *pos2;
            t.neg = *neg;
            t.setting = options.setting;
            t.target_lang = options.target_lang;
            t.source_lang = source;
            out.triplets.push_back(std::move(t));
            ++made;
        }
        if (made == 0) {
            std::string reason;
            if (mono && pools.target_correct.size() < 2) {
                reason = "fewer than 2 correct " + std::string(to_string(options.target_lang)) + " submissions";
            } else if (!mono && pools.target_correct.empty()) {
                reason = "no correct " + std::string(to_string(options.target_lang)) + " submission";
            } else if (!mono && pools.source_correct.empty()) {
                reason = "no correct " + std::string(to_string(source)) + " submission";
            } else {
                reason = "no incorrect " + std::string(to_string(source)) + " submission";
            }
            out.skipped.emplace_back(problem, reason);
        }
    }
    return out;
}

const PairScore& ScoreTable::at(std::size_t triplet, PairRole role, std::size_t metric_index) const {
    return rows.at((triplet * 2 + (role == PairRole::Positive ? 0 : 1)) * metrics.size() + metric_index);
}

std::size_t ScoreTable::failures(Metric metric) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const PairScore& r) { return r.metric == metric && !r.result; }));
}

ScoreTable score_all(const std::vector<Triplet>& triplets, const std::vector<Metric>& metrics, const ScoreOptions& options) {
    ScoreTable table;
    table.metrics = metrics;
    table.triplets = triplets;
    table.rows.resize(triplets.size() * 2 * metrics.size());
    for (std::size_t t = 0; t < triplets.size(); ++t) {
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t m = 0; m < metrics.size(); ++m) {
                auto& row = table.rows[(t * 2 + r) * metrics.size() + m];
                row.triplet = t;
                row.role = r == 0 ? PairRole::Positive : PairRole::Negative;
                row.metric = metrics[m];
            }
        }
    }

    // Each worker fills its own slots, so the table does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < table.rows.size(); i = next++) {
            auto& row = table.rows[i];
            const Triplet& t = triplets[row.triplet];
            const Submission& other = row.role == PairRole::Positive ? t.pos2 : t.neg;
            try {
                row.result = score_pair(row.metric, t.pos1.unit(), other.unit(), options.metric);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, table.rows.size())));
    std::vector<std::thread> workers;
    for (unsigned j = 1; j < jobs; ++j) workers.emplace_back(work);
    work();
    for (auto& w : workers) w.join();
    return table;
}

EffectSize cohens_d(const std::vector<double>& pos, const std::vector<double>& neg) {
    if (pos.size() < 2 || neg.size() < 2) throw InsufficientData("Cohen's d needs at least two scores per group");
    EffectSize e;
    e.n_pos = pos.size();
    e.n_neg = neg.size();
    e.mean_pos = mean(pos);
    e.mean_neg = mean(neg);
    const auto n1 = static_cast<double>(pos.size());
    const auto n2 = static_cast<double>(neg.size());
    const double pooled = ((n1 - 1) * sample_variance(pos, e.mean_pos) + (n2 - 1) * sample_variance(neg, e.mean_neg)) / (n1 + n2 - 2);
    e.pooled_sd = std::sqrt(pooled);
    if (!(e.pooled_sd > 0.0)) throw DegenerateVariance("pooled standard deviation is zero");
    e.d = (e.mean_pos - e.mean_neg) / e.pooled_sd;
    return e;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: vectors differ in length");
    if (x.size() < 2) throw InsufficientData("pearson needs at least two points");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw DegenerateVariance("pearson: constant vector");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<EffectSizeRow> effect_sizes(const ScoreTable& table, const std::string& language_pair) {
    std::vector<EffectSizeRow> out;
    for (std::size_t m = 0; m < table.metrics.size(); ++m) {
        EffectSizeRow row;
        row.language_pair = language_pair;
        row.metric = table.metrics[m];
        std::vector<double> pos;
        std::vector<double> neg;
        for (std::size_t t = 0; t < table.triplets.size(); ++t) {
            const auto& p = table.at(t, PairRole::Positive, m);
            const auto& n = table.at(t, PairRole::Negative, m);
            if (p.result) pos.push_back(p.result->score);
            if (n.result) neg.push_back(n.result->score);
        }
        row.failures = 2 * table.triplets.size() - pos.size() - neg.size();
        row.effect.n_pos = pos.size();
        row.effect.n_neg = neg.size();
        if (!pos.empty()) row.effect.mean_pos = mean(pos);
        if (!neg.empty()) row.effect.mean_neg = mean(neg);
        try {
            row.effect = cohens_d(pos, neg);
        } catch (const Error& e) {
            row.note = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

CorrelationMatrix pearson_matrix(const std::vector<const ScoreTable*>& tables) {
    CorrelationMatrix cm;
    if (tables.empty()) return cm;
    cm.metrics = tables.front()->metrics;
    const std::size_t k = cm.metrics.size();
    for (const auto* t : tables) {
        if (t->metrics != cm.metrics) throw std::invalid_argument("pearson_matrix: tables use different metrics");
    }
    cm.r.assign(k, std::vector<std::optional<double>>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            std::vector<double> x;
            std::vector<double> y;
            for (const auto* table : tables) {
                for (std::size_t i = 0; i < table->triplets.size() * 2; ++i) {
                    const auto& ra = table->rows[i * k + a];
                    const auto& rb = table->rows[i * k + b];
                    if (ra.result && rb.result) {
                        x.push_back(ra.result->score);
                        y.push_back(rb.result->score);
                    }
                }
            }
            cm.r[a][b] = cm.r[b][a] = a == b ? (maybe_pearson(x, y) ? std::optional<double>(1.0) : std::nullopt)
                                             : maybe_pearson(x, y);
        }
    }
    return cm;
}

CorrelationMatrix pearson_matrix(const std::vector<EffectSizeRow>& rows, const std::vector<Metric>& metrics) {
    std::vector<std::string> pairs;
    for (const auto& r : rows) {
        if (std::find(pairs.begin(), pairs.end(), r.language_pair) == pairs.end()) pairs.push_back(r.language_pair);
    }
    auto lookup = [&](const std::string& pair, Metric m) -> std::optional<double> {
        for (const auto& r : rows) {
            if (r.language_pair == pair && r.metric == m) return r.effect.d;
        }
        return std::nullopt;
    };
    const std::size_t k = metrics.size();
    CorrelationMatrix cm;
    cm.metrics = metrics;
    cm.r.assign(k, std::vector<std::optional<double>>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            std::vector<double> x;
            std::vector<double> y;
            for (const auto& pair : pairs) {
                const auto da = lookup(pair, metrics[a]);
                const auto db = lookup(pair, metrics[b]);
                if (da && db) {
                    x.push_back(*da);
                    y.push_back(*db);
                }
            }
            cm.r[a][b] = cm.r[b][a] = a == b ? (maybe_pearson(x, y) ? std::optional<double>(1.0) : std::nullopt)
                                             : maybe_pearson(x, y);
        }
    }
    return cm;
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

void emit_report(const ReportInputs& inputs, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    auto find = [&](const std::string& pair, Metric m) -> const EffectSizeRow* {
        for (const auto& r : inputs.effects) {
            if (r.language_pair == pair && r.metric == m) return &r;
        }
        return nullptr;
    };

    std::ostringstream table;
    table << "language_pair";
    for (Metric m : inputs.metrics) table << ',' << display_name(m);
    table << '\n';
    std::vector<double> sums(inputs.metrics.size(), 0.0);
    std::vector<std::size_t> counts(inputs.metrics.size(), 0);
    for (const auto& pair : inputs.language_pairs) {
        table << csv_escape(pair);
        for (std::size_t m = 0; m < inputs.metrics.size(); ++m) {
            const auto* row = find(pair, inputs.metrics[m]);
            if (row == nullptr || !row->effect.d) {
                table << ",NA";
                continue;
            }
            table << ',' << format_fixed(*row->effect.d);
            sums[m] += *row->effect.d;
            ++counts[m];
        }
        table << '\n';
    }
    if (!inputs.language_pairs.empty()) {
        table << "Average";
        for (std::size_t m = 0; m < inputs.metrics.size(); ++m) {
            table << ',' << cell(counts[m] ? std::optional<double>(sums[m] / static_cast<double>(counts[m])) : std::nullopt);
        }
        table << '\n';
    }
    write_file(dir / "effect_sizes.csv", table.str());

    std::ostringstream detail;
    detail << "language_pair,metric,cohens_d,n_pos,n_neg,failures,mean_pos,mean_neg,pooled_sd,note\n";
    for (const auto& pair : inputs.language_pairs) {
        for (Metric m : inputs.metrics) {
            const auto* row = find(pair, m);
            if (!row) continue;
            detail << csv_escape(pair) << ',' << display_name(m) << ',' << cell(row->effect.d) << ',' << row->effect.n_pos
                   << ',' << row->effect.n_neg << ',' << row->failures << ',' << format_fixed(row->effect.mean_pos) << ','
                   << format_fixed(row->effect.mean_neg) << ',' << format_fixed(row->effect.pooled_sd) << ','
                   << csv_escape(row->note) << '\n';
        }
    }
    write_file(dir / "effect_sizes_detail.csv", detail.str());

    std::ostringstream corr;
    corr << "metric";
    for (Metric m : inputs.correlation.metrics) corr << ',' << display_name(m);
    corr << '\n';
    for (std::size_t a = 0; a < inputs.correlation.metrics.size(); ++a) {
        corr << display_name(inputs.correlation.metrics[a]);
        for (std::size_t b = 0; b < inputs.correlation.metrics.size(); ++b) corr << ',' << cell(inputs.correlation.r[a][b]);
        corr << '\n';
    }
    write_file(dir / "correlation.csv", corr.str());

    std::ostringstream scores;
    scores << "language_pair,triplet,problem_id,role,reference,candidate,metric,score,ged,d_max,solver,error\n";
    for (const auto& [pair, tbl] : inputs.tables) {
        for (const auto& row : tbl->rows) {
            const Triplet& t = tbl->triplets[row.triplet];
            const Submission& other = row.role == PairRole::Positive ? t.pos2 : t.neg;
            scores << csv_escape(pair) << ',' << row.triplet << ',' << csv_escape(t.problem_id()) << ',' << to_string(row.role)
                   << ',' << csv_escape(t.pos1.submission_id) << ',' << csv_escape(other.submission_id) << ','
                   << to_string(row.metric) << ',';
            if (row.result) {
                scores << format_fixed(row.result->score) << ',';
                if (row.metric == Metric::Cssg) {
                    scores << row.result->ged << ',' << row.result->d_max << ',' << to_string(row.result->solver);
                } else {
                    scores << ",,";
                }
                scores << ",\n";
            } else {
                scores << "NA,,,," << csv_escape(row.error) << '\n';
            }
        }
    }
    if (inputs.write_scores) write_file(dir / "scores.csv", scores.str());
    write_file(dir / "manifest.json", inputs.manifest_json);
}

} // namespace cssg
