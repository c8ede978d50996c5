#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "cssg/errors.hpp"
#include "cssg/eval.hpp"
#include "support.hpp"

namespace cssg {
namespace {

namespace fs = std::filesystem;

std::string line(const std::string& problem, const std::string& lang, const std::string& verdict,
                 const std::string& source, const std::string& id) {
    nlohmann::json j{{"problem_id", problem}, {"language", lang}, {"verdict", verdict}, {"source", source},
                     {"submission_id", id}};
    return j.dump() + "\n";
}

Submission sub(const std::string& problem, Verdict verdict, const std::string& source, const std::string& id,
               Language lang = Language::Python) {
    return {problem, lang, verdict, source, id};
}

Corpus ingest_text(const std::string& text) {
    std::istringstream in(text);
    return ingest(in);
}

Corpus desk() { return ingest(testing::data_dir() / "desk_corpus" / "corpus.jsonl"); }

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("cssg_eval_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) { return testing::read_file(p); }

TEST(Ingest, ValidLines) {
    const auto corpus = ingest_text(line("p", "python", "correct", "x = 1\n", "a") +
                                    line("p", "python", "correct", "x = 2\n", "b") +
                                    line("p", "java", "incorrect", "class A {}\n", "c"));
    EXPECT_EQ(corpus.submissions.size(), 3u);
    EXPECT_EQ(corpus.skipped, 0u);
    EXPECT_EQ(corpus.submissions[2].language, Language::Java);
    EXPECT_EQ(corpus.submissions[2].verdict, Verdict::Incorrect);
}

TEST(Ingest, SkipsMalformedLine) {
    const auto corpus = ingest_text(line("p", "python", "correct", "x = 1\n", "a") + "{not json\n" +
                                    line("p", "python", "correct", "x = 2\n", "b") +
                                    line("p", "python", "incorrect", "x = 3\n", "c"));
    EXPECT_EQ(corpus.submissions.size(), 3u);
    EXPECT_EQ(corpus.skipped, 1u);
    ASSERT_EQ(corpus.diagnostics.size(), 1u);
    EXPECT_NE(corpus.diagnostics[0].find("line 2"), std::string::npos);
}

TEST(Ingest, RejectsBadFields) {
    const auto corpus = ingest_text(line("p", "python", "maybe", "x\n", "a") + line("p", "cobol", "correct", "x\n", "b") +
                                    line("p", "python", "correct", "", "c") + line("p", "python", "correct", "y\n", "d"));
    EXPECT_EQ(corpus.submissions.size(), 1u);
    EXPECT_EQ(corpus.skipped, 3u);
}

TEST(Ingest, Errors) {
    EXPECT_THROW(ingest("/nonexistent/corpus.jsonl"), IoError);
    EXPECT_THROW(ingest_text("garbage\n\n"), EmptyCorpus);
}

TEST(Ingest, DeskCorpusSize) {
    const auto corpus = desk();
    EXPECT_EQ(corpus.submissions.size(), 180u);
    EXPECT_EQ(corpus.skipped, 0u);
    EXPECT_EQ(corpus.hash, desk().hash);
}

TEST(Triplets, TwoCorrectOneIncorrect) {
    const std::vector<Submission> subs{sub("p", Verdict::Correct, "a = 1\n", "1"), sub("p", Verdict::Correct, "b = 1\n", "2"),
                                       sub("p", Verdict::Incorrect, "c = 1\n", "3")};
    const auto set = build_triplets(subs, {});
    ASSERT_EQ(set.triplets.size(), 1u);
    const auto& t = set.triplets[0];
    EXPECT_EQ(t.neg.submission_id, "3");
    EXPECT_NE(t.pos1.submission_id, t.pos2.submission_id);
    EXPECT_TRUE(set.skipped.empty());
}

TEST(Triplets, SingleCorrectIsSkipped) {
    const std::vector<Submission> subs{sub("p", Verdict::Correct, "a = 1\n", "1"), sub("p", Verdict::Incorrect, "c\n", "3")};
    const auto set = build_triplets(subs, {});
    EXPECT_TRUE(set.triplets.empty());
    ASSERT_EQ(set.skipped.size(), 1u);
    EXPECT_EQ(set.skipped[0].first, "p");
    EXPECT_FALSE(set.skipped[0].second.empty());
}

TEST(Triplets, DeterministicPerSeed) {
    const auto corpus = desk();
    auto ids = [](const TripletSet& s) {
        std::vector<std::string> out;
        for (const auto& t : s.triplets) out.push_back(t.pos1.submission_id + t.pos2.submission_id + t.neg.submission_id);
        return out;
    };
    TripletOptions options;
    options.seed = 42;
    const auto a = build_triplets(corpus.submissions, options);
    const auto b = build_triplets(corpus.submissions, options);
    EXPECT_EQ(ids(a), ids(b));
    options.seed = 43;
    EXPECT_NE(ids(a), ids(build_triplets(corpus.submissions, options)));
}

TEST(Triplets, InvariantsHoldOnDeskCorpus) {
    const auto corpus = desk();
    for (const auto setting : {Setting::Monolingual, Setting::Crosslingual}) {
        for (const auto target : {Language::Python, Language::Java}) {
            for (const auto source : {Language::Python, Language::Java}) {
                if (setting == Setting::Crosslingual && source == target) continue;
                if (setting == Setting::Monolingual && source != target) continue;
                TripletOptions options{setting, target, source, 0, 1};
                const auto set = build_triplets(corpus.submissions, options);
                EXPECT_EQ(set.triplets.size(), 30u);
                for (const auto& t : set.triplets) {
                    EXPECT_EQ(t.pos1.problem_id, t.pos2.problem_id);
                    EXPECT_EQ(t.pos1.problem_id, t.neg.problem_id);
                    EXPECT_EQ(t.pos1.verdict, Verdict::Correct);
                    EXPECT_EQ(t.pos2.verdict, Verdict::Correct);
                    EXPECT_EQ(t.neg.verdict, Verdict::Incorrect);
                    EXPECT_EQ(t.pos1.language, target);
                    EXPECT_EQ(t.pos2.language, source);
                    EXPECT_EQ(t.neg.language, source);
                    EXPECT_NE(t.pos1.submission_id, t.pos2.submission_id);
                }
            }
        }
    }
}

TEST(Triplets, PerProblemSamplesWithoutReplacement) {
    std::vector<Submission> subs;
    for (int i = 0; i < 6; ++i) subs.push_back(sub("p", Verdict::Correct, "a = " + std::to_string(i) + "\n", "c" + std::to_string(i)));
    for (int i = 0; i < 2; ++i) subs.push_back(sub("p", Verdict::Incorrect, "b = " + std::to_string(i) + "\n", "i" + std::to_string(i)));
    TripletOptions options;
    options.per_problem = 5;
    const auto set = build_triplets(subs, options);
    ASSERT_EQ(set.triplets.size(), 2u); // limited by the incorrect pool
    std::set<std::string> used;
    for (const auto& t : set.triplets) {
        EXPECT_TRUE(used.insert(t.pos1.submission_id).second);
        EXPECT_TRUE(used.insert(t.pos2.submission_id).second);
        EXPECT_TRUE(used.insert(t.neg.submission_id).second);
    }
}

TEST(Labels, LanguagePairs) {
    EXPECT_EQ(language_pair_label(Setting::Monolingual, Language::Python, Language::Python), "Python");
    EXPECT_EQ(language_pair_label(Setting::Crosslingual, Language::Python, Language::Java), "(Python, Java)");
}

TEST(ScoreAll, OneTripletFourMetrics) {
    const std::vector<Submission> subs{sub("p", Verdict::Correct, "x = 1\nprint(x)\n", "1"),
                                       sub("p", Verdict::Correct, "x = 1\nprint(x)\n", "2"),
                                       sub("p", Verdict::Incorrect, "y = 2\n", "3")};
    const auto set = build_triplets(subs, {});
    const std::vector<Metric> metrics(std::begin(kAllMetrics), std::end(kAllMetrics));
    const auto table = score_all(set.triplets, metrics);
    EXPECT_EQ(table.rows.size(), 8u);
    for (std::size_t m = 0; m < metrics.size(); ++m) {
        const auto& pos = table.at(0, PairRole::Positive, m);
        ASSERT_TRUE(pos.result);
        EXPECT_NEAR(pos.result->score, 1.0, metrics[m] == Metric::Bleu ? 1e-3 : 0.0);
        ASSERT_TRUE(table.at(0, PairRole::Negative, m).result);
        EXPECT_LT(table.at(0, PairRole::Negative, m).result->score, 1.0);
    }
}

TEST(ScoreAll, MatchesSinglePairScoringAndIsJobIndependent) {
    const auto corpus = desk();
    auto set = build_triplets(corpus.submissions, {});
    set.triplets.resize(6);
    const std::vector<Metric> metrics(std::begin(kAllMetrics), std::end(kAllMetrics));
    const auto serial = score_all(set.triplets, metrics, {{}, 1});
    const auto parallel = score_all(set.triplets, metrics, {{}, 4});
    ASSERT_EQ(serial.rows.size(), parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        const auto& row = serial.rows[i];
        const auto& t = set.triplets[row.triplet];
        const auto& other = row.role == PairRole::Positive ? t.pos2 : t.neg;
        const auto expected = score_pair(row.metric, t.pos1.unit(), other.unit());
        ASSERT_TRUE(row.result);
        EXPECT_EQ(row.result->score, expected.score);
        EXPECT_EQ(row.result->score, parallel.rows[i].result->score);
    }
}

TEST(ScoreAll, FailuresAreAccounted) {
    const std::vector<Submission> subs{
        sub("p", Verdict::Correct, "x = 1\n", "1"), sub("p", Verdict::Correct, "x = 2\n", "2"),
        sub("p", Verdict::Incorrect, "x = '\xff'\n", "3"),
        sub("q", Verdict::Correct, "a = 1\n", "4"), sub("q", Verdict::Correct, "a = b\n", "5"),
        sub("q", Verdict::Incorrect, "a = c\n", "6"),
        sub("r", Verdict::Correct, "k = 1\nprint(k)\n", "7"), sub("r", Verdict::Correct, "k = 3\n", "8"),
        sub("r", Verdict::Incorrect, "k = k\n", "9"),
    };
    const auto set = build_triplets(subs, {});
    ASSERT_EQ(set.triplets.size(), 3u);
    const auto table = score_all(set.triplets, {Metric::Cssg, Metric::Jaccard});
    EXPECT_EQ(table.failures(Metric::Cssg), 1u);
    for (const auto& row : effect_sizes(table, "Python")) {
        EXPECT_EQ(row.effect.n_pos + row.effect.n_neg + row.failures, 2 * set.triplets.size());
    }
}

TEST(CohensD, HandComputedValue) {
    const auto e = cohens_d({0.8, 0.9}, {0.5, 0.6});
    ASSERT_TRUE(e.d);
    EXPECT_NEAR(*e.d, 4.2426, 1e-3);
    EXPECT_NEAR(e.pooled_sd, std::sqrt(0.005), 1e-12);
}

TEST(CohensD, IdenticalDistributionsGiveZero) {
    const auto e = cohens_d({0.1, 0.4, 0.7}, {0.1, 0.4, 0.7});
    ASSERT_TRUE(e.d);
    EXPECT_EQ(*e.d, 0.0);
}

TEST(CohensD, TranslationInvariant) {
    const std::vector<double> pos{0.3, 0.5, 0.9, 0.4};
    const std::vector<double> neg{0.2, 0.1, 0.6};
    auto shifted = [](std::vector<double> v, double c) {
        for (auto& x : v) x += c;
        return v;
    };
    EXPECT_NEAR(*cohens_d(pos, neg).d, *cohens_d(shifted(pos, 0.25), shifted(neg, 0.25)).d, 1e-12);
}

TEST(CohensD, SignFollowsMeans) {
    EXPECT_LT(*cohens_d({0.1, 0.2}, {0.5, 0.7}).d, 0.0);
    EXPECT_GT(*cohens_d({0.5, 0.7}, {0.1, 0.2}).d, 0.0);
}

TEST(CohensD, Errors) {
    EXPECT_THROW(cohens_d({0.5}, {0.1, 0.2}), InsufficientData);
    EXPECT_THROW(cohens_d({0.5, 0.5}, {0.1, 0.1}), DegenerateVariance);
}

TEST(Pearson, AffineAndSelf) {
    const std::vector<double> x{0.1, 0.5, 0.3, 0.9, 0.7};
    std::vector<double> y;
    for (double v : x) y.push_back(2 * v + 1);
    EXPECT_NEAR(pearson(x, y), 1.0, 1e-12);
    EXPECT_NEAR(pearson(x, x), 1.0, 1e-12);
}

TEST(Pearson, ShuffledVectorsAreUncorrelated) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(1000);
    for (auto& v : x) v = u(rng);
    auto y = x;
    std::shuffle(y.begin(), y.end(), rng);
    EXPECT_LT(std::abs(pearson(x, y)), 0.1);
}

TEST(Pearson, Errors) {
    EXPECT_THROW(pearson({1.0}, {2.0}), InsufficientData);
    EXPECT_THROW(pearson({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), DegenerateVariance);
}

TEST(PearsonMatrix, SymmetricWithUnitDiagonal) {
    const auto corpus = desk();
    auto set = build_triplets(corpus.submissions, {});
    set.triplets.resize(8);
    const auto table = score_all(set.triplets, {Metric::Bleu, Metric::Jaccard, Metric::Tsed});
    const auto m = pearson_matrix(table);
    ASSERT_EQ(m.r.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_TRUE(m.r[i][i]);
        EXPECT_EQ(*m.r[i][i], 1.0);
        for (std::size_t j = 0; j < 3; ++j) {
            ASSERT_TRUE(m.r[i][j]);
            EXPECT_EQ(*m.r[i][j], *m.r[j][i]);
            EXPECT_LE(std::abs(*m.r[i][j]), 1.0);
        }
    }
}

TEST(Format, SixDecimals) {
    EXPECT_EQ(format_fixed(0.5), "0.500000");
    EXPECT_EQ(format_fixed(-0.0000001), "0.000000");
    EXPECT_EQ(format_fixed(-1.25), "-1.250000");
}

TEST(Report, EmptyRunWritesHeaders) {
    const auto dir = scratch("empty");
    ReportInputs inputs;
    inputs.metrics = {Metric::Bleu, Metric::Cssg};
    inputs.manifest_json = "{}\n";
    emit_report(inputs, dir);
    EXPECT_EQ(slurp(dir / "effect_sizes.csv"), "language_pair,BLEU,CSSG\n");
    EXPECT_TRUE(fs::exists(dir / "correlation.csv"));
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
}

TEST(Report, LayoutAndDeterminism) {
    const auto corpus = desk();
    const std::vector<Metric> metrics{Metric::Bleu, Metric::Jaccard, Metric::Tsed};
    std::vector<ScoreTable> tables;
    std::vector<std::string> pairs;
    for (const auto lang : {Language::Python, Language::Java}) {
        TripletOptions options{Setting::Monolingual, lang, lang, 0, 1};
        auto set = build_triplets(corpus.submissions, options);
        set.triplets.resize(5);
        tables.push_back(score_all(set.triplets, metrics));
        pairs.push_back(language_pair_label(Setting::Monolingual, lang, lang));
    }
    ReportInputs inputs;
    inputs.metrics = metrics;
    inputs.language_pairs = pairs;
    std::vector<const ScoreTable*> pointers;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        for (auto& row : effect_sizes(tables[i], pairs[i])) inputs.effects.push_back(row);
        inputs.tables.emplace_back(pairs[i], &tables[i]);
        pointers.push_back(&tables[i]);
    }
    inputs.correlation = pearson_matrix(pointers);
    inputs.manifest_json = "{\"seed\": 0}\n";

    const auto a = scratch("a");
    const auto b = scratch("b");
    emit_report(inputs, a);
    emit_report(inputs, b);
    for (const char* file : {"effect_sizes.csv", "effect_sizes_detail.csv", "correlation.csv", "scores.csv",
                             "manifest.json"}) {
        EXPECT_EQ(slurp(a / file), slurp(b / file)) << file;
    }
    std::istringstream csv(slurp(a / "effect_sizes.csv"));
    std::vector<std::string> lines;
    for (std::string l; std::getline(csv, l);) lines.push_back(l);
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "language_pair,BLEU,Jaccard,TSED");
    EXPECT_EQ(lines[1].substr(0, 7), "Python,");
    EXPECT_EQ(lines[2].substr(0, 5), "Java,");
    EXPECT_EQ(lines[3].substr(0, 8), "Average,");
}

TEST(Report, UnwritableDirectory) {
    ReportInputs inputs;
    inputs.metrics = {Metric::Bleu};
    EXPECT_THROW(emit_report(inputs, "/proc/cssg-no-such-dir"), IoError);
}

} // namespace
} // namespace cssg
