#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cssg/frontend.hpp"
#include "cssg/metrics.hpp"

namespace cssg {

enum class Verdict : uint8_t { Correct, Incorrect };

std::string_view to_string(Verdict verdict);

struct Submission {
    std::string problem_id;
    Language language = Language::Python;
    Verdict verdict = Verdict::Correct;
    std::string source;
    std::string submission_id;

    SourceUnit unit() const { return {language, source, submission_id}; }
};

struct Corpus {
    std::vector<Submission> submissions;
    std::size_t skipped = 0;
    std::vector<std::string> diagnostics; // one per skipped line
    uint64_t hash = 0;                    // FNV-1a of the raw bytes
};

/**
 * Reads a JSONL corpus with one Submission object per line. Malformed
 * lines are skipped and reported. Throws IoError when the file cannot be
 * read and EmptyCorpus when no valid submission remains.
 */
Corpus ingest(const std::filesystem::path& path);
Corpus ingest(std::istream& in);

enum class Setting : uint8_t { Monolingual, Crosslingual };

std::string_view to_string(Setting setting);
std::optional<Setting> setting_from_string(std::string_view name);

struct Triplet {
    std::size_t id = 0;
    Submission pos1;
    Submission pos2;
    Submission neg;
    Setting setting = Setting::Monolingual;
    Language target_lang = Language::Python;
    Language source_lang = Language::Python;

    const std::string& problem_id() const { return pos1.problem_id; }
};

struct TripletOptions {
    Setting setting = Setting::Monolingual;
    Language target_lang = Language::Python;
    Language source_lang = Language::Python; // ignored for monolingual runs
    uint64_t seed = 0;
    std::size_t per_problem = 1;
};

struct TripletSet {
    std::vector<Triplet> triplets;
    std::vector<std::pair<std::string, std::string>> skipped; // (problem_id, reason)
};

/// Samples triplets without replacement, problem by problem in id order.
TripletSet build_triplets(const std::vector<Submission>& submissions, const TripletOptions& options);

/// Row label of a language pair: "Python" or "(Python, Java)" as (target, source).
std::string language_pair_label(Setting setting, Language target, Language source);

enum class PairRole : uint8_t { Positive, Negative };

std::string_view to_string(PairRole role);

struct PairScore {
    std::size_t triplet = 0;
    PairRole role = PairRole::Positive;
    Metric metric = Metric::Cssg;
    std::optional<SimilarityResult> result; // empty when scoring failed
    std::string error;
};

struct ScoreTable {
    std::vector<Metric> metrics;
    std::vector<Triplet> triplets;
    std::vector<PairScore> rows; // ordered by (triplet, role, metric)

    const PairScore& at(std::size_t triplet, PairRole role, std::size_t metric_index) const;
    std::size_t failures(Metric metric) const;
};

struct ScoreOptions {
    MetricOptions metric;
    unsigned jobs = 0; // 0 = hardware concurrency
};

/// Scores the positive (pos1, pos2) and negative (pos1, neg) pair of every triplet.
ScoreTable score_all(const std::vector<Triplet>& triplets, const std::vector<Metric>& metrics,
                     const ScoreOptions& options = {});

struct EffectSize {
    std::optional<double> d; // empty when undefined
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    double mean_pos = 0.0;
    double mean_neg = 0.0;
    double pooled_sd = 0.0;
};

/// Throws InsufficientData for fewer than two scores per group and DegenerateVariance when the pooled SD is 0.
EffectSize cohens_d(const std::vector<double>& pos, const std::vector<double>& neg);

/// Pearson r. Throws InsufficientData below two points and DegenerateVariance for a constant vector.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

struct EffectSizeRow {
    std::string language_pair;
    Metric metric = Metric::Cssg;
    EffectSize effect;
    std::size_t failures = 0;
    std::string note; // reason when `effect.d` is undefined
};

/// One row per metric; undefined effect sizes carry a note instead of throwing.
std::vector<EffectSizeRow> effect_sizes(const ScoreTable& table, const std::string& language_pair);

struct CorrelationMatrix {
    std::vector<Metric> metrics;
    std::vector<std::vector<std::optional<double>>> r; // empty cells are undefined
};

/// Correlation of per-pair scores with pairwise-complete deletion, pooled over `tables` (same metric list).
CorrelationMatrix pearson_matrix(const std::vector<const ScoreTable*>& tables);
inline CorrelationMatrix pearson_matrix(const ScoreTable& table) { return pearson_matrix(std::vector{&table}); }

/// Correlation of effect sizes across language pairs.
CorrelationMatrix pearson_matrix(const std::vector<EffectSizeRow>& rows, const std::vector<Metric>& metrics);

/// Fixed six-decimal rendering used by every report.
std::string format_fixed(double value);

struct ReportInputs {
    std::vector<Metric> metrics;
    std::vector<std::string> language_pairs; // row order
    std::vector<EffectSizeRow> effects;
    CorrelationMatrix correlation;
    std::vector<std::pair<std::string, const ScoreTable*>> tables; // per language pair
    std::string manifest_json;
    bool write_scores = true;
};

/**
 * Writes effect_sizes.csv, effect_sizes_detail.csv, correlation.csv,
 * scores.csv (unless disabled) and manifest.json into `dir`. Throws IoError.
 */
void emit_report(const ReportInputs& inputs, const std::filesystem::path& dir);

} // namespace cssg
