#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace cssg {
namespace {

namespace fs = std::filesystem;
using testing::golden;

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("cssg_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write(const fs::path& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

std::string desk(const std::string& problem, const std::string& file) {
    return (testing::data_dir() / "desk_corpus" / "problems" / problem / file).string();
}

double score_of(const std::string& out, const std::string& metric) {
    std::istringstream in(out);
    for (std::string name, rest; in >> name;) {
        double value = 0.0;
        in >> value;
        std::getline(in, rest);
        if (name == metric) return value;
    }
    return -1.0;
}

// Numeric cells of a CSV, in reading order.
std::vector<double> numbers(const std::string& csv) {
    std::vector<double> out;
    std::string cell;
    for (char c : csv + "\n") {
        if (c != ',' && c != '\n') {
            cell += c;
            continue;
        }
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (!cell.empty() && *end == '\0') out.push_back(v);
        cell.clear();
    }
    return out;
}

TEST(Cli, CompareFileWithItself) {
    const auto f = desk("p05_fibonacci", "correct_1.py");
    const auto r = run({"compare", f, f, "--metric", "cssg"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("cssg 1.000000 ged=0 dmax=", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("solver=exact"), std::string::npos);
}

TEST(Cli, CompareDataflowVariants) {
    const auto r = run({"compare", golden("dataflow_x.py").string(), golden("dataflow_y.py").string(), "--metric", "cssg,tsed"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LT(score_of(r.out, "cssg"), 1.0);
    EXPECT_GE(score_of(r.out, "cssg"), 0.0);
    EXPECT_NE(r.out.find("tsed 1.000000"), std::string::npos) << r.out;
}

TEST(Cli, CompareAcrossLanguages) {
    const auto r = run({"compare", desk("p08_gcd", "correct_1.py"), desk("p08_gcd", "correct_1.java"), "--metric", "cssg"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double s = score_of(r.out, "cssg");
    EXPECT_GT(s, 0.0);
    EXPECT_LT(s, 1.0);
}

TEST(Cli, ExactBudgetFromEnvironment) {
    const auto a = golden("recursive.py").string();
    const auto b = golden("iterative.py").string();
    ::setenv("CSSG_EXACT_BUDGET", "4", 1);
    const auto env = run({"compare", a, b, "--metric", "cssg"});
    const auto flag = run({"compare", a, b, "--metric", "cssg", "--exact-budget", "80"});
    ::unsetenv("CSSG_EXACT_BUDGET");
    EXPECT_NE(env.out.find("solver=approx"), std::string::npos) << env.out;
    EXPECT_NE(flag.out.find("solver=exact"), std::string::npos) << flag.out;
}

TEST(Cli, GraphShowsRecursiveCallEdge) {
    const auto r = run({"graph", golden("recursive.py").string(), "--format", "dot"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("kind=call"), std::string::npos) << r.out;
}

TEST(Cli, EmptyFileGraph) {
    const auto dir = scratch("empty");
    const auto r = run({"graph", write(dir / "empty.py", "").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["nodes"].size(), 2u);
    EXPECT_EQ(doc["edges"].size(), 1u);
}

TEST(Cli, GraphJsonValidates) {
    const auto dir = scratch("validate");
    const auto g = run({"graph", desk("p10_palindrome", "correct_2.java"), "--format", "json"});
    ASSERT_EQ(g.code, 0);
    const auto v = run({"validate", write(dir / "g.json", g.out).string()});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.out.rfind("valid", 0), 0u);
    const auto bad = run({"validate", write(dir / "bad.json", "{\"nodes\": 3}").string()});
    EXPECT_EQ(bad.code, cli::kParse);
}

TEST(Cli, ExitCodes) {
    const auto dir = scratch("codes");
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"compare", "only-one.py"}).code, cli::kUsage);
    EXPECT_EQ(run({"compare", "/nonexistent/a.py", "/nonexistent/b.py"}).code, cli::kIo);
    const auto bad = write(dir / "bad.py", "x = '\xff'\n");
    EXPECT_EQ(run({"compare", bad.string(), bad.string()}).code, cli::kParse);
    const auto cpp = write(dir / "m.cpp", "int main() { return 0; }\n");
    EXPECT_EQ(run({"graph", cpp.string()}).code, cli::kParse);
    const auto txt = write(dir / "notes.txt", "hello\n");
    EXPECT_EQ(run({"graph", txt.string()}).code, cli::kUsage);
}

TEST(Cli, EvalIsDeterministic) {
    const auto corpus = (testing::data_dir() / "desk_corpus" / "corpus.jsonl").string();
    const auto a = scratch("eval_a");
    const auto b = scratch("eval_b");
    const std::vector<std::string> common{"eval", "--corpus", corpus, "--metric", "bleu,jaccard", "--seed", "7"};
    auto args_a = common;
    args_a.insert(args_a.end(), {"--out", a.string(), "--jobs", "1"});
    auto args_b = common;
    args_b.insert(args_b.end(), {"--out", b.string(), "--jobs", "3"});
    ASSERT_EQ(run(args_a).code, 0);
    ASSERT_EQ(run(args_b).code, 0);
    for (const char* file : {"effect_sizes.csv", "correlation.csv", "scores.csv", "effect_sizes_detail.csv"}) {
        EXPECT_EQ(testing::read_file(a / file), testing::read_file(b / file)) << file;
    }
    const auto manifest = nlohmann::json::parse(testing::read_file(a / "manifest.json"));
    EXPECT_EQ(manifest["flags"]["seed"], 7);
}

TEST(Cli, EvalWithoutIncorrectSubmissionsExitsFour) {
    const auto dir = scratch("no_incorrect");
    std::string corpus;
    for (int i = 0; i < 3; ++i) {
        corpus += nlohmann::json{{"problem_id", "p"},
                                 {"language", "python"},
                                 {"verdict", "correct"},
                                 {"source", "x = " + std::to_string(i) + "\n"},
                                 {"submission_id", std::to_string(i)}}
                      .dump() +
                  "\n";
    }
    const auto path = write(dir / "corpus.jsonl", corpus);
    const auto r = run({"eval", "--corpus", path.string(), "--out", (dir / "out").string()});
    EXPECT_EQ(r.code, cli::kEmpty);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(testing::read_file(dir / "out" / "effect_sizes.csv"), "language_pair,BLEU,Jaccard,TSED,CSSG\n");
}

TEST(Cli, ReportRebuildsEffectSizes) {
    const auto corpus = (testing::data_dir() / "desk_corpus" / "corpus.jsonl").string();
    const auto a = scratch("report_src");
    const auto b = scratch("report_dst");
    ASSERT_EQ(run({"eval", "--corpus", corpus, "--metric", "jaccard,bleu", "--out", a.string()}).code, 0);
    const auto r = run({"report", "--scores", (a / "scores.csv").string(), "--out", b.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    // scores.csv holds 6-decimal values, so rebuilt statistics agree to rounding.
    for (const char* file : {"effect_sizes.csv", "correlation.csv"}) {
        const auto original = numbers(testing::read_file(a / file));
        const auto rebuilt = numbers(testing::read_file(b / file));
        ASSERT_EQ(original.size(), rebuilt.size()) << file;
        ASSERT_FALSE(original.empty()) << file;
        for (std::size_t i = 0; i < original.size(); ++i) EXPECT_NEAR(original[i], rebuilt[i], 2e-6) << file;
    }
    EXPECT_EQ(testing::read_file(b / "effect_sizes.csv").substr(0, 26), "language_pair,Jaccard,BLEU");
}

} // namespace
} // namespace cssg
