#include <gtest/gtest.h>

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cssg/errors.hpp"
#include "cssg/frontend.hpp"
#include "support.hpp"

namespace cssg {
namespace {

using testing::desk_files;
using testing::load_unit;

SourceUnit py(std::string text) { return {Language::Python, std::move(text), "snippet.py"}; }

void collect(const AstNode& node, std::string_view kind, std::vector<const AstNode*>& out) {
    if (node.kind == kind) out.push_back(&node);
    for (const auto& c : node.children) collect(c, kind, out);
}

std::vector<const AstNode*> find_all(const AstNode& root, std::string_view kind) {
    std::vector<const AstNode*> out;
    collect(root, kind, out);
    return out;
}

std::size_t leaves(const AstNode& node) {
    if (node.is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : node.children) n += leaves(c);
    return n;
}

bool same_tree(const AstNode& a, const AstNode& b) {
    if (a.kind != b.kind || a.field != b.field || a.op != b.op || a.text != b.text || !(a.span == b.span) ||
        a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!same_tree(a.children[i], b.children[i])) return false;
    }
    return true;
}

std::vector<std::string> texts(const TokenStream& s) {
    std::vector<std::string> out;
    for (const auto& t : s.tokens) out.push_back(t.text);
    return out;
}

std::set<std::string> names(const std::vector<FunctionDecl>& decls) {
    std::set<std::string> out;
    for (const auto& d : decls) out.insert(d.name);
    return out;
}

TEST(Parse, AssignmentHasTwoLeaves) {
    const AstNode ast = parse(py("x = 1"));
    const auto assignments = find_all(ast, "assignment");
    ASSERT_EQ(assignments.size(), 1u);
    EXPECT_EQ(leaves(*assignments[0]), 2u);
}

TEST(Parse, FunctionDefinitionCarriesName) {
    const AstNode ast = parse(py("def f():\n return 1"));
    const auto defs = find_all(ast, "function_definition");
    ASSERT_EQ(defs.size(), 1u);
    ASSERT_NE(defs[0]->child("name"), nullptr);
    EXPECT_EQ(defs[0]->child("name")->text, "f");
}

TEST(Parse, CppIsFeatureGated) {
    const SourceUnit unit{Language::Cpp, "int main(){return 0;}", "m.cpp"};
    if (frontend_available(Language::Cpp)) {
        EXPECT_NO_THROW(parse(unit));
    } else {
        EXPECT_THROW(parse(unit), UnsupportedLanguage);
    }
}

TEST(Parse, KeepsErrorNodes) {
    const AstNode ast = parse(py("x = = 1\n"));
    EXPECT_FALSE(find_all(ast, "ERROR").empty());
}

TEST(Parse, RejectsInvalidUtf8) { EXPECT_THROW(parse(py("x = '\xff\xfe'\n")), ParseFailure); }

TEST(Parse, IsDeterministic) {
    for (const auto& path : desk_files(Language::Python)) {
        const auto unit = load_unit(path);
        EXPECT_TRUE(same_tree(parse(unit), parse(unit))) << path;
    }
}

TEST(Parse, SpansStayInsideInput) {
    std::function<void(const AstNode&, std::size_t, const std::string&)> check = [&](const AstNode& n, std::size_t size,
                                                                                    const std::string& file) {
        EXPECT_LE(n.span.start, n.span.end) << file;
        EXPECT_LE(n.span.end, size) << file;
        for (const auto& c : n.children) {
            EXPECT_TRUE(n.span.contains(c.span)) << file << " " << c.kind;
            check(c, size, file);
        }
    };
    for (const auto lang : {Language::Python, Language::Java}) {
        for (const auto& path : desk_files(lang)) {
            const auto unit = load_unit(path);
            check(parse(unit), unit.text.size(), path.string());
        }
    }
}

TEST(Languages, NamesAndExtensions) {
    EXPECT_EQ(language_from_string("PY"), Language::Python);
    EXPECT_EQ(language_from_string("java"), Language::Java);
    EXPECT_EQ(language_from_string("c++"), Language::Cpp);
    EXPECT_FALSE(language_from_string("rust"));
    EXPECT_EQ(language_from_extension("a/b.java"), Language::Java);
    EXPECT_EQ(language_from_extension("x.py"), Language::Python);
    EXPECT_FALSE(language_from_extension("x.txt"));
}

TEST(ExtractFunctions, TwoDefsAndLooseStatement) {
    const auto unit = py("def f():\n    return 1\n\ndef g(a):\n    return a\n\nprint(f())\n");
    const auto decls = extract_functions(parse(unit), unit.language);
    EXPECT_EQ(decls.size(), 3u);
    EXPECT_EQ(names(decls), (std::set<std::string>{"f", "g", "__main__"}));
}

TEST(ExtractFunctions, EmptyFileYieldsEmptyMain) {
    const auto unit = py("");
    const auto decls = extract_functions(parse(unit), unit.language);
    ASSERT_EQ(decls.size(), 1u);
    EXPECT_EQ(decls[0].name, kMainWrapperName);
    EXPECT_TRUE(decls[0].is_toplevel_wrapper);
    EXPECT_TRUE(decls[0].body.children.empty());
}

TEST(ExtractFunctions, TopLevelStatementsGoToMainOnce) {
    const auto unit = py("import sys\ndef f(x):\n    return x\na = 1\nif a:\n    print(f(a))\n");
    const auto decls = extract_functions(parse(unit), unit.language);
    std::size_t main_statements = 0;
    for (const auto& d : decls) {
        if (d.is_toplevel_wrapper) main_statements += d.body.children.size();
    }
    // import, assignment and if; the def is a function of its own.
    EXPECT_EQ(main_statements, 3u);
    EXPECT_EQ(names(decls), (std::set<std::string>{"f", "__main__"}));
}

TEST(ExtractFunctions, NestedFunctionLeavesPlaceholder) {
    const auto unit = py("def outer(n):\n    def inner(k):\n        return k * 2\n    return inner(n)\n");
    const auto decls = extract_functions(parse(unit), unit.language);
    EXPECT_EQ(names(decls), (std::set<std::string>{"outer", "inner"}));
    const auto outer = std::find_if(decls.begin(), decls.end(), [](const auto& d) { return d.name == "outer"; });
    ASSERT_NE(outer, decls.end());
    const auto placeholders = find_all(outer->body, kNestedFunctionKind);
    ASSERT_EQ(placeholders.size(), 1u);
    EXPECT_EQ(placeholders[0]->text, "inner");
}

TEST(ExtractFunctions, JavaOverloadsGetArity) {
    const SourceUnit unit{Language::Java,
                          "class A { static int f(int a) { return a; } static int f(int a, int b) { return a + b; } }",
                          "A.java"};
    EXPECT_EQ(names(extract_functions(parse(unit), unit.language)), (std::set<std::string>{"f/1", "f/2"}));
}

// Method lists enumerated by reading the sources.
TEST(ExtractFunctions, JavaMethodListsMatchHandEnumeration) {
    const std::map<std::string, std::set<std::string>> expected{
        {"p01_sum", {"sum", "main"}},
        {"p02_max", {"main"}},
        {"p03_count_even", {"isEven", "main"}},
        {"p04_reverse_words", {"main"}},
        {"p05_fibonacci", {"fib", "main"}},
        {"p06_factorial_mod", {"__main__", "factorial", "main"}},
        {"p07_is_prime", {"main"}},
        {"p08_gcd", {"gcd", "main"}},
        {"p09_lower_bound", {"main"}},
        {"p10_palindrome", {"isPalindrome", "main"}},
    };
    for (const auto& [problem, methods] : expected) {
        const auto unit = load_unit(testing::data_dir() / "desk_corpus" / "problems" / problem / "correct_2.java");
        EXPECT_EQ(names(extract_functions(parse(unit), unit.language)), methods) << problem;
    }
}

TEST(Tokenize, MinimalAssignment) {
    const auto stream = tokenize(py("x=1"));
    ASSERT_EQ(stream.size(), 3u);
    EXPECT_EQ(stream.tokens[0].kind, TokenKind::Identifier);
    EXPECT_EQ(stream.tokens[0].text, "x");
    EXPECT_EQ(stream.tokens[1].kind, TokenKind::Operator);
    EXPECT_EQ(stream.tokens[1].text, "=");
    EXPECT_EQ(stream.tokens[2].kind, TokenKind::Literal);
    EXPECT_EQ(stream.tokens[2].text, "1");
}

TEST(Tokenize, DropsComments) {
    EXPECT_EQ(texts(tokenize(py("x = 1  # c"))), (std::vector<std::string>{"x", "=", "1"}));
}

TEST(Tokenize, StringsAreSingleTokens) {
    EXPECT_EQ(texts(tokenize(py("s = f\"a{b}c\" + 'd'"))),
              (std::vector<std::string>{"s", "=", "f\"a{b}c\"", "+", "'d'"}));
}

TEST(Tokenize, JavaFileMatchesHandCount) {
    const auto unit = load_unit(testing::data_dir() / "desk_corpus" / "problems" / "p24_leap_year" / "correct_1.java");
    // Per line: 7 + 4 + 11 + 15 + 23 + 13 + 1 + 1.
    EXPECT_EQ(tokenize(unit).size(), 75u);
}

TEST(Tokenize, PythonFileMatchesHandCount) {
    const auto unit = load_unit(testing::data_dir() / "desk_corpus" / "problems" / "p24_leap_year" / "correct_1.py");
    EXPECT_EQ(tokenize(unit).size(), 8u + 21u + 8u);
}

#ifdef CSSG_PYTHON
// The reference tokenizer of CPython, minus layout and comment tokens.
std::vector<std::string> cpython_tokens(const std::filesystem::path& path) {
    const std::string cmd = std::string(CSSG_PYTHON) +
                            " -c \"import sys,tokenize;"
                            "skip={tokenize.NEWLINE,tokenize.NL,tokenize.INDENT,tokenize.DEDENT,"
                            "tokenize.COMMENT,tokenize.ENDMARKER,tokenize.ENCODING};"
                            "f=open(sys.argv[1],'rb');"
                            "[print(t.string.encode('unicode_escape').decode()) for t in "
                            "tokenize.tokenize(f.readline) if t.type not in skip]\" '" +
                            path.string() + "'";
    std::vector<std::string> out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::string current;
    for (int c = fgetc(pipe); c != EOF; c = fgetc(pipe)) {
        if (c == '\n') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(static_cast<char>(c));
        }
    }
    pclose(pipe);
    return out;
}

std::string escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\') {
            out += "\\\\";
        } else if (c == '\n') {
            out += "\\n";
        } else if (c == '\t') {
            out += "\\t";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

TEST(Tokenize, MatchesCPythonTokenizer) {
    for (const auto& path : desk_files(Language::Python)) {
        std::vector<std::string> ours;
        for (const auto& t : texts(tokenize(load_unit(path)))) ours.push_back(escaped(t));
        EXPECT_EQ(ours, cpython_tokens(path)) << path;
    }
}
#endif

} // namespace
} // namespace cssg
