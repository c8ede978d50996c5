#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "assignment.hpp"

namespace cssg::detail {
namespace {

int64_t brute_square(const std::vector<std::vector<int64_t>>& cost) {
    std::vector<int> perm(cost.size());
    std::iota(perm.begin(), perm.end(), 0);
    int64_t best = INT64_MAX;
    do {
        best = std::min(best, assignment_cost(cost, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every partial injection rows -> cols, enumerated recursively.
int64_t brute_partial(std::size_t rows, std::size_t cols, const std::vector<int64_t>& pair,
                      const std::vector<int64_t>& unmatched_row, const std::vector<int64_t>& unmatched_col) {
    std::vector<bool> used(cols, false);
    int64_t best = INT64_MAX;
    std::function<void(std::size_t, int64_t)> go = [&](std::size_t r, int64_t acc) {
        if (r == rows) {
            int64_t total = acc;
            for (std::size_t c = 0; c < cols; ++c) {
                if (!used[c]) total += unmatched_col[c];
            }
            best = std::min(best, total);
            return;
        }
        go(r + 1, acc + unmatched_row[r]);
        for (std::size_t c = 0; c < cols; ++c) {
            if (used[c]) continue;
            used[c] = true;
            go(r + 1, acc + pair[r * cols + c]);
            used[c] = false;
        }
    };
    go(0, 0);
    return best;
}

TEST(Assignment, MatchesPermutationBruteForce) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int64_t> value(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        std::vector<std::vector<int64_t>> cost(n, std::vector<int64_t>(n));
        for (auto& row : cost) {
            for (auto& c : row) c = value(rng);
        }
        const auto solution = solve_assignment(cost);
        std::vector<int> sorted = solution;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(sorted[i], static_cast<int>(i));
        EXPECT_EQ(assignment_cost(cost, solution), brute_square(cost)) << "trial " << trial;
    }
}

TEST(Assignment, TiesGoToLowestColumn) {
    const std::vector<std::vector<int64_t>> cost{{1, 1}, {1, 1}};
    EXPECT_EQ(solve_assignment(cost), (std::vector<int>{0, 1}));
}

TEST(Assignment, PartialMatchingMatchesBruteForce) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int64_t> value(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = rng() % 5;
        const std::size_t cols = rng() % 5;
        std::vector<int64_t> pair(rows * cols);
        std::vector<int64_t> ur(rows);
        std::vector<int64_t> uc(cols);
        for (auto& v : pair) v = rng() % 4 == 0 ? kForbidden : value(rng);
        for (auto& v : ur) v = value(rng);
        for (auto& v : uc) v = value(rng);
        EXPECT_EQ(min_partial_matching(rows, cols, pair, ur, uc), brute_partial(rows, cols, pair, ur, uc))
            << "trial " << trial << " " << rows << "x" << cols;
    }
}

} // namespace
} // namespace cssg::detail
