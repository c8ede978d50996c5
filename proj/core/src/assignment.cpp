#include "assignment.hpp"

#include <algorithm>
#include <limits>

namespace cssg::detail {

std::vector<int> solve_assignment(const std::vector<std::vector<int64_t>>& cost) {
    const std::size_t n = cost.size();
    if (n == 0) return {};
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
    // 1-based potentials; column 0 is the virtual start of each augmenting path.
    std::vector<int64_t> u(n + 1, 0);
    std::vector<int64_t> v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0); // column -> row
    std::vector<std::size_t> way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<int64_t> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = match[j0];
            int64_t delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> rows_to_cols(n, -1);
    for (std::size_t j = 1; j <= n; ++j) rows_to_cols[match[j] - 1] = static_cast<int>(j - 1);
    return rows_to_cols;
}

int64_t min_partial_matching(std::size_t rows, std::size_t cols, const std::vector<int64_t>& pair,
                             const std::vector<int64_t>& unmatched_row, const std::vector<int64_t>& unmatched_col) {
    int64_t base = 0;
    for (auto c : unmatched_row) base += c;
    for (auto c : unmatched_col) base += c;
    if (rows == 0 || cols == 0) return base;

    // Matching i with j saves unmatched_row[i] + unmatched_col[j] - pair; only
    // savings count, so clipped gains turn the optional matching into a
    // rectangular assignment with n <= m.
    const bool flip = rows > cols;
    const std::size_t n = flip ? cols : rows;
    const std::size_t m = flip ? rows : cols;
    auto gain = [&](std::size_t a, std::size_t b) {
        const std::size_t i = flip ? b : a;
        const std::size_t j = flip ? a : b;
        return std::min<int64_t>(0, pair[i * cols + j] - unmatched_row[i] - unmatched_col[j]);
    };
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
    std::vector<int64_t> u(n + 1, 0);
    std::vector<int64_t> v(m + 1, 0);
    std::vector<std::size_t> match(m + 1, 0);
    std::vector<std::size_t> way(m + 1, 0);
    std::vector<int64_t> minv(m + 1);
    std::vector<char> used(m + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = match[j0];
            int64_t delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const int64_t cur = gain(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    int64_t saved = 0;
    for (std::size_t j = 1; j <= m; ++j) {
        if (match[j] != 0) saved += gain(match[j] - 1, j - 1);
    }
    return base + saved;
}

int64_t assignment_cost(const std::vector<std::vector<int64_t>>& cost, const std::vector<int>& rows_to_cols) {
    int64_t total = 0;
    for (std::size_t i = 0; i < rows_to_cols.size(); ++i) total += cost[i][static_cast<std::size_t>(rows_to_cols[i])];
    return total;
}

} // namespace cssg::detail
