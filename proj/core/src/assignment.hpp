#pragma once

#include <cstdint>
#include <vector>

namespace cssg::detail {

inline constexpr int64_t kForbidden = int64_t{1} << 40;

/// Square linear assignment (Hungarian method with potentials). Returns the
/// column assigned to each row. Ties resolve towards the lowest column index.
std::vector<int> solve_assignment(const std::vector<std::vector<int64_t>>& cost);

/**
 * Minimum cost of a partial matching between `rows` and `cols` items where
 * an unmatched row costs `unmatched_row[i]`, an unmatched column
 * `unmatched_col[j]` and a matched pair `pair[i * cols + j]`.
 */
int64_t min_partial_matching(std::size_t rows, std::size_t cols, const std::vector<int64_t>& pair,
                             const std::vector<int64_t>& unmatched_row, const std::vector<int64_t>& unmatched_col);

int64_t assignment_cost(const std::vector<std::vector<int64_t>>& cost, const std::vector<int>& rows_to_cols);

} // namespace cssg::detail
