#pragma once

#include "saddle/matrix.hpp"
#include "saddle/oracle.hpp"
#include "saddle/random_pool.hpp"
#include "saddle/reduce.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace saddle {

struct SolveParams {
    std::size_t base_case_size = 64;
    std::size_t max_restarts_per_level = 20;
    ReduceParams reduce;  // target_size is recomputed at every level
    RngConfig rng;
    std::string preset = "practical";

    void validate() const;
};

/// "paper": published pivot constants, quarter deletions, base case 8.
/// "practical": wider Phase-2 sampling, eighth deletions, base case 64.
SolveParams make_preset(std::string_view name);

/// max(base, ceil(n / log2 n)).
std::size_t level_target_size(std::size_t n, std::size_t base_case_size);

struct SolveReport {
    std::optional<Cell> found;
    std::uint64_t comparisons = 0;
    std::uint64_t entry_reads = 0;
    std::uint64_t restarts = 0;
    std::uint64_t random_words = 0;
    std::uint64_t wall_time_ns = 0;
    std::uint64_t seed = 0;
    std::string preset;
    std::uint64_t fallbacks = 0;  // levels finished by exhaustive scan after exhausting restarts
};

/// Las Vegas: the outcome always equals brute_strict on `m`; only the work is random.
SolveReport find_strict_saddlepoint(const Matrix& m, const SolveParams& params, std::uint64_t seed);

/// Covers the long side with min-side square windows and combines the local
/// saddlepoints. Used by find_strict_saddlepoint for non-square input.
SolveReport solve_rectangular(const Matrix& m, const SolveParams& params, std::uint64_t seed);

/// Raw-value strictness check of one cell. Exactly (cols-1)+(rows-1)
/// comparisons when the answer is true; stops at the first witness otherwise.
bool verify_strict_candidate(const Matrix& m, std::size_t row, std::size_t col, CountingAccess& counter);
bool verify_strict_candidate(const Matrix& m, std::size_t row, std::size_t col);

/// Exhaustive lex scan: the lex-strict row maximum that is also its column's
/// lex minimum within the view, if any.
std::optional<LexKey> solve_base_case(const MatrixView& view, CountingAccess& counter);

}  // namespace saddle
