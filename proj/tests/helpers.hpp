#pragma once

// Test-only generators and full-scan validators. These deliberately avoid the
// library's LexKey and counters so they stay independent of the code under test.

#include "saddle/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <tuple>
#include <vector>

namespace testing {

using saddle::Entry;
using saddle::Matrix;

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Entry lo, Entry hi, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Entry> dist(lo, hi);
    std::vector<Entry> e(rows * cols);
    for (auto& x : e) x = dist(rng);
    return Matrix(rows, cols, std::move(e));
}

inline Matrix random_permutation_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    std::vector<Entry> e(rows * cols);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Entry>(i + 1);
    std::shuffle(e.begin(), e.end(), rng);
    return Matrix(rows, cols, std::move(e));
}

inline auto lex(const Matrix& m, std::size_t r, std::size_t c)
{
    return std::make_tuple(m.at(r, c), r, c);
}

/// At least `needed` cells of p's row (among `cols`) are lex-smaller than p,
/// and every row in `rows` has a cell lex >= p.
inline bool is_horizontal_pivot(const Matrix& m, std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols, std::size_t pr, std::size_t pc,
                                 std::size_t needed)
{
    const auto p = lex(m, pr, pc);
    std::size_t smaller = 0;
    for (std::size_t c : cols)
        if (lex(m, pr, c) < p) ++smaller;
    if (smaller < needed) return false;
    for (std::size_t r : rows) {
        bool has = false;
        for (std::size_t c : cols) has = has || !(lex(m, r, c) < p);
        if (!has) return false;
    }
    return true;
}

inline bool is_vertical_pivot(const Matrix& m, std::span<const std::size_t> rows,
                              std::span<const std::size_t> cols, std::size_t pr, std::size_t pc,
                              std::size_t needed)
{
    const auto p = lex(m, pr, pc);
    std::size_t larger = 0;
    for (std::size_t r : rows)
        if (p < lex(m, r, pc)) ++larger;
    if (larger < needed) return false;
    for (std::size_t c : cols) {
        bool has = false;
        for (std::size_t r : rows) has = has || !(p < lex(m, r, c));
        if (!has) return false;
    }
    return true;
}

inline std::vector<std::size_t> iota_vec(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace testing
