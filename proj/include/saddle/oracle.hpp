#pragma once

#include "saddle/matrix.hpp"

#include <cstddef>
#include <vector>

namespace saddle {

struct Cell {
    std::size_t row;
    std::size_t col;
    Entry value;

    friend bool operator==(const Cell&, const Cell&) = default;
};

enum class SaddleKind { strict, nonstrict };

struct OracleResult {
    SaddleKind kind;
    std::vector<Cell> cells;  // row-major order
};

/// Ground truth by raw value: the cell that is the unique maximum of its row
/// and the unique minimum of its column. O(rows * cols).
OracleResult brute_strict(const Matrix& m);

/// Every cell equal to its row maximum and its column minimum.
OracleResult brute_nonstrict(const Matrix& m);

}  // namespace saddle
