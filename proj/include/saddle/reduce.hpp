#pragma once

#include "saddle/matrix.hpp"
#include "saddle/pivot.hpp"
#include "saddle/random_pool.hpp"

#include <cstddef>
#include <optional>

namespace saddle {

struct ReduceParams {
    std::size_t target_size = 64;
    double delete_fraction = 0.25;
    PivotParams pivot;

    /// Requires floor(delete_fraction * target_size) >= 1 so each executed
    /// deletion step makes progress, and delete_fraction <= the pivot's
    /// validity_fraction so a valid pivot always has enough qualifying lines.
    void validate() const;
};

struct ReduceStats {
    std::size_t iterations = 0;
};

/// Alternates horizontal and vertical pivots, each time deleting
/// floor(delete_fraction * size) columns (then rows) that cannot hold a strict
/// saddlepoint, until height <= target_size. A strict saddlepoint of the
/// input view (lex order) survives. nullopt when a pivot search fails.
std::optional<MatrixView> reduce_matrix(MatrixView view, const ReduceParams& params, RandomPool& pool,
                                        CountingAccess& counter, ReduceStats* stats = nullptr);

}  // namespace saddle
