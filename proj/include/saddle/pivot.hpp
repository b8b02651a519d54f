#pragma once

#include "saddle/matrix.hpp"
#include "saddle/random_pool.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace saddle {

/// Tunables of the two-phase pivot search.
///
/// Phase 2 draws c = max(sample_floor, floor(m^sample_exponent),
/// ceil(log_sample_factor * log2 m)) samples per surviving row and keeps the
/// max(1, floor(order_fraction * c))-th smallest. A candidate is accepted only
/// if at least floor(validity_fraction * k) entries of its row are smaller.
struct PivotParams {
    double phase1_quantile = 0.75;
    double stop_exponent = 0.95;
    double sample_exponent = 0.05;
    std::size_t sample_floor = 1;
    double log_sample_factor = 0.0;
    double order_fraction = 0.4;
    double validity_fraction = 0.25;

    /// Throws ConfigError when a field is outside its admissible range.
    void validate() const;
};

/// Constants exactly as published: c = floor(m^(1/20)), at least 1.
PivotParams paper_pivot_params();
/// c = max(32, ceil(4 log2 m)) and a 1/8 validity check.
PivotParams practical_pivot_params();

struct PivotResult {
    std::size_t row;       // original index
    std::size_t col;       // original index
    std::size_t row_pos;   // position in the view
    std::size_t col_pos;
    LexKey value;
};

/// Per-call diagnostics. Filled only when a trace is passed in.
struct PivotTrace {
    std::vector<std::size_t> alive_before;  // |R| entering each Phase-1 round
    std::vector<LexKey> thresholds;         // t after each round
    bool stalled = false;                   // a round deleted nothing
    std::size_t phase2_lines = 0;
    std::size_t phase2_samples = 0;
};

std::size_t floor_power(std::size_t m, double exponent);
std::size_t phase2_sample_count(std::size_t m, const PivotParams& params);

/// Entry p with at least floor(validity_fraction * width) smaller entries in
/// its row and an entry >= p in every row, or nullopt (Failed). The two
/// final checks make a returned pivot sound regardless of the samples drawn.
std::optional<PivotResult> find_horizontal_pivot(const MatrixView& view, RandomPool& pool,
                                                 const PivotParams& params, CountingAccess& counter,
                                                 PivotTrace* trace = nullptr);

/// Order dual of find_horizontal_pivot: at least floor(validity_fraction *
/// height) larger entries in its column and an entry <= p in every column.
/// Reads columns through the view; nothing is transposed.
std::optional<PivotResult> find_vertical_pivot(const MatrixView& view, RandomPool& pool,
                                               const PivotParams& params, CountingAccess& counter,
                                               PivotTrace* trace = nullptr);

}  // namespace saddle
