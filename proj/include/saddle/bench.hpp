#pragma once

#include "saddle/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace saddle {

struct BenchRow {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t entry_reads = 0;
    std::uint64_t restarts = 0;
    std::uint64_t time_ns = 0;
    bool found = false;
    bool correct = false;  // found exactly the planted cell
};

/// One solve of an n x n procedural planted instance generated from `seed`.
BenchRow run_bench_trial(std::size_t n, std::uint64_t seed, const SolveParams& params);

/// n = min_n, 2 min_n, ... up to max_n inclusive.
std::vector<std::size_t> doubling_sizes(std::size_t min_n, std::size_t max_n);

/// Trials for every size and seed 0..trials-1, sorted by (n, seed).
std::vector<BenchRow> run_bench(std::size_t min_n, std::size_t max_n, std::size_t trials, const SolveParams& params);

struct ScalingSummary {
    std::vector<std::size_t> sizes;
    std::vector<double> median_reads;
    std::vector<double> doubling_ratios;  // median(2n) / median(n), consecutive sizes
    double c_bound = 0.0;                 // max over trials of entry_reads / n
    double c_fit = 0.0;                   // least squares slope of entry_reads on n through the origin
};

ScalingSummary summarize_scaling(const std::vector<BenchRow>& rows);

/// Header `n,seed,comparisons,entry_reads,restarts,time_ns,found`.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace saddle
