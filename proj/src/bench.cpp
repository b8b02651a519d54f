#include "saddle/bench.hpp"

#include "saddle/generators.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace saddle {

BenchRow run_bench_trial(std::size_t n, std::uint64_t seed, const SolveParams& params)
{
    const PlantedInstance inst = procedural_planted(n, n, derive_seed(seed, n));
    const SolveReport report = find_strict_saddlepoint(inst.matrix, params, seed);
    BenchRow row;
    row.n = n;
    row.seed = seed;
    row.comparisons = report.comparisons;
    row.entry_reads = report.entry_reads;
    row.restarts = report.restarts;
    row.time_ns = report.wall_time_ns;
    row.found = report.found.has_value();
    row.correct = report.found && report.found->row == inst.row && report.found->col == inst.col;
    return row;
}

std::vector<std::size_t> doubling_sizes(std::size_t min_n, std::size_t max_n)
{
    if (min_n < 2 || max_n < min_n) throw std::invalid_argument("need 2 <= min_n <= max_n");
    std::vector<std::size_t> sizes;
    for (std::size_t n = min_n; n <= max_n; n *= 2) sizes.push_back(n);
    return sizes;
}

std::vector<BenchRow> run_bench(std::size_t min_n, std::size_t max_n, std::size_t trials, const SolveParams& params)
{
    std::vector<BenchRow> rows;
    for (std::size_t n : doubling_sizes(min_n, max_n))
        for (std::uint64_t seed = 0; seed < trials; ++seed) rows.push_back(run_bench_trial(n, seed, params));
    std::sort(rows.begin(), rows.end(),
              [](const BenchRow& a, const BenchRow& b) { return std::tie(a.n, a.seed) < std::tie(b.n, b.seed); });
    return rows;
}

namespace {

double median(std::vector<double> xs)
{
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

}  // namespace

ScalingSummary summarize_scaling(const std::vector<BenchRow>& rows)
{
    std::map<std::size_t, std::vector<double>> by_n;
    ScalingSummary s;
    double nn = 0.0, nr = 0.0;
    for (const auto& row : rows) {
        const double n = static_cast<double>(row.n);
        const double reads = static_cast<double>(row.entry_reads);
        by_n[row.n].push_back(reads);
        s.c_bound = std::max(s.c_bound, reads / n);
        nn += n * n;
        nr += n * reads;
    }
    s.c_fit = nn > 0.0 ? nr / nn : 0.0;
    for (auto& [n, reads] : by_n) {
        s.sizes.push_back(n);
        s.median_reads.push_back(median(reads));
    }
    for (std::size_t i = 1; i < s.median_reads.size(); ++i)
        s.doubling_ratios.push_back(s.median_reads[i] / s.median_reads[i - 1]);
    return s;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << "n,seed,comparisons,entry_reads,restarts,time_ns,found\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.seed << ',' << r.comparisons << ',' << r.entry_reads << ',' << r.restarts << ','
            << r.time_ns << ',' << (r.found ? "true" : "false") << '\n';
}

}  // namespace saddle
