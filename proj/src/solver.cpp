#include "saddle/solver.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace saddle {

void SolveParams::validate() const
{
    if (base_case_size < 4) throw ConfigError("base_case_size must be at least 4");
    if (max_restarts_per_level < 1) throw ConfigError("max_restarts_per_level must be at least 1");
    if (rng.mode == RngMode::dwise && (rng.d < 2 || rng.d % 2 != 0))
        throw ConfigError("dwise degree must be even and at least 2");
    ReduceParams probe = reduce;
    probe.target_size = base_case_size;
    probe.validate();
}

SolveParams make_preset(std::string_view name)
{
    SolveParams p;
    if (name == "paper") {
        p.base_case_size = 8;
        p.reduce.pivot = paper_pivot_params();
        p.reduce.delete_fraction = 0.25;
    } else if (name == "practical") {
        p.base_case_size = 64;
        p.reduce.pivot = practical_pivot_params();
        p.reduce.delete_fraction = 0.125;
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }
    p.preset = std::string(name);
    return p;
}

std::size_t level_target_size(std::size_t n, std::size_t base_case_size)
{
    if (n <= 2) return base_case_size;
    const double s = std::ceil(static_cast<double>(n) / std::log2(static_cast<double>(n)) - 1e-9);
    return std::max(base_case_size, static_cast<std::size_t>(s));
}

bool verify_strict_candidate(const Matrix& m, std::size_t row, std::size_t col, CountingAccess& counter)
{
    if (row >= m.rows() || col >= m.cols()) throw std::out_of_range("candidate outside the matrix");
    const Entry v = counter.read(m, row, col);
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (c != col && !counter.less(counter.read(m, row, c), v)) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (r != row && !counter.less(v, counter.read(m, r, col))) return false;
    return true;
}

bool verify_strict_candidate(const Matrix& m, std::size_t row, std::size_t col)
{
    CountingAccess scratch;
    return verify_strict_candidate(m, row, col, scratch);
}

std::optional<LexKey> solve_base_case(const MatrixView& view, CountingAccess& counter)
{
    const std::size_t h = view.height();
    const std::size_t w = view.width();
    // Every row has a lex-strict maximum; at most one of them can also be the
    // minimum of its column.
    for (std::size_t r = 0; r < h; ++r) {
        LexKey best = view.key(r, 0, counter);
        std::size_t best_pos = 0;
        for (std::size_t c = 1; c < w; ++c) {
            const LexKey k = view.key(r, c, counter);
            if (counter.less(best, k)) {
                best = k;
                best_pos = c;
            }
        }
        bool column_min = true;
        for (std::size_t other = 0; other < h && column_min; ++other)
            if (other != r && !counter.less(best, view.key(other, best_pos, counter))) column_min = false;
        if (column_min) return best;
    }
    return std::nullopt;
}

namespace {

bool verify_in_view(const MatrixView& view, const LexKey& cand, CountingAccess& counter)
{
    const Matrix& m = view.base();
    const Entry v = cand.value;
    for (std::size_t c : view.alive_cols())
        if (c != cand.col && !counter.less(counter.read(m, cand.row, c), v)) return false;
    for (std::size_t r : view.alive_rows())
        if (r != cand.row && !counter.less(v, counter.read(m, r, cand.col))) return false;
    return true;
}

class Solver {
public:
    Solver(const SolveParams& params, std::uint64_t stream_seed) : params_(params), stream_seed_(stream_seed) {}

    // Lex-strict saddlepoint candidate of a view over the lifted matrix.
    std::optional<LexKey> solve(const MatrixView& view)
    {
        const std::size_t side = std::max(view.height(), view.width());
        if (side <= params_.base_case_size) return solve_base_case(view, counter_);

        const std::uint64_t level = level_++;
        ReduceParams reduce = params_.reduce;
        reduce.target_size = level_target_size(side, params_.base_case_size);

        for (std::size_t attempt = 0; attempt < params_.max_restarts_per_level; ++attempt) {
            // Each attempt needs fresh randomness.
            RandomPool pool(derive_seed(stream_seed_, level, attempt), side, params_.rng);
            auto reduced = reduce_matrix(view, reduce, pool, counter_);
            random_words_ += pool.words_used();
            if (reduced) {
                if (std::max(reduced->height(), reduced->width()) >= side) break;
                return solve(*reduced);
            }
            ++restarts_;
        }
        ++fallbacks_;
        return solve_base_case(view, counter_);
    }

    CountingAccess& counter() { return counter_; }
    std::uint64_t restarts() const { return restarts_; }
    std::uint64_t random_words() const { return random_words_; }
    std::uint64_t fallbacks() const { return fallbacks_; }

private:
    const SolveParams& params_;
    std::uint64_t stream_seed_;
    std::uint64_t level_ = 0;
    CountingAccess counter_;
    std::uint64_t restarts_ = 0;
    std::uint64_t random_words_ = 0;
    std::uint64_t fallbacks_ = 0;
};

void absorb(SolveReport& report, Solver& solver)
{
    report.comparisons += solver.counter().comparisons();
    report.entry_reads += solver.counter().entry_reads();
    report.restarts += solver.restarts();
    report.random_words += solver.random_words();
    report.fallbacks += solver.fallbacks();
}

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start)
{
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

SolveReport solve_square(const Matrix& m, const SolveParams& params, std::uint64_t seed)
{
    const auto start = Clock::now();
    SolveReport report;
    report.seed = seed;
    report.preset = params.preset;

    Solver solver(params, seed);
    const auto cand = solver.solve(MatrixView(m));
    if (cand && verify_strict_candidate(m, cand->row, cand->col, solver.counter()))
        report.found = Cell{cand->row, cand->col, cand->value};
    absorb(report, solver);
    report.wall_time_ns = elapsed_ns(start);
    return report;
}

std::vector<std::size_t> index_range(std::size_t first, std::size_t count)
{
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), first);
    return idx;
}

}  // namespace

SolveReport find_strict_saddlepoint(const Matrix& m, const SolveParams& params, std::uint64_t seed)
{
    params.validate();
    if (m.rows() != m.cols()) return solve_rectangular(m, params, seed);
    return solve_square(m, params, seed);
}

SolveReport solve_rectangular(const Matrix& m, const SolveParams& params, std::uint64_t seed)
{
    params.validate();
    if (m.rows() == m.cols()) return solve_square(m, params, seed);

    const auto start = Clock::now();
    SolveReport report;
    report.seed = seed;
    report.preset = params.preset;

    const bool tall = m.rows() > m.cols();
    const std::size_t a = std::min(m.rows(), m.cols());
    const std::size_t b = std::max(m.rows(), m.cols());
    const std::size_t windows = (b + a - 1) / a;

    CountingAccess merge_counter;
    std::optional<LexKey> extreme;
    for (std::size_t w = 0; w < windows; ++w) {
        const std::size_t first = std::min(w * a, b - a);
        const MatrixView window = tall ? MatrixView(m, index_range(first, a), index_range(0, a))
                                       : MatrixView(m, index_range(0, a), index_range(first, a));
        Solver solver(params, derive_seed(seed, 0x5749'4e44ULL, w));
        const auto cand = solver.solve(window);
        const bool local = cand && verify_in_view(window, *cand, solver.counter());
        absorb(report, solver);
        if (!local) continue;
        // A global saddlepoint is a column minimum below every other local
        // row maximum (tall), or the mirror statement (wide).
        if (!extreme || (tall ? merge_counter.less(*cand, *extreme) : merge_counter.less(*extreme, *cand)))
            extreme = cand;
    }

    if (extreme && verify_strict_candidate(m, extreme->row, extreme->col, merge_counter))
        report.found = Cell{extreme->row, extreme->col, extreme->value};
    report.comparisons += merge_counter.comparisons();
    report.entry_reads += merge_counter.entry_reads();
    report.wall_time_ns = elapsed_ns(start);
    return report;
}

}  // namespace saddle
