#include "saddle/pivot.hpp"

#include "saddle/select.hpp"

#include <cmath>
#include <numeric>

namespace saddle {

namespace {

constexpr double kEps = 1e-9;

std::size_t floor_frac(double fraction, std::size_t n)
{
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + kEps));
}

std::size_t ceil_frac(double fraction, std::size_t n)
{
    return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - kEps));
}

struct Sample {
    LexKey key;
    std::size_t pos;  // position along the line
};

// Horizontal: lines are rows, order is "<". Vertical: lines are columns and
// the order is reversed, which mirrors every step of the procedure.
template <bool Vertical>
std::optional<PivotResult> find_pivot(const MatrixView& view, RandomPool& pool, const PivotParams& params,
                                      CountingAccess& counter, PivotTrace* trace)
{
    const std::size_t m = Vertical ? view.width() : view.height();
    const std::size_t k = Vertical ? view.height() : view.width();
    if (m == 0 || k == 0) throw DegenerateView("pivot search on an empty view");

    auto cell = [&](std::size_t line, std::size_t pos) {
        return Vertical ? view.key(pos, line, counter) : view.key(line, pos, counter);
    };
    auto before = [&](const LexKey& a, const LexKey& b) {
        return Vertical ? counter.less(b, a) : counter.less(a, b);
    };
    auto sample_before = [&](const Sample& a, const Sample& b) { return before(a.key, b.key); };
    auto draw = [&](std::size_t line) {
        const std::size_t pos = static_cast<std::size_t>(pool.rand_uniform(k) - 1);
        return Sample{cell(line, pos), pos};
    };

    // Phase 1: shrink the row set with a running threshold.
    std::vector<std::size_t> alive(m);
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    std::optional<LexKey> threshold;
    const std::size_t stop = floor_power(m, params.stop_exponent);

    std::vector<Sample> samples;
    std::vector<Sample> scratch;
    while (alive.size() > stop) {
        if (trace) trace->alive_before.push_back(alive.size());
        samples.clear();
        for (std::size_t line : alive) samples.push_back(draw(line));

        scratch = samples;
        const std::size_t rank = std::clamp<std::size_t>(ceil_frac(params.phase1_quantile, samples.size()), 1,
                                                         samples.size());
        const LexKey q = select_kth(std::span<Sample>(scratch), rank, sample_before).key;
        if (!threshold || before(q, *threshold)) threshold = q;
        if (trace) trace->thresholds.push_back(*threshold);

        std::size_t kept = 0;
        for (std::size_t i = 0; i < alive.size(); ++i)
            if (!before(*threshold, samples[i].key)) alive[kept++] = alive[i];
        const bool stalled = kept == alive.size();
        alive.resize(kept);
        if (stalled) {
            if (trace) trace->stalled = true;
            break;
        }
    }
    // Every sample can land above an older, smaller threshold.
    if (alive.empty()) return std::nullopt;

    // Phase 2: a low order statistic of c samples per surviving row.
    const std::size_t c = phase2_sample_count(m, params);
    const std::size_t order_rank = std::max<std::size_t>(1, floor_frac(params.order_fraction, c));
    std::optional<Sample> best;
    std::size_t best_line = 0;
    for (std::size_t line : alive) {
        samples.clear();
        for (std::size_t i = 0; i < c; ++i) samples.push_back(draw(line));
        const Sample q = select_kth(std::span<Sample>(samples), order_rank, sample_before);
        if (!best || before(q.key, best->key)) {
            best = q;
            best_line = line;
        }
    }
    if (trace) {
        trace->phase2_lines = alive.size();
        trace->phase2_samples = c;
    }

    const LexKey p = best->key;
    if (threshold && before(*threshold, p)) return std::nullopt;

    const std::size_t needed = floor_frac(params.validity_fraction, k);
    std::size_t smaller = 0;
    for (std::size_t pos = 0; pos < k && smaller < needed; ++pos)
        if (before(cell(best_line, pos), p)) ++smaller;
    if (smaller < needed) return std::nullopt;

    PivotResult result{p.row, p.col, 0, 0, p};
    if constexpr (Vertical) {
        result.col_pos = best_line;
        result.row_pos = best->pos;
    } else {
        result.row_pos = best_line;
        result.col_pos = best->pos;
    }
    return result;
}

}  // namespace

void PivotParams::validate() const
{
    if (!(phase1_quantile > 0.0 && phase1_quantile <= 1.0)) throw ConfigError("phase1_quantile must be in (0, 1]");
    if (!(stop_exponent > 0.0 && stop_exponent < 1.0)) throw ConfigError("stop_exponent must be in (0, 1)");
    if (!(sample_exponent > 0.0 && sample_exponent < 1.0)) throw ConfigError("sample_exponent must be in (0, 1)");
    if (sample_floor < 1) throw ConfigError("sample_floor must be at least 1");
    if (!(log_sample_factor >= 0.0)) throw ConfigError("log_sample_factor must be nonnegative");
    if (!(order_fraction > 0.0 && order_fraction < 1.0)) throw ConfigError("order_fraction must be in (0, 1)");
    if (!(validity_fraction > 0.0 && validity_fraction <= 0.5))
        throw ConfigError("validity_fraction must be in (0, 1/2]");
}

PivotParams paper_pivot_params()
{
    return PivotParams{};
}

PivotParams practical_pivot_params()
{
    PivotParams p;
    p.sample_floor = 32;
    p.log_sample_factor = 4.0;
    p.validity_fraction = 0.125;
    return p;
}

std::size_t floor_power(std::size_t m, double exponent)
{
    return static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(m), exponent) + kEps));
}

std::size_t phase2_sample_count(std::size_t m, const PivotParams& params)
{
    std::size_t c = std::max(params.sample_floor, floor_power(m, params.sample_exponent));
    if (params.log_sample_factor > 0.0 && m > 1) {
        const double by_log = std::ceil(params.log_sample_factor * std::log2(static_cast<double>(m)) - kEps);
        c = std::max(c, static_cast<std::size_t>(by_log));
    }
    return std::max<std::size_t>(c, 1);
}

std::optional<PivotResult> find_horizontal_pivot(const MatrixView& view, RandomPool& pool,
                                                 const PivotParams& params, CountingAccess& counter,
                                                 PivotTrace* trace)
{
    return find_pivot<false>(view, pool, params, counter, trace);
}

std::optional<PivotResult> find_vertical_pivot(const MatrixView& view, RandomPool& pool,
                                               const PivotParams& params, CountingAccess& counter,
                                               PivotTrace* trace)
{
    return find_pivot<true>(view, pool, params, counter, trace);
}

}  // namespace saddle
