#include "saddle/reduce.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace saddle {

namespace {

std::size_t deletion_count(double fraction, std::size_t size)
{
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(size) + 1e-9));
}

}  // namespace

void ReduceParams::validate() const
{
    pivot.validate();
    if (!(delete_fraction > 0.0 && delete_fraction <= 0.5)) throw ConfigError("delete_fraction must be in (0, 1/2]");
    if (delete_fraction > pivot.validity_fraction + 1e-12)
        throw ConfigError("delete_fraction cannot exceed the pivot validity_fraction");
    if (target_size < 4 || deletion_count(delete_fraction, target_size) < 1)
        throw ConfigError("target_size too small for the deletion fraction");
}

std::optional<MatrixView> reduce_matrix(MatrixView view, const ReduceParams& params, RandomPool& pool,
                                        CountingAccess& counter, ReduceStats* stats)
{
    params.validate();
    std::vector<std::size_t> doomed;

    while (view.height() > params.target_size) {
        const auto horizontal = find_horizontal_pivot(view, pool, params.pivot, counter);
        if (!horizontal) return std::nullopt;

        // Columns whose entry in the pivot row is below the pivot: the pivot
        // row then has a larger entry, so no such column holds the saddlepoint.
        const std::size_t width = view.width();
        const std::size_t drop_cols = deletion_count(params.delete_fraction, width);
        doomed.clear();
        for (std::size_t c = 0; c < width && doomed.size() < drop_cols; ++c)
            if (counter.less(view.key(horizontal->row_pos, c, counter), horizontal->value)) doomed.push_back(c);
        if (doomed.size() < drop_cols) throw std::logic_error("horizontal pivot guarantee violated");
        view.compact({}, doomed);

        const auto vertical = find_vertical_pivot(view, pool, params.pivot, counter);
        if (!vertical) return std::nullopt;

        const std::size_t height = view.height();
        const std::size_t drop_rows = deletion_count(params.delete_fraction, height);
        doomed.clear();
        for (std::size_t r = 0; r < height && doomed.size() < drop_rows; ++r)
            if (counter.less(vertical->value, view.key(r, vertical->col_pos, counter))) doomed.push_back(r);
        if (doomed.size() < drop_rows) throw std::logic_error("vertical pivot guarantee violated");
        view.compact(doomed, {});

        if (stats) ++stats->iterations;
    }
    return view;
}

}  // namespace saddle
