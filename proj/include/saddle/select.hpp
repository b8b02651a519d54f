#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

namespace saddle {

inline constexpr std::size_t kSelectCutoff = 32;

namespace detail {

template <typename T, typename Less>
void insertion_sort(std::span<T> items, Less& less)
{
    for (std::size_t i = 1; i < items.size(); ++i) {
        for (std::size_t j = i; j > 0 && less(items[j], items[j - 1]); --j) std::swap(items[j], items[j - 1]);
    }
}

// 0-based rank. Median of medians with groups of five; three-way partition so
// runs of equal keys cannot stall the recursion.
template <typename T, typename Less>
T select_impl(std::span<T> items, std::size_t rank, Less& less, std::size_t cutoff)
{
    for (;;) {
        const std::size_t n = items.size();
        if (n <= cutoff) {
            insertion_sort(items, less);
            return items[rank];
        }

        // Gather group medians at the front.
        std::size_t groups = 0;
        for (std::size_t start = 0; start < n; start += 5) {
            const std::size_t len = std::min<std::size_t>(5, n - start);
            auto group = items.subspan(start, len);
            insertion_sort(group, less);
            std::swap(items[groups++], group[(len - 1) / 2]);
        }
        const T pivot = select_impl(items.first(groups), (groups - 1) / 2, less, cutoff);

        // [0, lt) < pivot, [lt, i) == pivot, (gt, n) > pivot
        std::size_t lt = 0, i = 0, gt = n;
        while (i < gt) {
            if (less(items[i], pivot)) {
                std::swap(items[lt++], items[i++]);
            } else if (less(pivot, items[i])) {
                std::swap(items[i], items[--gt]);
            } else {
                ++i;
            }
        }

        if (rank < lt) {
            items = items.first(lt);
        } else if (rank < gt) {
            return pivot;
        } else {
            rank -= gt;
            items = items.subspan(gt);
        }
    }
}

}  // namespace detail

/// The rank-th smallest item (1-based, duplicates counted with multiplicity)
/// in worst-case linear time. Permutes `items`. `less` is taken by reference
/// so stateful comparators (comparison counters) see every call.
template <typename T, typename Less>
T select_kth(std::span<T> items, std::size_t rank, Less&& less, std::size_t cutoff = kSelectCutoff)
{
    if (rank < 1 || rank > items.size()) throw std::out_of_range("select_kth: rank out of range");
    if (cutoff < 5) cutoff = 5;
    return detail::select_impl(items, rank - 1, less, cutoff);
}

}  // namespace saddle
