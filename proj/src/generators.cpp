#include "saddle/generators.hpp"

#include "saddle/oracle.hpp"
#include "saddle/random_pool.hpp"

#include <bit>
#include <numeric>
#include <vector>

namespace saddle {

namespace {

template <typename T>
void shuffle(std::vector<T>& items, RandomPool& pool)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(pool.rand_uniform(i) - 1);
        std::swap(items[i - 1], items[j]);
    }
}

// Uniform sample of `count` distinct values from [lo, hi], partial Fisher-Yates.
std::vector<Entry> sample_range(Entry lo, Entry hi, std::size_t count, RandomPool& pool)
{
    std::vector<Entry> values(static_cast<std::size_t>(hi - lo + 1));
    std::iota(values.begin(), values.end(), lo);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(pool.rand_uniform(values.size() - i) - 1);
        std::swap(values[i], values[j]);
    }
    values.resize(count);
    return values;
}

void require_dims(std::size_t rows, std::size_t cols, std::size_t min)
{
    if (rows < min || cols < min)
        throw std::invalid_argument("generator needs at least " + std::to_string(min) + " rows and columns");
}

// Keyed bijection on [0, 2^bits).
class BitPermutation {
public:
    BitPermutation(unsigned bits, std::uint64_t key)
        : bits_(bits), mask_(bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1),
          add_(mix64(key) & mask_), mul1_((mix64(key + 1) | 1) & mask_), mul2_((mix64(key + 2) | 1) & mask_)
    {
        if (mul1_ == 0) mul1_ = 1;
        if (mul2_ == 0) mul2_ = 1;
    }

    std::uint64_t operator()(std::uint64_t x) const
    {
        const unsigned s1 = bits_ / 2 + 1;
        const unsigned s2 = bits_ / 3 + 1;
        x = (x + add_) & mask_;
        x ^= x >> s1;
        x = (x * mul1_) & mask_;
        x ^= x >> s2;
        x = (x * mul2_) & mask_;
        x ^= x >> s1;
        return x;
    }

private:
    unsigned bits_;
    std::uint64_t mask_;
    std::uint64_t add_;
    std::uint64_t mul1_;
    std::uint64_t mul2_;
};

class PlantedSource final : public EntrySource {
public:
    PlantedSource(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col, std::uint64_t seed)
        : cols_(cols), row_(row), col_(col),
          general_(61, derive_seed(seed, 1)),
          row_perm_(std::max(1u, static_cast<unsigned>(std::bit_width(cols))), derive_seed(seed, 2)),
          col_perm_(std::max(1u, static_cast<unsigned>(std::bit_width(rows))), derive_seed(seed, 3)),
          planted_value_(Entry{1} << std::max(1u, static_cast<unsigned>(std::bit_width(cols))))
    {
    }

    Entry at(std::size_t r, std::size_t c) const override
    {
        if (r == row_ && c == col_) return planted_value_;
        // Row values lie below 2^bits(cols), the planted value is 2^bits(cols),
        // other cells sit in [2^61, 2^62) and column values above 2^62.
        if (r == row_) return static_cast<Entry>(row_perm_(c));
        if (c == col_) return (Entry{1} << 62) + static_cast<Entry>(col_perm_(r));
        return (Entry{1} << 61) + static_cast<Entry>(general_(static_cast<std::uint64_t>(r) * cols_ + c));
    }

private:
    std::size_t cols_;
    std::size_t row_;
    std::size_t col_;
    BitPermutation general_;
    BitPermutation row_perm_;
    BitPermutation col_perm_;
    Entry planted_value_;
};

}  // namespace

Matrix generate_uniform(std::size_t rows, std::size_t cols, std::uint64_t seed)
{
    require_dims(rows, cols, 1);
    const std::size_t n = rows * cols;
    RandomPool pool(seed, n);
    std::vector<Entry> values(n);
    std::iota(values.begin(), values.end(), Entry{1});
    shuffle(values, pool);
    return Matrix(rows, cols, std::move(values));
}

PlantedInstance generate_planted(std::size_t rows, std::size_t cols, std::uint64_t seed)
{
    require_dims(rows, cols, 2);
    const std::size_t n = rows * cols;
    RandomPool pool(seed, n);

    const std::size_t prow = static_cast<std::size_t>(pool.rand_uniform(rows) - 1);
    const std::size_t pcol = static_cast<std::size_t>(pool.rand_uniform(cols) - 1);
    // v needs cols-1 values below it and rows-1 above it.
    const Entry lowest = static_cast<Entry>(cols);
    const Entry highest = static_cast<Entry>(n - rows + 1);
    const Entry v = lowest + static_cast<Entry>(pool.rand_uniform(static_cast<std::uint64_t>(highest - lowest + 1)) - 1);

    auto below = sample_range(1, v - 1, cols - 1, pool);
    auto above = sample_range(v + 1, static_cast<Entry>(n), rows - 1, pool);

    std::vector<char> used(n + 1, 0);
    used[static_cast<std::size_t>(v)] = 1;
    for (Entry x : below) used[static_cast<std::size_t>(x)] = 1;
    for (Entry x : above) used[static_cast<std::size_t>(x)] = 1;
    std::vector<Entry> rest;
    rest.reserve(n - rows - cols + 1);
    for (std::size_t x = 1; x <= n; ++x)
        if (!used[x]) rest.push_back(static_cast<Entry>(x));
    shuffle(rest, pool);

    std::vector<Entry> entries(n);
    std::size_t bi = 0, ai = 0, ri = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            Entry& e = entries[r * cols + c];
            if (r == prow && c == pcol) e = v;
            else if (r == prow) e = below[bi++];
            else if (c == pcol) e = above[ai++];
            else e = rest[ri++];
        }
    return PlantedInstance{Matrix(rows, cols, std::move(entries)), prow, pcol};
}

Matrix generate_nosaddle(std::size_t rows, std::size_t cols, std::uint64_t seed, std::size_t max_tries)
{
    require_dims(rows, cols, 2);
    for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
        Matrix m = generate_uniform(rows, cols, attempt == 0 ? seed : derive_seed(seed, attempt));
        if (brute_strict(m).cells.empty()) return m;
    }
    throw GenerationError("no saddlepoint-free instance after " + std::to_string(max_tries) + " tries");
}

PlantedInstance procedural_planted(std::size_t rows, std::size_t cols, std::uint64_t seed)
{
    require_dims(rows, cols, 2);
    if (rows >= (std::size_t{1} << 30) || cols >= (std::size_t{1} << 30))
        throw std::invalid_argument("procedural instance too large");
    RandomPool pool(seed, std::max(rows, cols));
    const std::size_t prow = static_cast<std::size_t>(pool.rand_uniform(rows) - 1);
    const std::size_t pcol = static_cast<std::size_t>(pool.rand_uniform(cols) - 1);
    auto source = std::make_shared<PlantedSource>(rows, cols, prow, pcol, seed);
    return PlantedInstance{Matrix(rows, cols, std::move(source)), prow, pcol};
}

}  // namespace saddle
