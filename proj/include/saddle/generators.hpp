#pragma once

#include "saddle/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace saddle {

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PlantedInstance {
    Matrix matrix;
    std::size_t row;
    std::size_t col;
};

/// A uniformly random permutation of 1..rows*cols.
Matrix generate_uniform(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Distinct entries 1..rows*cols with a unique strict saddlepoint at a random
/// cell: its row gets smaller values, its column larger ones, the rest is
/// shuffled. Requires rows, cols >= 2.
PlantedInstance generate_planted(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Uniform instances rejected until brute_strict finds nothing; gives up
/// after max_tries with GenerationError.
Matrix generate_nosaddle(std::size_t rows, std::size_t cols, std::uint64_t seed, std::size_t max_tries = 10000);

/// Planted instance whose entries are computed from (row, col, seed) on
/// demand. O(1) memory; distinct values from keyed bijections.
PlantedInstance procedural_planted(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace saddle
