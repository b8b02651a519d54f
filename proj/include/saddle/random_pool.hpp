#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace saddle {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class RngMode { full, dwise };

struct RngConfig {
    RngMode mode = RngMode::full;
    unsigned d = 8;  // independence degree for dwise mode, even and >= 2
};

RngMode parse_rng_mode(std::string_view name);
std::string_view to_string(RngMode mode);

/// ceil(log2 k) for k >= 1 (0 for k = 1).
unsigned ceil_log2(std::uint64_t k);

bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_at_least(std::uint64_t n);

/// SplitMix64 finalizer; used to derive independent seeds from a master seed.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

/// f(0), ..., f(count-1) over GF(prime). Coefficients are highest degree first.
std::vector<std::uint64_t> eval_poly_mod(std::span<const std::uint64_t> coeffs, std::size_t count,
                                         std::uint64_t prime);

/// Draws d coefficients uniformly from GF(prime) with a seeded generator and
/// evaluates the degree-(d-1) polynomial at 0..count-1.
std::vector<std::uint64_t> gen_dwise(std::uint64_t seed, std::size_t count, std::uint64_t prime, unsigned d);

/// Seeded source of fixed-width random words backing Rand(k).
///
/// Full mode reads std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so pools are identical across platforms and compilers. Dwise mode
/// evaluates a random polynomial of degree d-1 over a prime field at
/// 0, 1, 2, ... ; the field has at least 2^32 elements so the evaluation
/// points never wrap in practice. Field values at or above the nearest power
/// of two are rejected and the rest truncated to word_bits.
///
/// Both modes extend lazily: drawing past any preallocated budget keeps
/// producing words from the same stream. In dwise mode the O(log n) seed-bit
/// accounting therefore only covers the words an unrestarted run consumes.
class RandomPool {
public:
    RandomPool(std::uint64_t seed, std::uint64_t max_k, RngConfig config = {});

    /// Replays a fixed word list, then wraps around. For tests.
    static RandomPool scripted(std::vector<std::uint64_t> words, unsigned word_bits);

    unsigned word_bits() const noexcept { return word_bits_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const RngConfig& config() const noexcept { return config_; }
    std::uint64_t words_used() const noexcept { return cursor_; }

    std::uint64_t next_word();

    /// Uniform on {1, ..., k} by rejection on the ceil(log2 k) low bits of the
    /// next word. Requires 1 <= k <= 2^word_bits.
    std::uint64_t rand_uniform(std::uint64_t k);

private:
    RandomPool() = default;

    std::uint64_t seed_ = 0;
    RngConfig config_;
    unsigned word_bits_ = 1;
    std::uint64_t word_mask_ = 1;
    std::uint64_t cursor_ = 0;

    std::mt19937_64 engine_;

    // dwise state
    std::vector<std::uint64_t> coeffs_;
    std::uint64_t prime_ = 0;
    unsigned field_bits_ = 0;
    std::uint64_t next_point_ = 0;

    std::vector<std::uint64_t> script_;
};

}  // namespace saddle
