#include "saddle/random_pool.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace saddle {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Unbiased draw from [0, bound) by rejecting the top partial block.
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = engine();
        if (x < limit) return x % bound;
    }
}

std::vector<std::uint64_t> draw_coefficients(std::uint64_t seed, std::uint64_t prime, unsigned d)
{
    std::mt19937_64 engine(seed);
    std::vector<std::uint64_t> coeffs(d);
    for (auto& c : coeffs) c = draw_below(engine, prime);
    return coeffs;
}

std::uint64_t horner(std::span<const std::uint64_t> coeffs, std::uint64_t x, std::uint64_t prime)
{
    std::uint64_t acc = 0;
    for (std::uint64_t c : coeffs) acc = (mulmod(acc, x, prime) + c) % prime;
    return acc;
}

constexpr unsigned kMinFieldBits = 32;

}  // namespace

RngMode parse_rng_mode(std::string_view name)
{
    if (name == "full") return RngMode::full;
    if (name == "dwise") return RngMode::dwise;
    throw ConfigError("unknown rng mode '" + std::string(name) + "'");
}

std::string_view to_string(RngMode mode)
{
    return mode == RngMode::full ? "full" : "dwise";
}

unsigned ceil_log2(std::uint64_t k)
{
    if (k <= 1) return 0;
    return static_cast<unsigned>(std::bit_width(k - 1));
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic for all 64-bit n with these bases.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t smallest_prime_at_least(std::uint64_t n)
{
    if (n <= 2) return 2;
    std::uint64_t c = n | 1;
    while (!is_prime(c)) c += 2;
    return c;
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b)
{
    return mix64(mix64(mix64(master) ^ a) ^ (b * 0x9e3779b97f4a7c15ULL));
}

std::vector<std::uint64_t> eval_poly_mod(std::span<const std::uint64_t> coeffs, std::size_t count,
                                         std::uint64_t prime)
{
    if (!is_prime(prime)) throw ConfigError("modulus " + std::to_string(prime) + " is not prime");
    std::vector<std::uint64_t> out(count);
    for (std::size_t x = 0; x < count; ++x) out[x] = horner(coeffs, x % prime, prime);
    return out;
}

std::vector<std::uint64_t> gen_dwise(std::uint64_t seed, std::size_t count, std::uint64_t prime, unsigned d)
{
    if (!is_prime(prime)) throw ConfigError("modulus " + std::to_string(prime) + " is not prime");
    if (d < 2 || d % 2 != 0) throw ConfigError("independence degree must be even and at least 2");
    if (count == 0) throw ConfigError("count must be positive");
    const auto coeffs = draw_coefficients(seed, prime, d);
    return eval_poly_mod(coeffs, count, prime);
}

RandomPool::RandomPool(std::uint64_t seed, std::uint64_t max_k, RngConfig config)
    : seed_(seed), config_(config), engine_(seed)
{
    if (max_k == 0) throw ConfigError("max_k must be at least 1");
    word_bits_ = std::max(1u, ceil_log2(max_k));
    if (word_bits_ > 62) throw ConfigError("max_k too large");
    word_mask_ = (std::uint64_t{1} << word_bits_) - 1;

    if (config_.mode == RngMode::dwise) {
        if (config_.d < 2 || config_.d % 2 != 0)
            throw ConfigError("dwise degree must be even and at least 2");
        field_bits_ = std::max(word_bits_, kMinFieldBits);
        prime_ = smallest_prime_at_least(std::uint64_t{1} << field_bits_);
        coeffs_ = draw_coefficients(seed, prime_, config_.d);
    }
}

RandomPool RandomPool::scripted(std::vector<std::uint64_t> words, unsigned word_bits)
{
    if (words.empty()) throw ConfigError("scripted pool needs at least one word");
    if (word_bits == 0 || word_bits > 62) throw ConfigError("word_bits out of range");
    RandomPool pool;
    pool.word_bits_ = word_bits;
    pool.word_mask_ = (std::uint64_t{1} << word_bits) - 1;
    pool.script_ = std::move(words);
    return pool;
}

std::uint64_t RandomPool::next_word()
{
    const std::uint64_t index = cursor_++;
    if (!script_.empty()) return script_[index % script_.size()] & word_mask_;
    if (config_.mode == RngMode::full) return engine_() & word_mask_;

    const std::uint64_t cap = std::uint64_t{1} << field_bits_;
    for (;;) {
        const std::uint64_t value = horner(coeffs_, next_point_, prime_);
        next_point_ = next_point_ + 1 == prime_ ? 0 : next_point_ + 1;
        if (value < cap) return value & word_mask_;
    }
}

std::uint64_t RandomPool::rand_uniform(std::uint64_t k)
{
    if (k == 0 || (word_bits_ < 64 && k > (std::uint64_t{1} << word_bits_)))
        throw std::invalid_argument("rand_uniform: k out of range for this pool");
    const unsigned bits = ceil_log2(k);
    const std::uint64_t mask = bits == 0 ? 0 : (std::uint64_t{1} << bits) - 1;
    for (;;) {
        const std::uint64_t b = next_word() & mask;
        if (b < k) return b + 1;
    }
}

}  // namespace saddle
