#pragma once

#include "saddle/matrix.hpp"
#include "saddle/random_pool.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace saddle {

/// Zeros, one nonzero "special element" per row (2, except a single cell t
/// that holds +1 or -1).
struct HardInstance {
    Matrix matrix;
    std::vector<std::size_t> special_cols;  // per row
    std::size_t t_row;
    std::size_t t_col;
    Entry t_value;
};

/// Saddlepoint value, or nullopt when there is none.
using GameValue = std::optional<Entry>;

HardInstance gen_hard_matrix(std::size_t n, RandomPool& pool);

/// Non-strict saddlepoint value by case analysis: t = -1 gives 0 (any zero in
/// t's row), t = +1 gives 1 exactly when every special element sits in t's
/// column, otherwise none. For n = 1 the only entry is t itself.
GameValue classify_hard_instance(const HardInstance& inst);

/// Structural check of the HardInstance invariants.
bool is_well_formed(const HardInstance& inst);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("query budget exceeded") {}
};

/// Read-only access that stops answering after `budget` reads.
class BudgetedAccess {
public:
    BudgetedAccess(const Matrix& m, std::uint64_t budget) : matrix_(&m), budget_(budget) {}

    std::size_t rows() const noexcept { return matrix_->rows(); }
    std::size_t cols() const noexcept { return matrix_->cols(); }
    std::uint64_t budget() const noexcept { return budget_; }
    std::uint64_t reads() const noexcept { return inner_.entry_reads(); }
    std::uint64_t remaining() const noexcept { return budget_ - reads(); }
    bool exceeded() const noexcept { return exceeded_; }

    /// Throws BudgetExceeded once the budget is spent.
    Entry read(std::size_t row, std::size_t col);

private:
    const Matrix* matrix_;
    std::uint64_t budget_;
    CountingAccess inner_;
    bool exceeded_ = false;
};

/// An algorithm under test: may only read entries, then declares a value.
class QueryStrategy {
public:
    virtual ~QueryStrategy() = default;
    virtual std::string name() const = 0;
    virtual GameValue answer(BudgetedAccess& access, RandomPool& pool) = 0;
};

/// Reads every entry and solves exactly. Needs a budget of rows*cols.
class FullScanStrategy final : public QueryStrategy {
public:
    std::string name() const override { return "full-scan"; }
    GameValue answer(BudgetedAccess& access, RandomPool& pool) override;
};

/// Reads whole rows in order looking for t, then checks t's column if the
/// budget allows. Guesses 0 when t is never seen.
class RowScanStrategy final : public QueryStrategy {
public:
    std::string name() const override { return "row-scan"; }
    GameValue answer(BudgetedAccess& access, RandomPool& pool) override;
};

/// Probes uniformly random cells with the whole budget; same decision rule.
class RandomProbeStrategy final : public QueryStrategy {
public:
    std::string name() const override { return "random-probe"; }
    GameValue answer(BudgetedAccess& access, RandomPool& pool) override;
};

std::unique_ptr<QueryStrategy> make_strategy(const std::string& name);

struct TrialRecord {
    std::size_t n;
    std::size_t trial;
    std::uint64_t budget;
    std::uint64_t reads;
    GameValue answer;
    GameValue truth;
    bool exceeded;
    bool success;
};

struct ExperimentRecord {
    std::size_t successes = 0;
    std::size_t trials = 0;
    double mean_reads = 0.0;
    std::vector<std::uint64_t> read_histogram;  // 10 equal-width buckets over [0, budget]
    std::vector<TrialRecord> records;

    double success_rate() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Each trial draws a fresh instance from (seed, trial) and gives the
/// strategy floor(n^2 / budget_divisor) reads. Measures; proves nothing.
ExperimentRecord run_budget_experiment(QueryStrategy& strategy, std::size_t n, std::size_t trials,
                                       std::uint64_t budget_divisor, std::uint64_t seed);

std::string format_value(const GameValue& v);

}  // namespace saddle
