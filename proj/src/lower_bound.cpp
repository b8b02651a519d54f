#include "saddle/lower_bound.hpp"

#include "saddle/oracle.hpp"

namespace saddle {

HardInstance gen_hard_matrix(std::size_t n, RandomPool& pool)
{
    if (n == 0) throw std::invalid_argument("hard instance needs n >= 1");
    std::vector<Entry> entries(n * n, 0);
    std::vector<std::size_t> special(n);
    for (std::size_t r = 0; r < n; ++r) {
        special[r] = static_cast<std::size_t>(pool.rand_uniform(n) - 1);
        entries[r * n + special[r]] = 2;
    }
    const std::size_t t_row = static_cast<std::size_t>(pool.rand_uniform(n) - 1);
    const Entry t_value = pool.rand_uniform(2) == 1 ? 1 : -1;
    const std::size_t t_col = special[t_row];
    entries[t_row * n + t_col] = t_value;
    return HardInstance{Matrix(n, n, std::move(entries)), std::move(special), t_row, t_col, t_value};
}

GameValue classify_hard_instance(const HardInstance& inst)
{
    const std::size_t n = inst.matrix.rows();
    if (inst.t_value == -1) return n == 1 ? Entry{-1} : Entry{0};
    for (std::size_t col : inst.special_cols)
        if (col != inst.t_col) return std::nullopt;
    return Entry{1};
}

bool is_well_formed(const HardInstance& inst)
{
    const Matrix& m = inst.matrix;
    const std::size_t n = m.rows();
    if (m.cols() != n || inst.special_cols.size() != n) return false;
    if (inst.t_col != inst.special_cols.at(inst.t_row)) return false;
    if (inst.t_value != 1 && inst.t_value != -1) return false;
    std::size_t units = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t nonzero = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const Entry v = m.at(r, c);
            if (v == 0) continue;
            ++nonzero;
            if (c != inst.special_cols[r]) return false;
            if (v == 1 || v == -1) ++units;
            else if (v != 2) return false;
        }
        if (nonzero != 1) return false;
    }
    return units == 1 && m.at(inst.t_row, inst.t_col) == inst.t_value;
}

Entry BudgetedAccess::read(std::size_t row, std::size_t col)
{
    if (inner_.entry_reads() >= budget_) {
        exceeded_ = true;
        throw BudgetExceeded();
    }
    return inner_.read(*matrix_, row, col);
}

namespace {

struct Sighting {
    std::size_t row;
    std::size_t col;
    Entry value;
};

// Shared decision rule once t has (or has not) been seen.
GameValue decide(BudgetedAccess& access, const std::optional<Sighting>& t)
{
    if (!t) return Entry{0};
    const std::size_t n = access.rows();
    if (t->value == -1) return n == 1 ? Entry{-1} : Entry{0};
    if (access.remaining() < n - 1) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (r != t->row && access.read(r, t->col) != 2) return std::nullopt;
    return Entry{1};
}

}  // namespace

GameValue FullScanStrategy::answer(BudgetedAccess& access, RandomPool&)
{
    std::vector<Entry> entries(access.rows() * access.cols());
    for (std::size_t r = 0; r < access.rows(); ++r)
        for (std::size_t c = 0; c < access.cols(); ++c) entries[r * access.cols() + c] = access.read(r, c);
    const auto result = brute_nonstrict(Matrix(access.rows(), access.cols(), std::move(entries)));
    if (result.cells.empty()) return std::nullopt;
    return result.cells.front().value;
}

GameValue RowScanStrategy::answer(BudgetedAccess& access, RandomPool&)
{
    const std::size_t n = access.rows();
    std::optional<Sighting> t;
    for (std::size_t r = 0; r < n && !t; ++r) {
        if (access.remaining() < access.cols()) break;
        for (std::size_t c = 0; c < access.cols(); ++c) {
            const Entry v = access.read(r, c);
            if (v == 1 || v == -1) {
                t = Sighting{r, c, v};
                break;
            }
        }
    }
    return decide(access, t);
}

GameValue RandomProbeStrategy::answer(BudgetedAccess& access, RandomPool& pool)
{
    const std::size_t n = access.rows();
    std::optional<Sighting> t;
    while (!t && access.remaining() > n - 1) {
        const auto r = static_cast<std::size_t>(pool.rand_uniform(n) - 1);
        const auto c = static_cast<std::size_t>(pool.rand_uniform(access.cols()) - 1);
        const Entry v = access.read(r, c);
        if (v == 1 || v == -1) t = Sighting{r, c, v};
    }
    return decide(access, t);
}

std::unique_ptr<QueryStrategy> make_strategy(const std::string& name)
{
    if (name == "full-scan") return std::make_unique<FullScanStrategy>();
    if (name == "row-scan") return std::make_unique<RowScanStrategy>();
    if (name == "random-probe") return std::make_unique<RandomProbeStrategy>();
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

ExperimentRecord run_budget_experiment(QueryStrategy& strategy, std::size_t n, std::size_t trials,
                                       std::uint64_t budget_divisor, std::uint64_t seed)
{
    if (n < 2) throw std::invalid_argument("experiment needs n >= 2");
    if (trials < 1) throw std::invalid_argument("experiment needs at least one trial");
    if (budget_divisor < 1) throw std::invalid_argument("budget divisor must be positive");

    const std::uint64_t budget = static_cast<std::uint64_t>(n) * n / budget_divisor;
    ExperimentRecord out;
    out.read_histogram.assign(10, 0);
    double total_reads = 0.0;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        RandomPool instance_pool(derive_seed(seed, trial, 1), n);
        const HardInstance inst = gen_hard_matrix(n, instance_pool);
        const GameValue truth = classify_hard_instance(inst);

        RandomPool strategy_pool(derive_seed(seed, trial, 2), n);
        BudgetedAccess access(inst.matrix, budget);
        GameValue answer;
        try {
            answer = strategy.answer(access, strategy_pool);
        } catch (const BudgetExceeded&) {
        }
        const bool success = !access.exceeded() && answer == truth;

        out.records.push_back({n, trial, budget, access.reads(), answer, truth, access.exceeded(), success});
        out.successes += success ? 1 : 0;
        total_reads += static_cast<double>(access.reads());
        const std::uint64_t bucket = budget == 0 ? 0 : std::min<std::uint64_t>(9, access.reads() * 10 / budget);
        ++out.read_histogram[bucket];
    }
    out.trials = trials;
    out.mean_reads = total_reads / static_cast<double>(trials);
    return out;
}

std::string format_value(const GameValue& v)
{
    return v ? std::to_string(*v) : "none";
}

}  // namespace saddle
