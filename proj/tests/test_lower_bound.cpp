#include "helpers.hpp"
#include "saddle/lower_bound.hpp"
#include "saddle/oracle.hpp"

#include <doctest.h>

using namespace saddle;

namespace {

GameValue brute_value(const Matrix& m)
{
    const auto r = brute_nonstrict(m);
    if (r.cells.empty()) return std::nullopt;
    return r.cells.front().value;
}

HardInstance build(std::vector<std::size_t> special, std::size_t t_row, Entry t_value)
{
    const std::size_t n = special.size();
    std::vector<Entry> e(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) e[r * n + special[r]] = 2;
    e[t_row * n + special[t_row]] = t_value;
    const std::size_t t_col = special[t_row];
    return HardInstance{Matrix(n, n, std::move(e)), std::move(special), t_row, t_col, t_value};
}

}  // namespace

TEST_CASE("hard instances are well formed")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        RandomPool pool(seed, 8);
        const auto inst = gen_hard_matrix(8, pool);
        CHECK(is_well_formed(inst));
        std::size_t twos = 0, zeros = 0, units = 0;
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) {
                const Entry v = inst.matrix.at(r, c);
                twos += v == 2;
                zeros += v == 0;
                units += v == 1 || v == -1;
            }
        CHECK(twos == 7);
        CHECK(zeros == 56);
        CHECK(units == 1);
    }
    CHECK_THROWS_AS([] { RandomPool p(1, 2); gen_hard_matrix(0, p); }(), std::invalid_argument);
}

TEST_CASE("classification examples")
{
    CHECK(classify_hard_instance(build({0, 1, 2}, 1, -1)) == Entry{0});
    CHECK(brute_value(build({0, 1, 2}, 1, -1).matrix) == Entry{0});
    CHECK(classify_hard_instance(build({2, 2, 2}, 0, 1)) == Entry{1});
    CHECK(brute_value(build({2, 2, 2}, 0, 1).matrix) == Entry{1});
    CHECK_FALSE(classify_hard_instance(build({2, 0, 2}, 0, 1)).has_value());
    CHECK_FALSE(brute_value(build({2, 0, 2}, 0, 1).matrix).has_value());
    CHECK(classify_hard_instance(build({0}, 0, -1)) == Entry{-1});
    CHECK(classify_hard_instance(build({0}, 0, 1)) == Entry{1});
    CHECK(format_value(Entry{1}) == "1");
    CHECK(format_value(std::nullopt) == "none");

    auto broken = build({0, 1}, 0, 1);
    broken.t_value = -1;
    CHECK_FALSE(is_well_formed(broken));
}

TEST_CASE("classification matches the brute-force oracle")
{
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            RandomPool pool(seed * 16 + n, n);
            const auto inst = gen_hard_matrix(n, pool);
            CHECK(classify_hard_instance(inst) == brute_value(inst.matrix));
        }
}

TEST_CASE("the sign of t is a fair coin")
{
    std::size_t positive = 0;
    const std::size_t total = 10000;
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        RandomPool pool(derive_seed(99, seed), 16);
        positive += gen_hard_matrix(16, pool).t_value == 1;
    }
    const double fraction = static_cast<double>(positive) / total;
    CHECK(fraction >= 0.48);
    CHECK(fraction <= 0.52);
}

TEST_CASE("budgeted access stops answering at the budget")
{
    const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
    BudgetedAccess access(m, 3);
    CHECK(access.read(0, 0) == 1);
    CHECK(access.read(1, 1) == 4);
    CHECK(access.read(1, 0) == 3);
    CHECK(access.remaining() == 0);
    CHECK_FALSE(access.exceeded());
    CHECK_THROWS_AS(access.read(0, 1), BudgetExceeded);
    CHECK(access.exceeded());
    CHECK(access.reads() == 3);
}

TEST_CASE("full scan succeeds with a full budget and fails with less")
{
    FullScanStrategy full;
    const auto rec = run_budget_experiment(full, 8, 200, 1, 4);
    CHECK(rec.success_rate() == 1.0);
    CHECK(rec.mean_reads == 64.0);
    CHECK(run_budget_experiment(full, 2, 50, 1, 5).success_rate() == 1.0);

    const auto starved = run_budget_experiment(full, 8, 50, 2, 4);
    CHECK(starved.success_rate() == 0.0);
    for (const auto& t : starved.records) CHECK(t.exceeded);
    CHECK_THROWS_AS(run_budget_experiment(full, 1, 5, 1, 0), std::invalid_argument);
}

TEST_CASE("budget experiments are reproducible and histogrammed")
{
    auto probe = make_strategy("random-probe");
    const auto a = run_budget_experiment(*probe, 16, 100, 4, 11);
    const auto b = run_budget_experiment(*probe, 16, 100, 4, 11);
    CHECK(a.successes == b.successes);
    CHECK(a.mean_reads == b.mean_reads);
    std::uint64_t histogram_total = 0;
    for (auto h : a.read_histogram) histogram_total += h;
    CHECK(histogram_total == 100);
    for (const auto& t : a.records) CHECK(t.reads <= t.budget);
    CHECK_THROWS_AS(make_strategy("oracle"), std::invalid_argument);
}

TEST_CASE("sub-quadratic budgets: partial strategies")
{
    for (const char* name : {"row-scan", "random-probe"}) {
        auto s = make_strategy(name);
        const auto rec = run_budget_experiment(*s, 32, 400, 8, 3);
        MESSAGE(name << " success at n^2/8 reads: " << rec.success_rate());
        CHECK(rec.success_rate() > 0.0);
        CHECK(rec.success_rate() < 1.0);
    }
}
