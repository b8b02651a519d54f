#include "helpers.hpp"
#include "saddle/matrix.hpp"

#include <doctest.h>

#include <sstream>

using namespace saddle;

namespace {

Matrix parse(const std::string& text)
{
    std::istringstream in(text);
    return load_matrix(in);
}

std::size_t parse_error_token(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.token();
    }
    return 0;
}

}  // namespace

TEST_CASE("load_matrix reads row-major entries")
{
    const Matrix one = parse("1 1 5");
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 1);
    CHECK(one.at(0, 0) == 5);

    const Matrix two = parse("2 2 1 2 4 3");
    CHECK(two == Matrix::from_rows({{1, 2}, {4, 3}}));

    const Matrix spaced = parse("  2\n3\t-1 0 +7\n\n9223372036854775807 -9223372036854775808 4 ");
    CHECK(spaced.cols() == 3);
    CHECK(spaced.at(0, 2) == 7);
    CHECK(spaced.at(1, 0) == INT64_MAX);
    CHECK(spaced.at(1, 1) == INT64_MIN);
}

TEST_CASE("load_matrix reports the offending token")
{
    CHECK_THROWS_AS(parse("2 2 1 2 4"), ParseError);
    CHECK(parse_error_token("2 2 1 2 4") == 6);
    CHECK(parse_error_token("2 x 1 2") == 2);
    CHECK(parse_error_token("0 2") == 1);
    CHECK(parse_error_token("2 -1") == 2);
    CHECK(parse_error_token("1 2 3 4.5") == 4);
    CHECK(parse_error_token("1 1 9223372036854775808") == 3);
    CHECK(parse_error_token("1 1 3 4") == 4);
    CHECK(parse_error_token("") == 1);
}

TEST_CASE("save then load is byte-identical")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = testing::random_matrix(1 + rng() % 7, 1 + rng() % 7, INT64_MIN, INT64_MAX, rng);
        std::ostringstream first;
        save_matrix(first, m);
        std::istringstream in(first.str());
        const Matrix back = load_matrix(in);
        CHECK(back == m);
        std::ostringstream second;
        save_matrix(second, back);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("lex_compare breaks value ties by row then column")
{
    CountingAccess counter;
    CHECK(lex_compare({5, 0, 0}, {5, 0, 1}, counter) < 0);
    CHECK(lex_compare({3, 2, 0}, {5, 0, 0}, counter) < 0);
    CHECK(lex_compare({5, 1, 0}, {5, 0, 9}, counter) > 0);
    CHECK(lex_compare({5, 1, 0}, {5, 1, 0}, counter) == 0);
    CHECK(counter.comparisons() == 4);
    CHECK(counter.entry_reads() == 0);
}

TEST_CASE("lex order is a strict total order on the cells of a matrix with duplicates")
{
    std::mt19937_64 rng(5);
    const Matrix m = testing::random_matrix(6, 6, 0, 3, rng);
    CountingAccess counter;
    std::vector<LexKey> keys;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) keys.push_back(counter.key(m, r, c));

    for (int trial = 0; trial < 5000; ++trial) {
        const LexKey& a = keys[rng() % keys.size()];
        const LexKey& b = keys[rng() % keys.size()];
        const LexKey& c = keys[rng() % keys.size()];
        const auto ab = lex_compare(a, b, counter);
        const auto ba = lex_compare(b, a, counter);
        CHECK((ab == 0) == (a.row == b.row && a.col == b.col));
        CHECK((ab < 0) == (ba > 0));
        if (ab < 0 && lex_compare(b, c, counter) < 0) CHECK(lex_compare(a, c, counter) < 0);
    }
}

TEST_CASE("CountingAccess counts reads and is monotone")
{
    const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
    CountingAccess counter;
    CHECK(counter.read(m, 1, 0) == 3);
    const LexKey k = counter.key(m, 0, 1);
    CHECK(k == LexKey{2, 0, 1});
    CHECK(counter.entry_reads() == 2);
    CHECK(counter.less(Entry{1}, Entry{2}));
    CHECK(counter.comparisons() == 1);
}

TEST_CASE("compact_view")
{
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});

    SUBCASE("drop one column of a 2x2")
    {
        const Matrix sq = Matrix::from_rows({{1, 2}, {3, 4}});
        const std::vector<std::size_t> cols{1};
        const MatrixView v = compact_view(MatrixView(sq), {}, cols);
        CHECK(v.height() == 2);
        CHECK(v.width() == 1);
        CHECK(v.col_index(0) == 0);
    }
    SUBCASE("identity")
    {
        const MatrixView v = compact_view(MatrixView(m), {}, {});
        CHECK(std::vector<std::size_t>(v.alive_rows().begin(), v.alive_rows().end()) ==
              std::vector<std::size_t>{0, 1, 2});
        CHECK(v.width() == 3);
    }
    SUBCASE("order preserved")
    {
        const std::vector<std::size_t> rows{1};
        const MatrixView v = compact_view(MatrixView(m), rows, {});
        CHECK(std::vector<std::size_t>(v.alive_rows().begin(), v.alive_rows().end()) ==
              std::vector<std::size_t>{0, 2});
        CountingAccess counter;
        CHECK(v.key(1, 2, counter).value == 9);
    }
    SUBCASE("removing everything is an error and leaves the view intact")
    {
        MatrixView v(m);
        const std::vector<std::size_t> all{0, 1, 2};
        const std::vector<std::size_t> one{0};
        CHECK_THROWS_AS(v.compact(one, all), DegenerateView);
        CHECK(v.height() == 3);
        CHECK(v.width() == 3);
        CHECK_THROWS_AS(v.compact(all, {}), DegenerateView);
    }
    SUBCASE("out-of-range position")
    {
        MatrixView v(m);
        const std::vector<std::size_t> bad{3};
        CHECK_THROWS_AS(v.compact(bad, {}), std::out_of_range);
    }
}

TEST_CASE("repeated random compaction keeps survivors sorted and entries unchanged")
{
    std::mt19937_64 rng(99);
    const Matrix m = testing::random_matrix(40, 30, -50, 50, rng);
    MatrixView v(m);
    while (v.height() > 1 && v.width() > 1) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i + 1 < v.height(); ++i)
            if (rng() % 3 == 0) rows.push_back(i);
        for (std::size_t j = 0; j + 1 < v.width(); ++j)
            if (rng() % 3 == 0) cols.push_back(j);
        if (rows.empty() && cols.empty()) rows.push_back(0);
        v.compact(rows, cols);
        CHECK(std::is_sorted(v.alive_rows().begin(), v.alive_rows().end()));
        CHECK(std::adjacent_find(v.alive_rows().begin(), v.alive_rows().end()) == v.alive_rows().end());
        CountingAccess counter;
        for (std::size_t i = 0; i < v.height(); ++i)
            for (std::size_t j = 0; j < v.width(); ++j)
                CHECK(v.key(i, j, counter).value == m.at(v.row_index(i), v.col_index(j)));
    }
}

TEST_CASE("views reject malformed index arrays")
{
    const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK_THROWS_AS(MatrixView(m, {}, {0}), DegenerateView);
    CHECK_THROWS_AS(MatrixView(m, {1, 0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(MatrixView(m, {0}, {2}), std::out_of_range);
    const MatrixView v(m, {1}, {0, 1});
    CHECK(v.contains(1, 1));
    CHECK_FALSE(v.contains(0, 1));
}

TEST_CASE("matrix construction validates shape")
{
    CHECK_THROWS_AS(Matrix(0, 1, std::vector<Entry>{}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(2, 2, std::vector<Entry>{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}
