#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace saddle {

using Entry = std::int64_t;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t token, const std::string& what);
    std::size_t token() const noexcept { return token_; }

private:
    std::size_t token_;
};

class DegenerateView : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Entries computed on demand. Lets the benchmarks run at sizes whose dense
/// storage would not fit in memory.
class EntrySource {
public:
    virtual ~EntrySource() = default;
    virtual Entry at(std::size_t row, std::size_t col) const = 0;
};

/// Immutable rectangular matrix of signed 64-bit entries, row-major.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
    Matrix(std::size_t rows, std::size_t cols, std::shared_ptr<const EntrySource> source);

    static Matrix from_rows(const std::vector<std::vector<Entry>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_dense() const noexcept { return source_ == nullptr; }

    Entry at(std::size_t row, std::size_t col) const
    {
        if (source_) return source_->at(row, col);
        return entries_[row * cols_ + col];
    }

    /// Dense copy of a procedurally backed matrix (identity for dense ones).
    Matrix materialize() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
    std::shared_ptr<const EntrySource> source_;
};

/// Entry lifted to (value, row, col) so that every cell compares distinct.
struct LexKey {
    Entry value;
    std::size_t row;
    std::size_t col;

    friend constexpr std::strong_ordering operator<=>(const LexKey&, const LexKey&) = default;
    friend constexpr bool operator==(const LexKey&, const LexKey&) = default;
};

/// Per-solver counters for the comparison model. Every entry read and every
/// comparison made by the algorithms goes through one of these.
class CountingAccess {
public:
    std::uint64_t entry_reads() const noexcept { return reads_; }
    std::uint64_t comparisons() const noexcept { return comparisons_; }

    Entry read(const Matrix& m, std::size_t row, std::size_t col)
    {
        ++reads_;
        return m.at(row, col);
    }

    LexKey key(const Matrix& m, std::size_t row, std::size_t col)
    {
        return LexKey{read(m, row, col), row, col};
    }

    std::strong_ordering compare(const LexKey& a, const LexKey& b)
    {
        ++comparisons_;
        return a <=> b;
    }

    bool less(const LexKey& a, const LexKey& b) { return compare(a, b) < 0; }

    bool less(Entry a, Entry b)
    {
        ++comparisons_;
        return a < b;
    }

    /// Folds another instance's counts into this one.
    void absorb(const CountingAccess& other) noexcept
    {
        reads_ += other.reads_;
        comparisons_ += other.comparisons_;
    }

private:
    std::uint64_t reads_ = 0;
    std::uint64_t comparisons_ = 0;
};

std::strong_ordering lex_compare(const LexKey& a, const LexKey& b, CountingAccess& counter);

/// Live submatrix: the base matrix restricted to alive rows and columns,
/// both stored as strictly increasing original indices.
class MatrixView {
public:
    explicit MatrixView(const Matrix& base);
    MatrixView(const Matrix& base, std::vector<std::size_t> alive_rows,
               std::vector<std::size_t> alive_cols);

    const Matrix& base() const noexcept { return *base_; }
    std::size_t height() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return cols_.size(); }
    std::span<const std::size_t> alive_rows() const noexcept { return rows_; }
    std::span<const std::size_t> alive_cols() const noexcept { return cols_; }
    std::size_t row_index(std::size_t pos) const { return rows_[pos]; }
    std::size_t col_index(std::size_t pos) const { return cols_[pos]; }

    LexKey key(std::size_t row_pos, std::size_t col_pos, CountingAccess& counter) const
    {
        return counter.key(*base_, rows_[row_pos], cols_[col_pos]);
    }

    bool contains(std::size_t row, std::size_t col) const;

    /// Drops the given view-relative positions in place. Survivors keep
    /// their order. Cost is linear in the current height plus width.
    void compact(std::span<const std::size_t> remove_rows, std::span<const std::size_t> remove_cols);

private:
    const Matrix* base_;
    std::vector<std::size_t> rows_;
    std::vector<std::size_t> cols_;
};

MatrixView compact_view(MatrixView view, std::span<const std::size_t> remove_rows,
                        std::span<const std::size_t> remove_cols);

/// Reads `m n e_00 ... e_{m-1,n-1}`, whitespace separated.
Matrix load_matrix(std::istream& in);
Matrix load_matrix_file(const std::string& path);

/// Writes one header line `m n` then one line per row.
void save_matrix(std::ostream& out, const Matrix& m);
void save_matrix_file(const std::string& path, const Matrix& m);

}  // namespace saddle
