#include "saddle/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace saddle {

ParseError::ParseError(std::size_t token, const std::string& what)
    : std::runtime_error("token " + std::to_string(token) + ": " + what), token_(token)
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) throw std::invalid_argument("entry count does not match rows*cols");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::shared_ptr<const EntrySource> source)
    : rows_(rows), cols_(cols), source_(std::move(source))
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (!source_) throw std::invalid_argument("null entry source");
}

Matrix Matrix::from_rows(const std::vector<std::vector<Entry>>& rows)
{
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
    const std::size_t cols = rows.front().size();
    std::vector<Entry> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::materialize() const
{
    if (is_dense()) return *this;
    std::vector<Entry> entries(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) entries[r * cols_ + c] = source_->at(r, c);
    return Matrix(rows_, cols_, std::move(entries));
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.is_dense() && b.is_dense()) return a.entries_ == b.entries_;
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

std::strong_ordering lex_compare(const LexKey& a, const LexKey& b, CountingAccess& counter)
{
    return counter.compare(a, b);
}

MatrixView::MatrixView(const Matrix& base) : base_(&base), rows_(base.rows()), cols_(base.cols())
{
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] = i;
    for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] = j;
}

namespace {

void check_alive(const std::vector<std::size_t>& idx, std::size_t limit, const char* what)
{
    if (idx.empty()) throw DegenerateView(std::string("view has no ") + what);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= limit) throw std::out_of_range(std::string(what) + " index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
    }
}

void drop_positions(std::vector<std::size_t>& alive, std::span<const std::size_t> remove, const char* what)
{
    if (remove.empty()) return;
    std::vector<char> dead(alive.size(), 0);
    for (std::size_t pos : remove) {
        if (pos >= alive.size()) throw std::out_of_range(std::string(what) + " position out of range");
        dead[pos] = 1;
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (!dead[i]) alive[out++] = alive[i];
    if (out == 0) throw DegenerateView(std::string("compaction would remove every ") + what);
    alive.resize(out);
}

}  // namespace

MatrixView::MatrixView(const Matrix& base, std::vector<std::size_t> alive_rows,
                       std::vector<std::size_t> alive_cols)
    : base_(&base), rows_(std::move(alive_rows)), cols_(std::move(alive_cols))
{
    check_alive(rows_, base.rows(), "rows");
    check_alive(cols_, base.cols(), "columns");
}

bool MatrixView::contains(std::size_t row, std::size_t col) const
{
    return std::binary_search(rows_.begin(), rows_.end(), row) &&
           std::binary_search(cols_.begin(), cols_.end(), col);
}

void MatrixView::compact(std::span<const std::size_t> remove_rows, std::span<const std::size_t> remove_cols)
{
    // Validate both sides before touching either so a failure leaves the view intact.
    std::vector<std::size_t> rows = rows_;
    std::vector<std::size_t> cols = cols_;
    drop_positions(rows, remove_rows, "row");
    drop_positions(cols, remove_cols, "column");
    rows_ = std::move(rows);
    cols_ = std::move(cols);
}

MatrixView compact_view(MatrixView view, std::span<const std::size_t> remove_rows,
                        std::span<const std::size_t> remove_cols)
{
    view.compact(remove_rows, remove_cols);
    return view;
}

Matrix load_matrix(std::istream& in)
{
    std::size_t token = 0;
    std::string text;

    auto next_int = [&](const char* what) -> long long {
        ++token;
        if (!(in >> text)) throw ParseError(token, std::string("missing ") + what);
        long long value = 0;
        const char* first = text.data();
        const char* last = text.data() + text.size();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError(token, "value '" + text + "' does not fit in 64 bits");
        if (ec != std::errc() || ptr != last || first == last)
            throw ParseError(token, "malformed integer '" + text + "'");
        return value;
    };

    const long long rows = next_int("row count");
    if (rows <= 0) throw ParseError(token, "row count must be positive");
    const long long cols = next_int("column count");
    if (cols <= 0) throw ParseError(token, "column count must be positive");

    const auto count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    std::vector<Entry> entries;
    entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) entries.push_back(next_int("matrix entry"));
    if (in >> text) throw ParseError(token + 1, "unexpected trailing token '" + text + "'");

    return Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

Matrix load_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_matrix(in);
}

void save_matrix(std::ostream& out, const Matrix& m)
{
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ' ';
            out << m.at(r, c);
        }
        out << '\n';
    }
}

void save_matrix_file(const std::string& path, const Matrix& m)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    save_matrix(out, m);
}

}  // namespace saddle
