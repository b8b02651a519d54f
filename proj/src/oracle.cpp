#include "saddle/oracle.hpp"

namespace saddle {

namespace {

struct Extreme {
    Entry value;
    std::size_t count;
};

std::vector<Extreme> row_maxima(const Matrix& m)
{
    std::vector<Extreme> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Extreme e{m.at(r, 0), 1};
        for (std::size_t c = 1; c < m.cols(); ++c) {
            const Entry v = m.at(r, c);
            if (v > e.value) e = {v, 1};
            else if (v == e.value) ++e.count;
        }
        out[r] = e;
    }
    return out;
}

std::vector<Extreme> col_minima(const Matrix& m)
{
    std::vector<Extreme> out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = {m.at(0, c), 1};
    for (std::size_t r = 1; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Entry v = m.at(r, c);
            if (v < out[c].value) out[c] = {v, 1};
            else if (v == out[c].value) ++out[c].count;
        }
    }
    return out;
}

}  // namespace

OracleResult brute_strict(const Matrix& m)
{
    const auto rmax = row_maxima(m);
    const auto cmin = col_minima(m);
    OracleResult result{SaddleKind::strict, {}};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (rmax[r].count != 1) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Entry v = m.at(r, c);
            if (v == rmax[r].value && v == cmin[c].value && cmin[c].count == 1) {
                result.cells.push_back({r, c, v});
                return result;
            }
        }
    }
    return result;
}

OracleResult brute_nonstrict(const Matrix& m)
{
    const auto rmax = row_maxima(m);
    const auto cmin = col_minima(m);
    OracleResult result{SaddleKind::nonstrict, {}};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Entry v = m.at(r, c);
            if (v == rmax[r].value && v == cmin[c].value) result.cells.push_back({r, c, v});
        }
    return result;
}

}  // namespace saddle
