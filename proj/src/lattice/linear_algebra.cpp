#include "torrigid/lattice.hpp"

#include <limits>

namespace torrigid::lattice {

RowEchelon row_reduce(RatMatrix m)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(p, r);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m)
{
    return row_reduce(m).pivots.size();
}

std::size_t rank(const IntMatrix& m)
{
    return rank(to_rational(m));
}

namespace {

std::size_t rank_bareiss_gmp(const std::vector<std::int64_t>& entries, std::size_t rows, std::size_t cols)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(entries[i * cols + j]);
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank_small(std::vector<std::int64_t> m, std::size_t rows, std::size_t cols)
{
    // Fraction-free Bareiss elimination: every intermediate entry is a minor
    // of the input, so the division by the previous pivot is exact.
    const std::vector<std::int64_t> original = m;
    auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return m[i * cols + j]; };
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(at(p, j), at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::int64_t lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 v = static_cast<__int128>(at(r, c)) * at(i, j) - static_cast<__int128>(lead) * at(r, j);
                v /= prev;
                if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
                    return rank_bareiss_gmp(original, rows, cols);
                at(i, j) = static_cast<std::int64_t>(v);
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

std::vector<RatVector> nullspace(const RatMatrix& m)
{
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows())
        throw InputError("solve: right-hand side length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        x[e.pivots[k]] = e.reduced(k, m.cols());
    return x;
}

} // namespace torrigid::lattice
