#include "torrigid/lattice.hpp"

#include <algorithm>

namespace torrigid::lattice {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f)
{
    if (f == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(target, j) += f * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f)
{
    if (f == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, target) += f * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

void negate_col(IntMatrix& m, std::size_t c)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, c) = -m(i, c);
}

} // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            out.push_back(D(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        std::size_t bi = t, bj = t;
        bool found = false;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found)
            break;
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q = floor_div(a(i, t), a(t, t));
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (a(i, t) != 0) {
                    a.swap_rows(i, t);
                    u.swap_rows(i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q = floor_div(a(t, j), a(t, t));
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(j, t);
                    v.swap_cols(j, t);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility: if the pivot fails to divide some trailing entry,
            // fold that row into the pivot row and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row_multiple(a, t, i, 1);
                        add_row_multiple(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0) {
            negate_row(a, t);
            negate_row(u, t);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

HermiteDecomposition column_hermite_form(const IntMatrix& m)
{
    IntMatrix a = m;
    IntMatrix w = IntMatrix::identity(m.cols());
    HermiteDecomposition out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.rows() && k < a.cols(); ++i) {
        for (;;) {
            std::size_t best = a.cols();
            for (std::size_t j = k; j < a.cols(); ++j)
                if (a(i, j) != 0 && (best == a.cols() || abs(a(i, j)) < abs(a(i, best))))
                    best = j;
            if (best == a.cols())
                break;
            a.swap_cols(k, best);
            w.swap_cols(k, best);
            bool clean = true;
            for (std::size_t j = k + 1; j < a.cols(); ++j) {
                if (a(i, j) == 0)
                    continue;
                Integer q = floor_div(a(i, j), a(i, k));
                add_col_multiple(a, j, k, -q);
                add_col_multiple(w, j, k, -q);
                if (a(i, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a(i, k) == 0)
            continue;
        if (a(i, k) < 0) {
            negate_col(a, k);
            negate_col(w, k);
        }
        for (std::size_t j = 0; j < k; ++j) {
            Integer q = floor_div(a(i, j), a(i, k));
            add_col_multiple(a, j, k, -q);
            add_col_multiple(w, j, k, -q);
        }
        out.pivot_rows.push_back(i);
        ++k;
    }
    out.rank = k;
    out.H = std::move(a);
    out.W = std::move(w);
    return out;
}

IntMatrix row_hermite_form(const IntMatrix& m)
{
    HermiteDecomposition h = column_hermite_form(m.transpose());
    IntMatrix out(h.rank, m.cols());
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = h.H(j, i);
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m)
{
    HermiteDecomposition h = column_hermite_form(m);
    std::vector<IntVector> basis;
    for (std::size_t c = h.rank; c < m.cols(); ++c)
        basis.push_back(h.W.col(c));
    if (basis.empty())
        return basis;
    IntMatrix canonical = row_hermite_form(matrix_from_rows(basis));
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < canonical.rows(); ++i)
        out.push_back(canonical.row(i));
    return out;
}

namespace detail {

/// Integer solutions of m x = b as particular + kernel lattice, if any.
std::optional<std::pair<IntVector, std::vector<IntVector>>> integer_solutions(const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows())
        throw InputError("integer system: right-hand side length mismatch");
    HermiteDecomposition h = column_hermite_form(m);
    IntVector residual = b;
    IntVector y(m.cols());
    for (std::size_t k = 0; k < h.rank; ++k) {
        std::size_t p = h.pivot_rows[k];
        if (residual[p] % h.H(p, k) != 0)
            return std::nullopt;
        y[k] = residual[p] / h.H(p, k);
        for (std::size_t i = 0; i < m.rows(); ++i)
            residual[i] -= y[k] * h.H(i, k);
    }
    for (const auto& x : residual)
        if (x != 0)
            return std::nullopt;
    IntVector particular = h.W * y;
    std::vector<IntVector> kernel;
    for (std::size_t c = h.rank; c < m.cols(); ++c)
        kernel.push_back(h.W.col(c));
    return std::make_pair(std::move(particular), std::move(kernel));
}

} // namespace detail

bool in_row_lattice(const IntMatrix& generators, const IntVector& v)
{
    if (v.size() != generators.cols())
        throw InputError("row lattice membership: length mismatch");
    return detail::integer_solutions(generators.transpose(), v).has_value();
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            a.swap_rows(p, c);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                Integer t = a(c, c) * a(i, j) - a(i, c) * a(c, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(c, c);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace torrigid::lattice
