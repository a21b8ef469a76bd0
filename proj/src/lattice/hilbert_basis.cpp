#include "torrigid/lattice.hpp"

#include <algorithm>
#include <set>

namespace torrigid::lattice {

namespace {

/// Lattice points of the half-open parallelepiped spanned by the columns of
/// a nonsingular square integer matrix, one per class of Z^d / W Z^d.
std::vector<IntVector> parallelepiped_points(const IntMatrix& w)
{
    const std::size_t d = w.rows();
    SmithDecomposition snf = smith_normal_form(w);
    // U W V = D, so Z^d / W Z^d = Z^d / U^{-1} D Z^d and the classes are
    // represented by U^{-1} c with 0 <= c_i < D_ii.
    RatMatrix u_inv(d, d);
    {
        RatMatrix u = to_rational(snf.U);
        for (std::size_t j = 0; j < d; ++j) {
            RatVector e(d);
            e[j] = 1;
            auto col = solve(u, e);
            for (std::size_t i = 0; i < d; ++i)
                u_inv(i, j) = (*col)[i];
        }
    }
    RatMatrix wq = to_rational(w);
    std::vector<Integer> moduli(d);
    for (std::size_t i = 0; i < d; ++i)
        moduli[i] = abs(snf.D(i, i));

    std::vector<IntVector> out;
    IntVector c(d);
    for (;;) {
        RatVector y(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                y[i] += u_inv(i, j) * c[j];
        RatVector lambda = *solve(wq, y);
        for (auto& l : lambda)
            l -= Rational(floor(l));
        IntVector x(d);
        for (std::size_t i = 0; i < d; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += lambda[j] * w(i, j);
            x[i] = s.get_num(); // integral by construction
        }
        out.push_back(std::move(x));
        std::size_t k = 0;
        while (k < d) {
            ++c[k];
            if (c[k] < moduli[k])
                break;
            c[k] = 0;
            ++k;
        }
        if (k == d)
            break;
    }
    return out;
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

} // namespace

std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& generators, std::size_t ambient_dim)
{
    std::vector<IntVector> gens;
    for (const auto& g : generators) {
        if (g.size() != ambient_dim)
            throw InputError("hilbert_basis: generator has wrong length");
        if (!is_zero(g))
            gens.push_back(primitive(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty())
        return {};
    if (!is_pointed(gens, ambient_dim))
        throw UnsupportedError("hilbert_basis: cone is not pointed");

    // Work in a basis of the saturated lattice span(gens) ∩ Z^n.
    IntMatrix g_rows = matrix_from_rows(gens);
    std::vector<IntVector> normals = integer_kernel(g_rows);
    std::vector<IntVector> basis;
    if (normals.empty()) {
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            IntVector e(ambient_dim);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = integer_kernel(matrix_from_rows(normals));
    }
    const std::size_t d = basis.size();
    RatMatrix b(ambient_dim, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < ambient_dim; ++i)
            b(i, j) = basis[j][i];
    std::vector<IntVector> coords;
    for (const auto& g : gens) {
        RatVector c = *solve(b, to_rational(g));
        IntVector ci(d);
        for (std::size_t i = 0; i < d; ++i)
            ci[i] = c[i].get_num();
        coords.push_back(std::move(ci));
    }

    // Candidates: generators plus parallelepiped points of every simplicial
    // subcone spanned by d independent generators.
    std::set<IntVector> candidates(coords.begin(), coords.end());
    const std::size_t m = coords.size();
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i)
        idx[i] = i;
    for (;;) {
        IntMatrix w(d, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r)
                w(r, c) = coords[idx[c]][r];
        if (determinant(w) != 0)
            for (auto& p : parallelepiped_points(w))
                if (!is_zero(p))
                    candidates.insert(std::move(p));
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == m - d + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }

    std::vector<IntVector> cand(candidates.begin(), candidates.end());
    std::vector<IntVector> result;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& c : cand) {
            if (c == x)
                continue;
            IntVector diff(d);
            for (std::size_t i = 0; i < d; ++i)
                diff[i] = x[i] - c[i];
            if (!is_zero(diff) && in_cone(coords, diff)) {
                reducible = true;
                break;
            }
        }
        if (reducible)
            continue;
        IntVector v(ambient_dim);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < ambient_dim; ++i)
                v[i] += x[j] * basis[j][i];
        result.push_back(std::move(v));
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace torrigid::lattice
