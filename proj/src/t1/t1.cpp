#include "torrigid/lattice.hpp"
#include "torrigid/t1.hpp"

#include <cstdlib>
#include <sstream>

namespace torrigid::t1 {

using rigidity::Hypothesis;
using rigidity::Status;
using toric::Cone;
using toric::Fan;

std::string to_string(Completeness c)
{
    return c == Completeness::Guaranteed ? "guaranteed" : "bounded";
}

std::string to_string(T1Mode m)
{
    switch (m) {
    case T1Mode::Simplicial: return "Simplicial";
    case T1Mode::CodimGe3: return "CodimGe3";
    case T1Mode::Unsupported: return "Unsupported";
    }
    return "?";
}

std::string QPresentation::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < r; ++i) {
        os << '(';
        for (std::size_t j = 0; j < m; ++j) {
            if (j)
                os << ", ";
            const Integer& c = a(i, j);
            if (c == 0)
                os << '0';
            else if (c == 1)
                os << 'x' << j + 1;
            else if (c == -1)
                os << "-x" << j + 1;
            else
                os << c << "*x" << j + 1;
        }
        os << ")\n";
    }
    return os.str();
}

QPresentation q_presentation(const toric::CoxData& cox)
{
    return {cox.r, cox.m, cox.grading};
}

namespace {

IntVector values(const IntMatrix& v, const IntVector& u)
{
    return v * u;
}

template <class Fn>
void for_each_in_box(std::size_t n, long bound, Fn fn)
{
    IntVector u(n, Integer(-bound));
    for (;;) {
        fn(u);
        std::size_t k = 0;
        while (k < n && u[k] == bound) {
            u[k] = -bound;
            ++k;
        }
        if (k == n)
            return;
        u[k] += 1;
    }
}

void require_full_dimensional(const Cone& cone)
{
    if (!cone.is_full_dimensional())
        throw InputError("cone must be full-dimensional (rays span the lattice rationally)");
}

void require_bound(long bound)
{
    if (bound < 1)
        throw InputError("search bound must be positive");
}

/// Primitive inner normals of the facets: generators of the dual cone.
std::vector<IntVector> dual_generators(const Cone& cone)
{
    const std::size_t n = cone.ambient_rank();
    std::vector<IntVector> out;
    for (IndexSet f : toric::faces_of_dimension(cone, n - 1)) {
        auto ns = lattice::nullspace(to_rational(IntMatrix::from_rows(cone.rays_of(f), n)));
        if (ns.size() != 1)
            throw Error("facet without a unique normal");
        IntVector u = clear_denominators(ns[0]);
        for (int j = 0; j < cone.ray_count(); ++j) {
            if (f.contains(j))
                continue;
            if (dot(u, cone.rays()[j]) < 0)
                for (auto& x : u)
                    x = -x;
            break;
        }
        out.push_back(std::move(u));
    }
    return out;
}

std::size_t kernel_dimension(const RatMatrix& m)
{
    return m.cols() - lattice::rank(m);
}

} // namespace

long default_bound(const Cone& cone)
{
    if (const char* env = std::getenv("TORRIGID_BOUND")) {
        char* end = nullptr;
        long b = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || b < 1)
            throw InputError(std::string("TORRIGID_BOUND must be a positive integer, got '") + env + "'");
        return b;
    }
    Integer mx = 0;
    for (const auto& v : cone.rays())
        for (const auto& x : v)
            if (abs(x) > mx)
                mx = abs(x);
    return std::max(1L, 2 * to_long(mx));
}

PartResult hom_q_h3(const Cone& cone, long bound)
{
    require_full_dimensional(cone);
    require_bound(bound);
    const auto codim = toric::singular_codim(cone);
    if (!codim.at_least(3))
        throw UnsupportedError("Hom(Q, H^3) part needs codim Sing >= 3, got " + codim.to_string());
    PartResult res;
    res.bound = bound;
    const auto cox = toric::class_group(cone);
    if (cox.r == 0) {
        res.completeness = Completeness::Guaranteed;
        res.method = "r = 0, Q = 0";
        return res;
    }
    res.method = "degreewise kernel over the window";
    localcoh::LocalCohomology lc(toric::irrelevant_ideal(Fan::smooth_faces(cone)));
    const int m = static_cast<int>(cox.m);

    for_each_in_box(cox.n, bound, [&](const IntVector& u) {
        IntVector p = values(cox.ray_matrix, u);
        if (localcoh::negative(p).empty())
            return;
        const std::size_t h = lc.dimension(3, p);
        if (h == 0)
            return;
        std::vector<RatMatrix> steps;
        std::size_t rows = 0;
        for (int j = 0; j < m; ++j) {
            steps.push_back(lc.mult(3, p, j));
            rows += steps.back().rows();
        }
        RatMatrix big(rows, cox.r * h);
        std::size_t offset = 0;
        for (int j = 0; j < m; ++j) {
            const RatMatrix& mj = steps[j];
            for (std::size_t i = 0; i < cox.r; ++i) {
                const Integer& aij = cox.grading(i, j);
                if (aij == 0)
                    continue;
                for (std::size_t r = 0; r < mj.rows(); ++r)
                    for (std::size_t c = 0; c < h; ++c)
                        big(offset + r, i * h + c) = aij * mj(r, c);
            }
            offset += mj.rows();
        }
        const std::size_t k = kernel_dimension(big);
        if (k)
            res.contributions.push_back({"homq", p, k});
        res.dimension += k;
    });

    // Gorenstein 3-dimensional isolated singularities: only p = (-1, ..., -1)
    // contributes, and it is reached at u = -u0.
    bool guaranteed = false;
    if (cox.n == 3 && cox.m >= 4) {
        auto cert = toric::q_gorenstein(cone);
        if (cert && cert->g == 1) {
            guaranteed = true;
            for (const auto& x : cert->u0)
                if (abs(x) > bound)
                    guaranteed = false;
        }
    }
    res.completeness = guaranteed ? Completeness::Guaranteed : Completeness::Bounded;
    return res;
}

std::optional<PartResult> der_part_vanishing(const Cone& cone, long bound)
{
    auto cert = rigidity::der_vanishing_gamma(cone, bound);
    if (cert.verdict != rigidity::Verdict::DerPartVanishes)
        return std::nullopt;
    PartResult res;
    res.bound = bound;
    res.completeness = Completeness::Guaranteed;
    res.method = "connectivity criterion";
    return res;
}

PartResult der_part(const Cone& cone, DerMode mode, long bound)
{
    require_full_dimensional(cone);
    require_bound(bound);
    if (mode == DerMode::SufficientVanishing) {
        auto v = der_part_vanishing(cone, bound);
        if (!v)
            throw UnsupportedError("connectivity criterion does not certify vanishing of the Der part");
        return *v;
    }

    const auto codim = toric::singular_codim(cone);
    if (!codim.at_least(3) && !toric::is_simplicial(cone))
        throw UnsupportedError("Der part needs a simplicial cone or codim Sing >= 3");
    PartResult res;
    res.bound = bound;
    if (toric::is_smooth(cone)) {
        res.completeness = Completeness::Guaranteed;
        res.method = "smooth: B is the unit ideal";
        return res;
    }
    res.method = "degreewise kernel over the window";
    res.completeness = Completeness::Bounded;

    const auto cox = toric::class_group(cone);
    const int m = static_cast<int>(cox.m);
    localcoh::LocalCohomology lc(toric::irrelevant_ideal(Fan::smooth_faces(cone)));
    std::vector<IntVector> invariants; // exponents a = V w of the generators of S_0
    for (const auto& w : lattice::hilbert_basis(dual_generators(cone), cox.n))
        invariants.push_back(values(cox.ray_matrix, w));

    for_each_in_box(cox.n, bound, [&](const IntVector& u) {
        const IntVector d = values(cox.ray_matrix, u);
        // Domain: (g_j) with g_j in H^2 of degree d + e_j.
        std::vector<IntVector> src(m, d);
        std::vector<std::size_t> dims(m), offsets(m);
        std::size_t total = 0;
        for (int j = 0; j < m; ++j) {
            src[j][j] += 1;
            dims[j] = lc.dimension(2, src[j]);
            offsets[j] = total;
            total += dims[j];
        }
        if (total == 0)
            return;
        // D(x^a) = sum_j a_j x^{a - e_j} g_j must vanish in degree d + a.
        std::vector<RatMatrix> blocks;
        std::size_t rows = 0;
        for (const auto& a : invariants) {
            IntVector target = d;
            for (int k = 0; k < m; ++k)
                target[k] += a[k];
            const std::size_t t = lc.dimension(2, target);
            if (t == 0)
                continue;
            RatMatrix block(t, total);
            for (int j = 0; j < m; ++j) {
                if (a[j] == 0 || dims[j] == 0)
                    continue;
                IntVector c = a;
                c[j] -= 1;
                RatMatrix mm = lc.mult_monomial(2, src[j], c);
                for (std::size_t r = 0; r < t; ++r)
                    for (std::size_t col = 0; col < dims[j]; ++col)
                        block(r, offsets[j] + col) += Rational(a[j]) * mm(r, col);
            }
            rows += t;
            blocks.push_back(std::move(block));
        }
        RatMatrix conditions(rows, total);
        std::size_t offset = 0;
        for (const auto& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t col = 0; col < total; ++col)
                    conditions(offset + r, col) = b(r, col);
            offset += b.rows();
        }
        const std::size_t k = kernel_dimension(conditions);
        if (k)
            res.contributions.push_back({"der", d, k});
        res.dimension += k;
    });
    return res;
}

T1Report t1_affine(const Cone& cone, std::optional<long> bound_opt)
{
    require_full_dimensional(cone);
    T1Report rep;
    rep.bound = bound_opt ? *bound_opt : default_bound(cone);
    require_bound(rep.bound);
    rep.warnings = cone.warnings();

    const auto codim = toric::singular_codim(cone);
    const bool simplicial = toric::is_simplicial(cone);
    rep.hypotheses.push_back({"simplicial", simplicial ? Status::Satisfied : Status::Failed,
                              std::to_string(cone.ray_count()) + " rays in dimension " +
                                  std::to_string(cone.dimension())});
    rep.hypotheses.push_back({"codim Sing >= 3", codim.at_least(3) ? Status::Satisfied : Status::Failed,
                              "singular locus codimension " + codim.to_string()});

    if (toric::is_smooth(cone)) {
        rep.mode = T1Mode::Simplicial;
        rep.der = PartResult{0, Completeness::Guaranteed, rep.bound, "smooth: B is the unit ideal", {}};
        rep.homq = PartResult{0, Completeness::Guaranteed, rep.bound, "r = 0, Q = 0", {}};
        rep.total = 0;
        rep.completeness = Completeness::Guaranteed;
        return rep;
    }
    if (!simplicial && !codim.at_least(3)) {
        rep.mode = T1Mode::Unsupported;
        rep.warnings.push_back("non-simplicial cone with a singular locus of codimension " + codim.to_string() +
                               ": no formula available");
        return rep;
    }

    if (simplicial) {
        rep.mode = T1Mode::Simplicial;
        PartResult exact = der_part(cone, DerMode::Exact, rep.bound);
        rep.homq = PartResult{0, Completeness::Guaranteed, rep.bound, "simplicial: Q = 0", {}};
        rep.completeness = exact.completeness;
        if (codim.at_least(3)) {
            // Both descriptions apply; they must agree.
            auto vanishing = der_part_vanishing(cone, rep.bound);
            PartResult homq = hom_q_h3(cone, rep.bound);
            if (homq.dimension != 0 || (vanishing && exact.dimension != 0))
                throw Error("simplicial and codim >= 3 computations disagree");
            rep.hypotheses.push_back({"simplicial and codim >= 3 paths agree", Status::Satisfied,
                                      vanishing ? "Der part certified zero" : "Der part computed in the window"});
            if (vanishing) {
                exact.completeness = Completeness::Guaranteed;
                rep.completeness = Completeness::Guaranteed;
            }
        }
        rep.total = exact.dimension;
        rep.der = std::move(exact);
    } else {
        rep.mode = T1Mode::CodimGe3;
        auto vanishing = der_part_vanishing(cone, rep.bound);
        rep.der = vanishing ? *vanishing : der_part(cone, DerMode::Exact, rep.bound);
        rep.homq = hom_q_h3(cone, rep.bound);
        rep.total = rep.der->dimension + rep.homq->dimension;
        rep.completeness = rep.der->completeness == Completeness::Guaranteed &&
                                   rep.homq->completeness == Completeness::Guaranteed
                               ? Completeness::Guaranteed
                               : Completeness::Bounded;
    }
    if (rep.completeness == Completeness::Bounded)
        rep.warnings.push_back("degrees enumerated for u in [-" + std::to_string(rep.bound) + ", " +
                               std::to_string(rep.bound) + "]^" + std::to_string(cone.ambient_rank()) +
                               "; contributions outside the window are not counted");
    return rep;
}

Cone polygon_cone(const std::vector<IntVector>& vertices)
{
    if (vertices.size() < 3)
        throw InputError("polygon needs at least 3 vertices");
    std::vector<IntVector> rays;
    for (const auto& v : vertices) {
        if (v.size() != 2)
            throw InputError("polygon vertices must have 2 coordinates");
        rays.push_back({v[0], v[1], Integer(1)});
    }
    return Cone(3, std::move(rays));
}

PolygonReport t1_polygon(const std::vector<IntVector>& vertices)
{
    Cone cone = polygon_cone(vertices);
    PolygonReport rep;
    rep.vertices = vertices.size();
    if (!toric::singular_codim(cone).at_least(3))
        throw UnsupportedError("edges of the polygon are not primitive (edge fan not smooth); use t1_affine");
    rep.hypotheses.push_back({"edge fan smooth", Status::Satisfied, "isolated Gorenstein singularity"});
    rep.dimension = rep.vertices - 3;

    const auto cox = toric::class_group(cone);
    rep.minor_condition = true;
    if (cox.r > 0)
        for (IndexSet cols : subsets_of_size(IndexSet::range(static_cast<int>(cox.m)), static_cast<int>(cox.r))) {
            IntMatrix minor(cox.r, cox.r);
            auto e = cols.elements();
            for (std::size_t i = 0; i < cox.r; ++i)
                for (std::size_t k = 0; k < cox.r; ++k)
                    minor(i, k) = cox.grading(i, e[k]);
            if (lattice::determinant(minor) == 0) {
                rep.minor_condition = false;
                break;
            }
        }
    rep.hypotheses.push_back({"all r x r minors of A nonzero", rep.minor_condition ? Status::Satisfied : Status::Failed,
                              "r = " + std::to_string(cox.r)});

    rep.lifted = t1_affine(cone);
    if (!rep.lifted.total || *rep.lifted.total != rep.dimension)
        throw Error("polygon formula m - 3 = " + std::to_string(rep.dimension) +
                    " disagrees with the cone computation");
    rep.hypotheses.push_back({"agrees with t1 of the cone", Status::Satisfied, ""});
    return rep;
}

} // namespace torrigid::t1
