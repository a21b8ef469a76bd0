#include "torrigid/lattice.hpp"
#include "torrigid/toric.hpp"

#include <algorithm>
#include <set>

namespace torrigid::toric {

namespace {

std::vector<IntVector> normalise_rays(std::size_t ambient_rank, std::vector<IntVector> rays,
                                      std::vector<std::string>& warnings)
{
    if (ambient_rank == 0)
        throw InputError("lattice rank must be positive");
    if (rays.size() > static_cast<std::size_t>(IndexSet::capacity))
        throw UnsupportedError("more than 64 rays");
    for (auto& v : rays) {
        if (v.size() != ambient_rank)
            throw InputError("ray " + to_string(v) + " has length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(ambient_rank));
        Integer c = content(v);
        if (c == 0)
            throw InputError("zero ray");
        if (c != 1) {
            IntVector p = primitive(v);
            warnings.push_back("ray " + to_string(v) + " normalised to primitive " + to_string(p));
            v = std::move(p);
        }
    }
    std::set<IntVector> seen;
    for (const auto& v : rays)
        if (!seen.insert(v).second)
            throw InputError("duplicate ray " + to_string(v));
    return rays;
}

} // namespace

Cone::Cone(std::size_t ambient_rank, std::vector<IntVector> rays)
    : ambient_rank_(ambient_rank)
{
    rays_ = normalise_rays(ambient_rank, std::move(rays), warnings_);
    if (!lattice::is_pointed(rays_, ambient_rank_))
        throw InputError("cone is not pointed");
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        std::vector<IntVector> others;
        for (std::size_t j = 0; j < rays_.size(); ++j)
            if (j != i)
                others.push_back(rays_[j]);
        if (!others.empty() && lattice::in_cone(others, rays_[i]))
            throw InputError("ray " + to_string(rays_[i]) + " is not an extremal ray of the cone");
    }
    dimension_ = span_dimension(rays_, ambient_rank_);
}

Cone::Cone(std::size_t ambient_rank, std::vector<IntVector> rays, Unchecked)
    : ambient_rank_(ambient_rank), rays_(std::move(rays))
{
    dimension_ = span_dimension(rays_, ambient_rank_);
}

Cone Cone::from_longs(const std::vector<std::vector<long>>& rays)
{
    if (rays.empty())
        throw InputError("cone needs at least one ray to fix the lattice rank");
    std::vector<IntVector> v;
    for (const auto& r : rays)
        v.push_back(to_integer_vector(r));
    return Cone(rays.front().size(), std::move(v));
}

IntMatrix Cone::ray_matrix() const
{
    return IntMatrix::from_rows(rays_, ambient_rank_);
}

std::vector<IntVector> Cone::rays_of(IndexSet subset) const
{
    std::vector<IntVector> out;
    for (int i : subset.elements())
        out.push_back(rays_.at(i));
    return out;
}

std::size_t span_dimension(const std::vector<IntVector>& rays, std::size_t ambient_rank)
{
    if (rays.empty())
        return 0;
    return lattice::rank(IntMatrix::from_rows(rays, ambient_rank));
}

bool is_face(const Cone& cone, IndexSet subset)
{
    lattice::AffineSystem sys;
    sys.variables = cone.ambient_rank();
    for (int i = 0; i < cone.ray_count(); ++i) {
        if (subset.contains(i))
            sys.add_equality(cone.rays()[i], 0);
        else
            sys.add_at_least(cone.rays()[i], 1);
    }
    return lattice::rational_feasible(sys);
}

std::vector<IndexSet> faces(const Cone& cone)
{
    const int m = cone.ray_count();
    const std::size_t d = cone.dimension();
    std::vector<IndexSet> found{IndexSet{}};
    if (m == 0)
        return found;

    // Basis of the span chosen among the rays; a covector on the span is
    // u = sum c_k b_k and its values on the rays are G c.
    std::vector<IntVector> basis;
    for (const auto& v : cone.rays()) {
        auto trial = basis;
        trial.push_back(v);
        if (span_dimension(trial, cone.ambient_rank()) == trial.size())
            basis = std::move(trial);
        if (basis.size() == d)
            break;
    }
    IntMatrix G(m, d);
    for (int i = 0; i < m; ++i)
        for (std::size_t k = 0; k < d; ++k)
            G(i, k) = dot(cone.rays()[i], basis[k]);

    // Facets: zero sets of the supporting covectors through d-1 independent rays.
    std::set<IndexSet> facets;
    for (IndexSet s : subsets_of_size(cone.all(), static_cast<int>(d) - 1)) {
        RatMatrix sub(s.size(), d);
        int row = 0;
        for (int i : s.elements()) {
            for (std::size_t k = 0; k < d; ++k)
                sub(row, k) = G(i, k);
            ++row;
        }
        auto ns = lattice::nullspace(sub);
        if (ns.size() != 1)
            continue;
        std::vector<Rational> values(m);
        bool pos = false, neg = false;
        IndexSet zero;
        for (int i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < d; ++k)
                values[i] += G(i, k) * ns[0][k];
            if (values[i] > 0)
                pos = true;
            else if (values[i] < 0)
                neg = true;
            else
                zero.insert(i);
        }
        if (pos && neg)
            continue;
        facets.insert(zero);
    }

    std::set<IndexSet> closure{cone.all()};
    std::vector<IndexSet> frontier{cone.all()};
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        for (IndexSet f : frontier)
            for (IndexSet g : facets) {
                IndexSet h = f & g;
                if (closure.insert(h).second)
                    next.push_back(h);
            }
        frontier = std::move(next);
    }
    closure.insert(IndexSet{});

    std::vector<std::pair<std::size_t, IndexSet>> keyed;
    for (IndexSet f : closure) {
        if (!is_face(cone, f))
            throw Error("face enumeration produced a non-face " + f.to_string(1));
        keyed.emplace_back(span_dimension(cone.rays_of(f), cone.ambient_rank()), f);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<IndexSet> out;
    for (const auto& [dim, f] : keyed)
        out.push_back(f);
    return out;
}

std::vector<IndexSet> faces_of_dimension(const Cone& cone, std::size_t dim)
{
    std::vector<IndexSet> out;
    for (IndexSet f : faces(cone))
        if (span_dimension(cone.rays_of(f), cone.ambient_rank()) == dim)
            out.push_back(f);
    return out;
}

bool rays_simplicial(const std::vector<IntVector>& rays)
{
    if (rays.empty())
        return true;
    return span_dimension(rays, rays.front().size()) == rays.size();
}

bool rays_smooth(const std::vector<IntVector>& rays)
{
    if (rays.empty())
        return true;
    if (!rays_simplicial(rays))
        return false;
    auto snf = lattice::smith_normal_form(IntMatrix::from_rows(rays));
    for (const auto& d : snf.invariant_factors())
        if (d != 1)
            return false;
    return true;
}

bool is_simplicial(const Cone& cone)
{
    return rays_simplicial(cone.rays());
}

bool is_smooth(const Cone& cone)
{
    return rays_smooth(cone.rays());
}

Codimension singular_codim(const Cone& cone)
{
    Codimension c;
    for (IndexSet f : faces(cone)) {
        auto r = cone.rays_of(f);
        if (!rays_smooth(r))
            c = c.min(Codimension(static_cast<int>(span_dimension(r, cone.ambient_rank()))));
    }
    return c;
}

Codimension simplicial_codim(const Cone& cone)
{
    Codimension c;
    for (IndexSet f : faces(cone)) {
        auto r = cone.rays_of(f);
        if (!rays_simplicial(r))
            c = c.min(Codimension(static_cast<int>(span_dimension(r, cone.ambient_rank()))));
    }
    return c;
}

} // namespace torrigid::toric
