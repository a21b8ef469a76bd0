#include "torrigid/lattice.hpp"
#include "torrigid/toric.hpp"

#include <algorithm>
#include <set>

namespace torrigid::toric {

Fan::Fan(std::size_t ambient_rank, std::vector<IntVector> rays, std::vector<IndexSet> max_cones, std::string name)
    : ambient_rank_(ambient_rank), name_(std::move(name))
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
    rays_ = std::move(rays);

    if (max_cones.empty())
        throw InputError("fan has no cones");
    const IndexSet all = IndexSet::range(ray_count());
    for (IndexSet c : max_cones)
        if (!c.is_subset_of(all))
            throw InputError("cone " + c.to_string() + " refers to a missing ray");
    auto maximal = maximal_sets(max_cones);
    if (maximal.size() != max_cones.size())
        warnings.push_back("dropped repeated or non-maximal cones from the cone list");
    max_cones_ = std::move(maximal);

    IndexSet covered;
    std::set<std::pair<std::size_t, IndexSet>> keyed;
    for (IndexSet c : max_cones_) {
        covered = covered | c;
        Cone sigma(ambient_rank_, rays_of_indices(c));
        for (int j : (all - c).elements())
            if (lattice::in_cone(sigma.rays(), rays_[j]))
                throw InputError("ray " + to_string(rays_[j]) + " lies in cone " + c.to_string() +
                                 " without being one of its rays");
        auto local = c.elements();
        for (IndexSet f : faces(sigma)) {
            IndexSet global;
            for (int i : f.elements())
                global.insert(local[i]);
            keyed.emplace(span_dimension(rays_of_indices(global), ambient_rank_), global);
        }
    }
    if (covered != all)
        throw InputError("ray " + to_string(rays_[(all - covered).first()]) + " lies in no cone of the fan");
    for (const auto& [dim, c] : keyed)
        cones_.push_back(c);
}

std::vector<IntVector> Fan::rays_of_indices(IndexSet subset) const
{
    std::vector<IntVector> out;
    for (int i : subset.elements())
        out.push_back(rays_.at(i));
    return out;
}

Fan Fan::of_cone(const Cone& cone)
{
    Fan f(cone.ambient_rank(), cone.rays(), {cone.all()});
    f.warnings = cone.warnings();
    return f;
}

Fan Fan::proper_faces(const Cone& cone)
{
    std::vector<IndexSet> fs;
    for (IndexSet f : faces(cone))
        if (f != cone.all())
            fs.push_back(f);
    return Fan(cone.ambient_rank(), cone.rays(), maximal_sets(fs));
}

Fan Fan::smooth_faces(const Cone& cone)
{
    std::vector<IndexSet> fs;
    for (IndexSet f : faces(cone))
        if (rays_smooth(cone.rays_of(f)))
            fs.push_back(f);
    return Fan(cone.ambient_rank(), cone.rays(), maximal_sets(fs));
}

Cone Fan::cone(IndexSet subset) const
{
    return Cone(ambient_rank_, rays_of_indices(subset), Cone::Unchecked{});
}

std::size_t Fan::cone_dimension(IndexSet c) const
{
    return span_dimension(rays_of_indices(c), ambient_rank_);
}

IntMatrix Fan::ray_matrix() const
{
    return IntMatrix::from_rows(rays_, ambient_rank_);
}

Fan validate_fan(const RawFan& raw)
{
    if (raw.rays.empty())
        throw InputError("fan has no rays");
    const std::size_t n = raw.rays.front().size();
    std::vector<IntVector> rays;
    for (const auto& r : raw.rays)
        rays.push_back(to_integer_vector(r));
    std::vector<IndexSet> cones;
    for (const auto& c : raw.max_cones) {
        IndexSet s;
        for (int i : c) {
            if (i < 0 || i >= static_cast<int>(raw.rays.size()))
                throw InputError("cone refers to ray index " + std::to_string(i) + ", which does not exist");
            if (s.contains(i))
                throw InputError("cone lists ray index " + std::to_string(i) + " twice");
            s.insert(i);
        }
        cones.push_back(s);
    }
    return Fan(n, std::move(rays), std::move(cones), raw.name);
}

Codimension singular_codim(const Fan& fan)
{
    Codimension c;
    for (IndexSet s : fan.cones()) {
        auto r = fan.cone(s).rays();
        if (!rays_smooth(r))
            c = c.min(Codimension(static_cast<int>(fan.cone_dimension(s))));
    }
    return c;
}

Codimension simplicial_codim(const Fan& fan)
{
    Codimension c;
    for (IndexSet s : fan.cones())
        if (!rays_simplicial(fan.cone(s).rays()))
            c = c.min(Codimension(static_cast<int>(fan.cone_dimension(s))));
    return c;
}

// --- class group -------------------------------------------------------------

bool CoxData::is_degree_zero(const IntVector& p) const
{
    if (p.size() != m)
        throw InputError("degree vector has the wrong length");
    return lattice::in_row_lattice(ray_matrix.transpose(), p);
}

bool CoxData::same_class(const IntVector& a, const IntVector& b) const
{
    if (a.size() != m || b.size() != m)
        throw InputError("degree vector has the wrong length");
    IntVector d(m);
    for (std::size_t i = 0; i < m; ++i)
        d[i] = a[i] - b[i];
    return is_degree_zero(d);
}

CoxData class_group(const Fan& fan)
{
    CoxData cox;
    cox.m = fan.ray_count();
    cox.n = fan.ambient_rank();
    cox.ray_matrix = fan.ray_matrix();
    if (lattice::rank(cox.ray_matrix) != cox.n)
        throw UnsupportedError("rays do not span the lattice rationally (torus factor)");
    cox.r = cox.m - cox.n;
    auto snf = lattice::smith_normal_form(cox.ray_matrix);
    IntMatrix a(cox.r, cox.m);
    for (std::size_t i = 0; i < cox.r; ++i)
        for (std::size_t j = 0; j < cox.m; ++j)
            a(i, j) = snf.U(cox.n + i, j);
    cox.grading = cox.r ? lattice::row_hermite_form(a) : IntMatrix(0, cox.m);
    for (const auto& d : snf.invariant_factors())
        if (d > 1)
            cox.torsion.push_back(d);
    return cox;
}

CoxData class_group(const Cone& cone)
{
    return class_group(Fan::of_cone(cone));
}

SquarefreeMonomialIdeal irrelevant_ideal(const Fan& fan)
{
    const IndexSet all = IndexSet::range(fan.ray_count());
    std::vector<IndexSet> gens;
    for (IndexSet c : fan.cones())
        gens.push_back(all - c);
    return {fan.ray_count(), std::move(gens)};
}

// --- Gorenstein, completeness, Fano ------------------------------------------

namespace {

std::optional<RatVector> covector_with_value_one(const std::vector<IntVector>& rays, std::size_t n)
{
    RatMatrix a = to_rational(IntMatrix::from_rows(rays, n));
    if (lattice::rank(a) != n)
        return std::nullopt;
    return lattice::solve(a, RatVector(rays.size(), Rational(1)));
}

} // namespace

std::optional<QGorensteinCertificate> q_gorenstein(const Cone& cone)
{
    if (!cone.is_full_dimensional())
        throw UnsupportedError("Q-Gorenstein test needs a full-dimensional cone");
    auto u = covector_with_value_one(cone.rays(), cone.ambient_rank());
    if (!u)
        return std::nullopt;
    QGorensteinCertificate cert;
    cert.u0 = clear_denominators(*u);
    cert.g = dot(cert.u0, cone.rays().front());
    return cert;
}

bool gorenstein(const Cone& cone)
{
    auto c = q_gorenstein(cone);
    return c && c->g == 1;
}

bool is_complete(const Fan& fan)
{
    const std::size_t n = fan.ambient_rank();
    for (IndexSet c : fan.max_cones())
        if (fan.cone_dimension(c) != n)
            return false;
    for (IndexSet c : fan.max_cones()) {
        for (IndexSet f : fan.cones()) {
            if (!f.is_subset_of(c) || fan.cone_dimension(f) + 1 != n)
                continue;
            int count = 0;
            for (IndexSet d : fan.max_cones())
                if (f.is_subset_of(d))
                    ++count;
            if (count != 2)
                return false;
        }
    }
    if (n > 16)
        return true;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
        IntVector probe(n);
        for (std::size_t k = 0; k < n; ++k)
            probe[k] = ((signs >> k) & 1u) ? -static_cast<long>(k + 1) : static_cast<long>(k + 1);
        bool hit = false;
        for (IndexSet c : fan.max_cones())
            if (lattice::in_cone(fan.cone(c).rays(), probe)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

bool is_fano(const Fan& fan)
{
    if (!is_complete(fan))
        return false;
    const std::size_t n = fan.ambient_rank();
    for (IndexSet c : fan.max_cones()) {
        auto rays = fan.cone(c).rays();
        auto u = covector_with_value_one(rays, n);
        if (!u)
            return false;
        for (int j = 0; j < fan.ray_count(); ++j)
            if (!c.contains(j) && dot(*u, fan.rays()[j]) >= 1)
                return false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            std::vector<IntVector> others;
            for (std::size_t j = 0; j < rays.size(); ++j)
                if (j != i)
                    others.push_back(rays[j]);
            if (!others.empty() && lattice::in_cone(others, rays[i]))
                return false;
        }
    }
    return true;
}

Graph graph_gamma(const Fan& fan)
{
    Graph g(fan.ray_count());
    for (IndexSet c : fan.max_cones()) {
        auto e = c.elements();
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                g.add_edge(e[a], e[b]);
    }
    return g;
}

Graph graph_gamma_f(const Cone& cone)
{
    Graph g(cone.ray_count());
    for (IndexSet f : faces(cone))
        if (f.size() == 2 && span_dimension(cone.rays_of(f), cone.ambient_rank()) == 2)
            g.add_edge(f.first(), (f - IndexSet{f.first()}).first());
    return g;
}

} // namespace torrigid::toric
