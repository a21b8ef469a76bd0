#include "torrigid/lattice.hpp"
#include "torrigid/simplicial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace torrigid {

namespace {

constexpr int enumeration_limit = 24;

void require_enumerable(int vertices, const char* what)
{
    if (vertices > enumeration_limit)
        throw UnsupportedError(std::string(what) + ": more than " + std::to_string(enumeration_limit) +
                               " vertices");
}

std::vector<std::int64_t> to_int64(const IntMatrix& m)
{
    std::vector<std::int64_t> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.push_back(m(i, j).get_si());
    return out;
}

std::size_t coboundary_rank(const SimplicialComplex& k, int size)
{
    auto src = k.faces_of_size(size);
    auto tgt = k.faces_of_size(size + 1);
    if (src.empty() || tgt.empty())
        return 0;
    return lattice::rank_small(to_int64(coboundary(src, tgt)), tgt.size(), src.size());
}

template <class IsFace>
SimplicialComplex facets_by_enumeration(int n, IsFace is_face)
{
    std::vector<IndexSet> facets;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        IndexSet f = IndexSet::from_bits(bits);
        if (!is_face(f))
            continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!f.contains(v)) {
                IndexSet g = f;
                g.insert(v);
                maximal = !is_face(g);
            }
        if (maximal)
            facets.push_back(f);
    }
    return {n, std::move(facets)};
}

} // namespace

SimplicialComplex::SimplicialComplex(int vertices, std::vector<IndexSet> facets)
    : vertices_(vertices)
{
    if (vertices < 0 || vertices > IndexSet::capacity)
        throw InputError("simplicial complex: unsupported vertex count");
    IndexSet all = IndexSet::range(vertices);
    for (IndexSet f : facets)
        if (!f.is_subset_of(all))
            throw InputError("simplicial complex: facet " + f.to_string(1) + " uses an unknown vertex");
    facets_ = maximal_sets(std::move(facets));
}

int SimplicialComplex::dimension() const
{
    int d = -2;
    for (IndexSet f : facets_)
        d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::contains(IndexSet face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](IndexSet f) { return face.is_subset_of(f); });
}

std::vector<IndexSet> SimplicialComplex::faces_of_size(int k) const
{
    std::set<IndexSet> out;
    for (IndexSet f : facets_)
        if (f.size() >= k)
            for (IndexSet s : subsets_of_size(f, k))
                out.insert(s);
    return {out.begin(), out.end()};
}

std::vector<IndexSet> SimplicialComplex::all_faces() const
{
    std::vector<IndexSet> out;
    for (int k = 0; k <= dimension() + 1; ++k)
        for (IndexSet f : faces_of_size(k))
            out.push_back(f);
    return out;
}

std::string SimplicialComplex::to_string(int offset) const
{
    if (is_void())
        return "void";
    std::string s = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i)
        s += (i ? "," : "") + facets_[i].to_string(offset);
    return s + ">";
}

IntMatrix coboundary(const std::vector<IndexSet>& source, const std::vector<IndexSet>& target)
{
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t c = 0; c < source.size(); ++c)
        index.emplace(source[c].bits(), c);
    IntMatrix d(target.size(), source.size());
    for (std::size_t r = 0; r < target.size(); ++r) {
        int t = 0;
        for (int v : target[r].elements()) {
            IndexSet g = target[r];
            g.erase(v);
            auto it = index.find(g.bits());
            if (it != index.end())
                d(r, it->second) = (t % 2 == 0) ? 1 : -1;
            ++t;
        }
    }
    return d;
}

std::size_t reduced_cohomology_dimension(const SimplicialComplex& k, int degree)
{
    if (degree < -1 || k.is_void())
        return 0;
    const std::size_t n = k.faces_of_size(degree + 1).size();
    return n - coboundary_rank(k, degree + 1) - coboundary_rank(k, degree);
}

std::vector<std::size_t> reduced_cohomology_dimensions(const SimplicialComplex& k)
{
    std::vector<std::size_t> out;
    if (k.is_void())
        return out;
    const int top = k.dimension();
    std::vector<std::size_t> ranks(top + 3, 0); // ranks[s] = rank of delta from size s to size s+1
    std::vector<std::size_t> counts(top + 3, 0);
    for (int s = 0; s <= top + 1; ++s) {
        counts[s] = k.faces_of_size(s).size();
        ranks[s] = coboundary_rank(k, s);
    }
    for (int deg = -1; deg <= top; ++deg) {
        const int s = deg + 1;
        out.push_back(counts[s] - ranks[s] - (s > 0 ? ranks[s - 1] : 0));
    }
    return out;
}

RatVector CohomologyBasis::coordinates(const RatVector& cocycle) const
{
    const std::size_t d = dimension();
    if (d == 0)
        return {};
    RatMatrix m(faces.size(), d + coboundaries.cols());
    for (std::size_t r = 0; r < faces.size(); ++r) {
        for (std::size_t c = 0; c < d; ++c)
            m(r, c) = representatives[c][r];
        for (std::size_t c = 0; c < coboundaries.cols(); ++c)
            m(r, d + c) = coboundaries(r, c);
    }
    auto x = lattice::solve(m, cocycle);
    if (!x)
        throw Error("cochain is not a cocycle of the expected complex");
    return RatVector(x->begin(), x->begin() + static_cast<long>(d));
}

CohomologyBasis reduced_cohomology(const SimplicialComplex& k, int degree)
{
    CohomologyBasis basis;
    basis.degree = degree;
    if (degree < -1 || k.is_void())
        return basis;
    basis.faces = k.faces_of_size(degree + 1);
    const std::size_t n = basis.faces.size();
    if (n == 0)
        return basis;
    auto below = degree >= 0 ? k.faces_of_size(degree) : std::vector<IndexSet>{};
    auto above = k.faces_of_size(degree + 2);
    basis.coboundaries = below.empty() ? RatMatrix(n, 0) : to_rational(coboundary(below, basis.faces));
    RatMatrix delta = above.empty() ? RatMatrix(0, n) : to_rational(coboundary(basis.faces, above));
    auto cocycles = lattice::nullspace(delta);

    const std::size_t b = basis.coboundaries.cols();
    RatMatrix joint(n, b + cocycles.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < b; ++c)
            joint(r, c) = basis.coboundaries(r, c);
        for (std::size_t c = 0; c < cocycles.size(); ++c)
            joint(r, b + c) = cocycles[c][r];
    }
    for (std::size_t pivot : lattice::row_reduce(joint).pivots)
        if (pivot >= b)
            basis.representatives.push_back(cocycles[pivot - b]);
    return basis;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k)
{
    const int n = k.vertex_count();
    require_enumerable(n, "Alexander dual");
    const IndexSet all = IndexSet::range(n);
    return facets_by_enumeration(n, [&](IndexSet f) { return !k.contains(all - f); });
}

SimplicialComplex clique_complex(const Graph& g)
{
    // Bron-Kerbosch without pivoting; the graphs here are small.
    std::vector<IndexSet> cliques;
    auto extend = [&](auto& self, IndexSet r, IndexSet p, IndexSet x) -> void {
        if (p.empty() && x.empty()) {
            cliques.push_back(r);
            return;
        }
        while (!p.empty()) {
            int v = p.first();
            IndexSet rv = r;
            rv.insert(v);
            self(self, rv, p & g.neighbours(v), x & g.neighbours(v));
            p.erase(v);
            x.insert(v);
        }
    };
    extend(extend, IndexSet{}, IndexSet::range(g.vertex_count()), IndexSet{});
    return {g.vertex_count(), std::move(cliques)};
}

SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal)
{
    const int n = ideal.variables();
    require_enumerable(n, "Stanley-Reisner complex");
    return facets_by_enumeration(n, [&](IndexSet f) { return !ideal.contains(f); });
}

} // namespace torrigid
