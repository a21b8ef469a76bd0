#include "torrigid/lattice.hpp"
#include "torrigid/localcoh.hpp"

#include <algorithm>

namespace torrigid::localcoh {

namespace {

void require_proper(const SquarefreeMonomialIdeal& b)
{
    if (b.is_zero())
        throw InputError("local cohomology at the zero ideal is not supported");
    if (b.is_unit())
        throw InputError("local cohomology at the unit ideal is not supported");
}

void require_degree(const SquarefreeMonomialIdeal& b, int i, const IntVector& p)
{
    if (i < 0)
        throw InputError("cohomological index must be nonnegative");
    if (p.size() != static_cast<std::size_t>(b.variables()))
        throw InputError("fine degree has length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(b.variables()));
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

} // namespace

IndexSet negative(const IntVector& p)
{
    IndexSet s;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= -1)
            s.insert(static_cast<int>(i));
    return s;
}

SimplicialComplex t_complex(const SquarefreeMonomialIdeal& b, IndexSet i)
{
    const auto& gens = b.generators();
    std::vector<IndexSet> facets;
    for (int v : i.elements()) {
        IndexSet avoiding;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (!gens[j].contains(v))
                avoiding.insert(static_cast<int>(j));
        facets.push_back(avoiding);
    }
    return {b.generator_count(), std::move(facets)};
}

LocalCohomology::LocalCohomology(SquarefreeMonomialIdeal b)
    : ideal_(std::move(b))
{
    require_proper(ideal_);
}

void LocalCohomology::check_degree(int i, const IntVector& p) const
{
    require_degree(ideal_, i, p);
}

std::shared_ptr<const CohomologyBasis> LocalCohomology::basis(int i, IndexSet negative) const
{
    const auto key = std::make_pair(negative.bits(), i);
    {
        std::lock_guard lock(mutex_);
        auto it = bases_.find(key);
        if (it != bases_.end())
            return it->second;
    }
    auto computed = std::make_shared<const CohomologyBasis>(reduced_cohomology(t_complex(ideal_, negative), i - 2));
    std::lock_guard lock(mutex_);
    return bases_.emplace(key, std::move(computed)).first->second;
}

GradedPiece LocalCohomology::piece(int i, const IntVector& p) const
{
    check_degree(i, p);
    GradedPiece g;
    g.p = p;
    g.i = i;
    g.negative = negative(p);
    g.complex = t_complex(ideal_, g.negative);
    g.basis = basis(i, g.negative);
    return g;
}

std::vector<std::size_t> LocalCohomology::dimensions(const IntVector& p) const
{
    check_degree(0, p);
    std::vector<std::size_t> out;
    for (int i = 0; i <= variables(); ++i)
        out.push_back(basis(i, negative(p))->dimension());
    return out;
}

RatMatrix LocalCohomology::restriction(int i, IndexSet from, IndexSet to) const
{
    const auto key = std::make_tuple(from.bits(), to.bits(), i);
    {
        std::lock_guard lock(mutex_);
        auto it = restrictions_.find(key);
        if (it != restrictions_.end())
            return it->second;
    }
    auto src = basis(i, from);
    auto tgt = basis(i, to);
    RatMatrix m(tgt->dimension(), src->dimension());
    if (m.rows() && m.cols()) {
        std::map<std::uint64_t, std::size_t> position;
        for (std::size_t k = 0; k < src->faces.size(); ++k)
            position.emplace(src->faces[k].bits(), k);
        for (std::size_t c = 0; c < src->dimension(); ++c) {
            RatVector restricted(tgt->faces.size());
            for (std::size_t k = 0; k < tgt->faces.size(); ++k) {
                auto it = position.find(tgt->faces[k].bits());
                if (it == position.end())
                    throw Error("target complex is not a subcomplex of the source complex");
                restricted[k] = src->representatives[c][it->second];
            }
            RatVector coords = tgt->coordinates(restricted);
            for (std::size_t r = 0; r < coords.size(); ++r)
                m(r, c) = coords[r];
        }
    }
    std::lock_guard lock(mutex_);
    return restrictions_.emplace(key, std::move(m)).first->second;
}

RatMatrix LocalCohomology::mult(int i, const IntVector& p, int j) const
{
    check_degree(i, p);
    if (j < 0 || j >= variables())
        throw InputError("variable index out of range");
    IntVector q = p;
    q[j] += 1;
    return restriction(i, negative(p), negative(q));
}

RatMatrix LocalCohomology::mult_monomial(int i, const IntVector& p, const IntVector& c) const
{
    check_degree(i, p);
    if (c.size() != p.size())
        throw InputError("monomial exponent has the wrong length");
    const std::size_t d = basis(i, negative(p))->dimension();
    RatMatrix current = RatMatrix::identity(d);
    IntVector q = p;
    for (int k = 0; k < variables(); ++k) {
        if (c[k] < 0)
            throw InputError("monomial exponent must be nonnegative");
        for (Integer t = 0; t < c[k]; ++t) {
            current = mult(i, q, k) * current;
            q[k] += 1;
        }
    }
    return current;
}

GradedPiece local_coh_piece(const SquarefreeMonomialIdeal& b, int i, const IntVector& p)
{
    return LocalCohomology(b).piece(i, p);
}

RatMatrix mult_map(const SquarefreeMonomialIdeal& b, int i, const IntVector& p, int j)
{
    return LocalCohomology(b).mult(i, p, j);
}

std::vector<std::size_t> local_coh_dims(const SquarefreeMonomialIdeal& b, const IntVector& p)
{
    require_proper(b);
    require_degree(b, 0, p);
    const auto reduced = reduced_cohomology_dimensions(t_complex(b, negative(p)));
    std::vector<std::size_t> out(b.variables() + 1, 0);
    for (int i = 1; i <= b.variables(); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i - 1); // reduced degree i - 2
        if (idx < reduced.size())
            out[i] = reduced[idx];
    }
    return out;
}

std::vector<std::size_t> cech_dims(const SquarefreeMonomialIdeal& b, const IntVector& p)
{
    require_proper(b);
    require_degree(b, 0, p);
    const auto& gens = b.generators();
    const int s = b.generator_count();
    if (s > 20)
        throw UnsupportedError("Cech complex with more than 20 generators");

    // Component J is the localisation at lcm(m_J); its degree-p part is
    // one-dimensional iff p_k >= 0 outside the support of the lcm.
    IndexSet nonneg;
    for (int k = 0; k < b.variables(); ++k)
        if (p[k] >= 0)
            nonneg.insert(k);
    const IndexSet all_vars = IndexSet::range(b.variables());
    std::vector<std::vector<IndexSet>> active(s + 1);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
        IndexSet j = IndexSet::from_bits(bits);
        IndexSet support;
        for (int g : j.elements())
            support = support | gens[g];
        if ((all_vars - support).is_subset_of(nonneg))
            active[j.size()].push_back(j);
    }
    for (auto& level : active)
        std::sort(level.begin(), level.end());

    std::vector<std::size_t> ranks(s + 1, 0); // ranks[t]: C^t -> C^{t+1}
    for (int t = 0; t < s; ++t) {
        if (active[t].empty() || active[t + 1].empty())
            continue;
        ranks[t] = lattice::rank_small(to_int64(coboundary(active[t], active[t + 1])), active[t + 1].size(),
                                       active[t].size());
    }
    std::vector<std::size_t> out(b.variables() + 1, 0);
    for (int t = 0; t <= std::min(s, b.variables()); ++t)
        out[t] = active[t].size() - ranks[t] - (t > 0 ? ranks[t - 1] : 0);
    return out;
}

std::size_t cech_piece(const SquarefreeMonomialIdeal& b, int i, const IntVector& p)
{
    require_degree(b, i, p);
    if (i > b.variables())
        return 0;
    return cech_dims(b, p)[i];
}

SquarefreeMonomialIdeal codim2_ideal(const toric::Fan& fan)
{
    const Graph gamma = toric::graph_gamma(fan);
    const int m = fan.ray_count();
    auto ideal = SquarefreeMonomialIdeal::unit(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!gamma.has_edge(a, b))
                ideal = intersect(ideal, prime_ideal(m, IndexSet{a, b}));
    return ideal;
}

std::size_t h2_via_graph(const toric::Fan& fan, const IntVector& p)
{
    if (p.size() != static_cast<std::size_t>(fan.ray_count()))
        throw InputError("fine degree has the wrong length");
    IndexSet i = negative(p);
    if (i.empty())
        return 0;
    return toric::graph_gamma(fan).components(i).size() - 1;
}

} // namespace torrigid::localcoh
