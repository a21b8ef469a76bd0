#include "torrigid/lattice.hpp"
#include "torrigid/rigidity.hpp"

#include <set>

namespace torrigid::rigidity {

HalfspaceConnectivity polytope_halfspace_connectivity(const std::vector<IntVector>& points, std::size_t v,
                                                      const Halfspace& h)
{
    if (points.empty())
        throw InputError("polytope has no points");
    const std::size_t d = points.front().size();
    if (d == 0)
        throw InputError("points must have positive dimension");
    if (d > 3)
        throw UnsupportedError("polytopes of dimension above 3 are not supported");
    if (v >= points.size())
        throw InputError("vertex index out of range");
    if (h.normal.size() != d)
        throw InputError("hyperplane normal has the wrong length");
    bool nonzero = false;
    for (const auto& c : h.normal)
        nonzero = nonzero || c != 0;
    if (!nonzero)
        throw InputError("hyperplane normal is zero");

    std::set<IntVector> seen;
    std::vector<IntVector> lifted;
    for (const auto& p : points) {
        if (p.size() != d)
            throw InputError("points have different lengths");
        if (!seen.insert(p).second)
            throw InputError("repeated point " + torrigid::to_string(p));
        IntVector l = p;
        l.push_back(1);
        lifted.push_back(std::move(l));
    }
    if (dot(h.normal, points[v]) != h.offset)
        throw InputError("the chosen vertex does not lie on the hyperplane");

    // Vertices of conv(points) are the extremal rays of the cone over the lifted points.
    std::vector<std::size_t> vertex_ids;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        std::vector<IntVector> others;
        for (std::size_t j = 0; j < lifted.size(); ++j)
            if (j != i)
                others.push_back(lifted[j]);
        if (others.empty() || !lattice::in_cone(others, lifted[i]))
            vertex_ids.push_back(i);
    }
    std::size_t v_local = vertex_ids.size();
    for (std::size_t k = 0; k < vertex_ids.size(); ++k)
        if (vertex_ids[k] == v)
            v_local = k;
    if (v_local == vertex_ids.size())
        throw InputError("the chosen point is not a vertex of the polytope");

    std::vector<IntVector> rays;
    for (std::size_t id : vertex_ids)
        rays.push_back(lifted[id]);
    toric::Cone cone(d + 1, rays);
    Graph edges = toric::graph_gamma_f(cone);

    IndexSet selected;
    for (std::size_t k = 0; k < vertex_ids.size(); ++k)
        if (k != v_local && dot(h.normal, points[vertex_ids[k]]) >= h.offset)
            selected.insert(static_cast<int>(k));

    HalfspaceConnectivity out;
    for (IndexSet comp : edges.components(selected)) {
        std::vector<std::size_t> ids;
        for (int k : comp.elements())
            ids.push_back(vertex_ids[k]);
        out.components.push_back(std::move(ids));
    }
    out.connected = out.components.size() <= 1;
    return out;
}

} // namespace torrigid::rigidity
