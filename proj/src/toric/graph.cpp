#include "torrigid/graph.hpp"
#include "torrigid/numeric.hpp"

namespace torrigid {

Graph::Graph(int vertices)
{
    if (vertices < 0 || vertices > IndexSet::capacity)
        throw InputError("graph: unsupported vertex count " + std::to_string(vertices));
    adjacency_.resize(vertices);
}

void Graph::add_edge(int a, int b)
{
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
        throw InputError("graph: vertex out of range");
    if (a == b)
        return;
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b : adjacency_[a].elements())
            if (a < b)
                out.emplace_back(a, b);
    return out;
}

std::vector<IndexSet> Graph::components(IndexSet vertices) const
{
    std::vector<IndexSet> out;
    IndexSet left = vertices;
    while (!left.empty()) {
        IndexSet comp;
        IndexSet frontier;
        frontier.insert(left.first());
        while (!frontier.empty()) {
            int v = frontier.first();
            frontier.erase(v);
            comp.insert(v);
            frontier = frontier | ((adjacency_[v] & vertices) - comp);
        }
        out.push_back(comp);
        left = left - comp;
    }
    return out;
}

bool Graph::is_subgraph_of(const Graph& other) const
{
    if (vertex_count() != other.vertex_count())
        return false;
    for (int v = 0; v < vertex_count(); ++v)
        if (!adjacency_[v].is_subset_of(other.adjacency_[v]))
            return false;
    return true;
}

} // namespace torrigid
