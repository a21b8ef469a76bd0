#pragma once

#include "torrigid/index_set.hpp"

#include <string>
#include <utility>
#include <vector>

namespace torrigid {

/// Simple undirected graph on vertices {0, ..., n-1} (n <= 64).
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertices);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const { return adjacency_[a].contains(b); }
    IndexSet neighbours(int v) const { return adjacency_[v]; }
    std::vector<std::pair<int, int>> edges() const;

    /// Connected components of the subgraph induced on `vertices`, each as a
    /// vertex set, ordered by smallest vertex.
    std::vector<IndexSet> components(IndexSet vertices) const;
    std::vector<IndexSet> components() const { return components(IndexSet::range(vertex_count())); }

    /// Connected, counting the empty graph as connected.
    bool induced_connected(IndexSet vertices) const { return components(vertices).size() <= 1; }

    bool is_subgraph_of(const Graph& other) const;

private:
    std::vector<IndexSet> adjacency_;
};

} // namespace torrigid
