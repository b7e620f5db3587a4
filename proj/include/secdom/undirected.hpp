#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "secdom/digraph.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

// Simple undirected graph; edges normalized to (u < v) and sorted.
class UndirectedGraph {
public:
    static UndirectedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    bool connected() const;

    // (X, Y) by breadth-first 2-coloring, or nullopt when an odd cycle exists
    std::optional<std::pair<VertexSet, VertexSet>> bipartition() const;

    // both arcs per edge
    Digraph symmetric_digraph() const;

private:
    int n_ = 1;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
};

UndirectedGraph underlying_graph(const Digraph& d);

}  // namespace secdom
