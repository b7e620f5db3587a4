#include "secdom/undirected.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace secdom {

UndirectedGraph UndirectedGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("UndirectedGraph: order must be at least 1");
    UndirectedGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("UndirectedGraph: edge (" + std::to_string(u + 1) + "," +
                                        std::to_string(v + 1) + ") out of range");
        if (u == v)
            throw std::invalid_argument("UndirectedGraph: loop at vertex " + std::to_string(u + 1));
        if (u > v) std::swap(u, v);
        if (g.adj_[static_cast<std::size_t>(u)].contains(v)) continue;
        g.adj_[static_cast<std::size_t>(u)].add(v);
        g.adj_[static_cast<std::size_t>(v)].add(u);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

bool UndirectedGraph::connected() const {
    VertexSet seen(n_);
    seen.add(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet fresh = neighbors(u) - seen;
        fresh.for_each([&](int v) {
            seen.add(v);
            stack.push_back(v);
        });
    }
    return seen.is_full();
}

std::optional<std::pair<VertexSet, VertexSet>> UndirectedGraph::bipartition() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    VertexSet x(n_), y(n_);
    for (int s = 0; s < n_; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        x.add(s);
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            bool odd_cycle = false;
            neighbors(u).for_each([&](int v) {
                int& cv = color[static_cast<std::size_t>(v)];
                int cu = color[static_cast<std::size_t>(u)];
                if (cv == -1) {
                    cv = 1 - cu;
                    (cv == 0 ? x : y).add(v);
                    q.push(v);
                } else if (cv == cu) {
                    odd_cycle = true;
                }
            });
            if (odd_cycle) return std::nullopt;
        }
    }
    return std::make_pair(x, y);
}

Digraph UndirectedGraph::symmetric_digraph() const {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(edges_.size() * 2);
    for (auto [u, v] : edges_) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph::from_arcs(n_, arcs);
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
    return UndirectedGraph::from_edges(d.order(), edges);
}

}  // namespace secdom
