#include "secdom/orientations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace secdom {

namespace {

constexpr int kEdgeCap = 22;

void require_edge_cap(const UndirectedGraph& g, const char* who) {
    if (g.edge_count() > kEdgeCap)
        throw std::invalid_argument(std::string(who) + ": more than 22 edges");
}

}  // namespace

Digraph orientation_at(const UndirectedGraph& g, std::uint64_t index) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        if (index >> i & 1)
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(u, v);
    }
    return Digraph::from_arcs(g.order(), arcs);
}

void for_each_orientation(const UndirectedGraph& g,
                          const std::function<void(const Digraph&, std::uint64_t)>& fn) {
    require_edge_cap(g, "for_each_orientation");
    std::uint64_t total = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t idx = 0; idx < total; ++idx) fn(orientation_at(g, idx), idx);
}

std::vector<Digraph> enumerate_orientations(const UndirectedGraph& g) {
    std::vector<Digraph> out;
    out.reserve(std::size_t{1} << g.edge_count());
    for_each_orientation(g, [&](const Digraph& d, std::uint64_t) { out.push_back(d); });
    return out;
}

OrientationSpectrum spectrum(const UndirectedGraph& g, ParamKind kind, const SolverConfig& cfg) {
    require_edge_cap(g, "spectrum");
    OrientationSpectrum sp;
    sp.kind = kind;
    std::set<int> achieved;
    for_each_orientation(g, [&](const Digraph& d, std::uint64_t) {
        achieved.insert(solve_min(d, kind, cfg).value);
        ++sp.orientations_evaluated;
    });
    sp.achieved.assign(achieved.begin(), achieved.end());
    sp.dom = sp.achieved.front();
    sp.DOM = sp.achieved.back();
    sp.is_interval = static_cast<int>(sp.achieved.size()) == sp.DOM - sp.dom + 1;
    return sp;
}

Digraph bipartite_full_orientation(const UndirectedGraph& g, const VertexSet& x,
                                   const VertexSet& y) {
    if (x.universe() != g.order() || y.universe() != g.order() || x.intersects(y) ||
        (x | y).count() != g.order())
        throw std::invalid_argument("bipartite_full_orientation: (X,Y) is not a partition");
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        bool u_in_x = x.contains(u), v_in_x = x.contains(v);
        if (u_in_x == v_in_x)
            throw std::invalid_argument("bipartite_full_orientation: edge inside one part");
        if (u_in_x)
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(u, v);
    }
    return Digraph::from_arcs(g.order(), arcs);
}

std::pair<Digraph, VertexSet> orientation_from_sds(const UndirectedGraph& g,
                                                   const SolverConfig& cfg) {
    VertexSet s = solve_min(g.symmetric_digraph(), ParamKind::GammaS, cfg).witness;
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        bool us = s.contains(u), vs = s.contains(v);
        if (us && !vs)
            arcs.emplace_back(u, v);
        else if (vs && !us)
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(u, v);  // inside S or outside S: low -> high
    }
    return {Digraph::from_arcs(g.order(), arcs), s};
}

Digraph orientation_from_independent_set(const UndirectedGraph& g, const VertexSet& i) {
    if (i.universe() != g.order())
        throw std::invalid_argument("orientation_from_independent_set: wrong universe");
    for (int v = i.first(); v != -1; v = i.next(v)) {
        if (g.neighbors(v).intersects(i))
            throw std::invalid_argument("orientation_from_independent_set: I is not independent");
        if (g.degree(v) < 2)
            throw std::invalid_argument(
                "orientation_from_independent_set: every member of I needs degree >= 2");
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        if (i.contains(v))
            arcs.emplace_back(u, v);
        else if (i.contains(u))
            arcs.emplace_back(v, u);
        else
            arcs.emplace_back(u, v);
    }
    return Digraph::from_arcs(g.order(), arcs);
}

}  // namespace secdom
