#pragma once

#include <utility>
#include <vector>

#include "secdom/vertex_set.hpp"

namespace secdom {

struct DegreeStats {
    int min_out = 0;   // delta+
    int min_in = 0;    // delta-
    int max_out = 0;   // Delta+
    int max_in = 0;    // Delta-
    int min_degree = 0;  // delta0 = min(delta+, delta-)
};

// Immutable loop-free digraph on vertices 0..n-1. Opposite arc pairs are
// allowed; duplicate arcs collapse on construction.
class Digraph {
public:
    // throws std::invalid_argument on loops or out-of-range endpoints
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int order() const { return n_; }
    int arc_count() const { return m_; }

    bool has_arc(int u, int v) const { return out_[static_cast<std::size_t>(u)].contains(v); }

    const VertexSet& out(int u) const { return out_[static_cast<std::size_t>(u)]; }
    const VertexSet& in(int u) const { return in_[static_cast<std::size_t>(u)]; }

    int out_degree(int u) const { return out(u).count(); }
    int in_degree(int u) const { return in(u).count(); }

    Digraph reversed() const;

    // Arc (u,v) present iff (u,v) or (v,u) is an arc here; stands in for the
    // underlying undirected graph.
    Digraph symmetric_closure() const;

    bool has_symmetric_arcs() const;
    bool is_symmetric() const;
    bool is_tournament() const;
    bool weakly_connected() const;

    DegreeStats degree_stats() const;

    // sorted (u,v)
    std::vector<std::pair<int, int>> arcs() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }
    friend bool operator!=(const Digraph& a, const Digraph& b) { return !(a == b); }

private:
    Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), VertexSet(n)),
                     in_(static_cast<std::size_t>(n), VertexSet(n)) {}

    int n_ = 1;
    int m_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

}  // namespace secdom
