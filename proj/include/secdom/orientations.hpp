#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "secdom/digraph.hpp"
#include "secdom/solver.hpp"
#include "secdom/undirected.hpp"

namespace secdom {

// Orientations are indexed by edge bits in the canonical sorted edge order:
// bit i clear orients edge i low -> high, set orients it high -> low.
Digraph orientation_at(const UndirectedGraph& g, std::uint64_t index);

// all 2^|E| orientations in index order; |E| capped at 22
void for_each_orientation(const UndirectedGraph& g,
                          const std::function<void(const Digraph&, std::uint64_t)>& fn);
std::vector<Digraph> enumerate_orientations(const UndirectedGraph& g);

struct OrientationSpectrum {
    ParamKind kind{};
    int dom = 0;                 // minimum over orientations
    int DOM = 0;                 // maximum over orientations
    std::vector<int> achieved;   // sorted distinct values
    bool is_interval = false;
    std::uint64_t orientations_evaluated = 0;
};

OrientationSpectrum spectrum(const UndirectedGraph& g, ParamKind kind,
                             const SolverConfig& cfg = {});

// every edge directed from Y into X, so every vertex ends up a source or a
// sink and the three secure out-domination parameters all reach n
Digraph bipartite_full_orientation(const UndirectedGraph& g, const VertexSet& x,
                                   const VertexSet& y);

// Orients G so that its secure domination number transfers: edges leaving a
// minimum secure dominating set S point away from S, the rest go low -> high.
// Returns (D, S); S is an OSDS of D and gamma_os(D) = gamma_s(G).
std::pair<Digraph, VertexSet> orientation_from_sds(const UndirectedGraph& g,
                                                   const SolverConfig& cfg = {});

// All edges at the independent set I point into I (every member of I needs
// degree >= 2); V \ I is then an OSDS of the result.
Digraph orientation_from_independent_set(const UndirectedGraph& g, const VertexSet& i);

}  // namespace secdom
