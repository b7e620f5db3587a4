#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secdom/digraph.hpp"
#include "secdom/kinds.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

struct WitnessRecipe {
    ParamKind kind{};
    std::string family;  // "path" or "cycle"
    int n = 0;
    VertexSet set;
    int claimed_size = 0;
};

// Closed-form value on directed paths and cycles:
//   ceil(n/2)  for gamma+ and gamma_os,
//   ceil(2n/3) for gamma_oso and gamma_iso,
//   ceil(3n/5) for gamma_so.
int closed_form(ParamKind kind, int n);

// Pattern witnesses achieving the closed forms. The path patterns, with
// 1-indexed positions i:
//   gamma+ / gamma_os : odd i
//   gamma_oso         : i = 1,2 (mod 3)
//   gamma_so          : i = 1,3,4 (mod 5), plus v_n when n = 2 (mod 5)
//   gamma_iso         : i = 0,1 (mod 3), plus v_n when n = 2 (mod 3)
WitnessRecipe path_witness(ParamKind kind, int n);

// Path pattern reused on the cycle; falls back to the solver should the
// wrap-around ever invalidate it.
WitnessRecipe cycle_witness(ParamKind kind, int n);

// Repeatedly takes a vertex of maximum out-degree in the remaining
// subtournament and deletes its closed out-neighborhood. Out-dominating with
// at most ceil(log2 n) picks.
VertexSet tournament_greedy_outdom(const Digraph& t);

// greedy set plus the smallest vertex outside it; an SODS of size at most
// ceil(log2 n) + 1
VertexSet tournament_sods(const Digraph& t);

// {source} plus a greedy out-dominating set of the rest; an OSODS of size at
// most ceil(log2(n-1)) + 1. Requires a vertex of in-degree 0 and n >= 3.
VertexSet tournament_osods_with_source(const Digraph& t);

// directed hamiltonian path by left-to-right insertion
std::vector<int> tournament_hamiltonian_path(const Digraph& t);

// positions 1,2 (mod 3) along the hamiltonian path; an OSODS of size at most
// ceil(2n/3)
VertexSet tournament_osods_via_hampath(const Digraph& t);

// {w, u_1..u_k} on spider(k): a minimum ISODS of size k+1
VertexSet spider_isods_witness(int k);

// (u, v) with u out-dominating everything but possibly v and v in-dominated
// by everything but possibly u; on symmetric-arc-free digraphs such a pair
// pins gamma_iso to 2
std::optional<std::pair<int, int>> dominant_pair(const Digraph& d);

int ceil_log2(int n);

}  // namespace secdom
