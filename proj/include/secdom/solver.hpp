#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "secdom/digraph.hpp"
#include "secdom/kinds.hpp"
#include "secdom/verifiers.hpp"

namespace secdom {

struct SolverConfig {
    int size_cap = 26;
    int thread_hint = 1;  // advisory; results never depend on it
};

// Per-cardinality exhaustiveness record: every subset of the searched size is
// either a checked leaf or sits under a pruned subtree, so for each refuted
// cardinality k, leaves_checked + leaves_pruned = C(#free, k - #forced).
struct CardinalityAudit {
    int k = 0;
    std::uint64_t leaves_checked = 0;
    std::uint64_t leaves_pruned = 0;
    bool exhausted = false;
};

struct SolveResult {
    ParamKind kind{};
    int value = 0;
    VertexSet witness;        // lexicographically minimal among minimum sets
    DefenseWitness defense;   // empty for non-secure kinds
    VertexSet forced;
    std::uint64_t nodes_explored = 0;
    std::vector<CardinalityAudit> audit;
};

// Vertices that belong to every set of the kind (degree-zero rules).
VertexSet forced_vertices(const Digraph& d, ParamKind kind);

// Sound lower bound: neighborhood covering bound always; the sharper secure
// bounds only on digraphs without symmetric arcs and with at least one arc.
int lower_bound(const Digraph& d, ParamKind kind);

// Exact minimum by cardinality iteration from max(#forced, lower_bound):
// supersets of the forced set are enumerated in lexicographic order, branches
// whose partial set plus all remaining candidates cannot dominate (in the
// kind's base sense) are pruned, and the secure condition is evaluated only
// on fully dominating candidates. The first valid set found is the
// lexicographically minimal minimum witness.
SolveResult solve_min(const Digraph& d, ParamKind kind, const SolverConfig& cfg = {});

// Independent oracle: plain enumeration of all subsets in cardinality-then-
// lexicographic order, no forced seeding, no pruning, definition-based
// verifiers only. Hard cap n <= 20.
SolveResult brute_oracle(const Digraph& d, ParamKind kind);

// All eight parameters; verifies the inequality chain between them before
// returning and throws std::logic_error on a violation.
std::map<ParamKind, SolveResult> solve_all(const Digraph& d, const SolverConfig& cfg = {});

std::uint64_t binomial(int n, int k);

}  // namespace secdom
