#pragma once

#include <vector>

#include "secdom/digraph.hpp"
#include "secdom/kinds.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

// One defender per vertex outside the set, or a failure marker. Defender
// choice is the smallest-index valid one, so witnesses are reproducible.
struct DefenseWitness {
    static constexpr int kInSet = -1;
    static constexpr int kUndefended = -2;

    std::vector<int> defender;  // empty for non-secure kinds

    bool complete() const {
        for (int d : defender)
            if (d == kUndefended) return false;
        return true;
    }
};

// out-private neighbors of u: vertices whose closed in-neighborhood meets S
// exactly in {u}; u itself qualifies when no in-neighbor of u lies in S
VertexSet pn_plus(const Digraph& d, const VertexSet& s, int u);
VertexSet pn_minus(const Digraph& d, const VertexSet& s, int u);

// Exact definitional membership test for every kind; secure kinds delegate to
// is_secure_set.
bool is_set(const Digraph& d, const VertexSet& s, SetKind kind);

// Does u in S protect v outside S? True when u is adjacent on the side the
// kind requires and (S \ {u}) + {v} still satisfies the kind's base
// domination condition. This is the ground truth every shortcut predicate is
// measured against.
bool defends(const Digraph& d, const VertexSet& s, int u, int v, SetKind kind);

struct SecureCheck {
    enum class Failure { None, NotDominated, Undefended };
    bool valid = false;
    DefenseWitness defense;
    int failed_vertex = -1;
    Failure failure = Failure::None;
};

SecureCheck is_secure_set(const Digraph& d, const VertexSet& s, SetKind kind);

// Swap-free defense predicates built from private neighborhoods. Each names
// the secure kind it targets and the side of v its defender sits on. They are
// accelerators: sound given the base domination condition, and complete only
// in restricted settings (see the test suite), never trusted on their own.
enum class CharForm {
    OsodsIn,   // in-defender, swap out-dominates: backup in-neighbor + pn+ inside N+[v]
    OsdsIn,    // in-defender, swap dominates underlying: pn+ u pn- inside N+[v] u N-[v]
    SodsOut,   // out-defender for SODS: pn+ inside N+[v]
    SodsIn,    // in-defender for SODS: backup in-neighbor + pn+ inside N+[v]
    IsodsOut,  // out-defender for ISODS: pn+ inside N+[v]
};

bool char_defense(const Digraph& d, const VertexSet& s, int u, int v, CharForm form);

// Whole-set characterization assembled from char_defense, for kinds
// Sods/Osds/Osods/Isods.
bool corollary_check(const Digraph& d, const VertexSet& s, SetKind kind);

}  // namespace secdom
