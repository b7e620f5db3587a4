#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "secdom/digraph.hpp"

namespace secdom {

Digraph dipath(int n);                    // arcs v1->v2->...->vn
Digraph dicycle(int n);                   // n >= 3
Digraph transitive_tournament(int n);     // arc (u,v) iff u < v

// n = 2k+1: legs u_i -> v_i -> w with u_i = i-1, v_i = k+i-1, w = 2k.
// Tight family for the (n+1)/(maxout+1) lower bound.
Digraph spider(int k);

Digraph random_tournament(int n, std::uint64_t seed);
Digraph random_digraph(int n, double arc_prob, bool allow_symmetric, std::uint64_t seed);

// Seven-vertex digraph on which the five out-domination parameters take the
// five distinct values (2, 2, 3, 4, 5); the standing regression fixture.
Digraph separating_fixture();

enum class Family { Dipath, Dicycle, TransitiveTournament, Spider, RandomTournament, RandomDigraph };

struct FamilyParams {
    std::optional<std::uint64_t> seed;
    double arc_prob = 0.5;
    bool allow_symmetric = true;
};

std::optional<Family> family_from_string(std::string_view s);
const char* family_key(Family f);

// size is the vertex count except for Spider, where it is the leg count k.
Digraph gen_family(Family f, int size, const FamilyParams& params = {});

}  // namespace secdom
