#include "secdom/families.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "secdom/rng.hpp"

namespace secdom {

Digraph dipath(int n) {
    if (n < 1) throw std::invalid_argument("dipath: n must be at least 1");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph::from_arcs(n, arcs);
}

Digraph dicycle(int n) {
    if (n < 3) throw std::invalid_argument("dicycle: n must be at least 3");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph::from_arcs(n, arcs);
}

Digraph transitive_tournament(int n) {
    if (n < 1) throw std::invalid_argument("transitive_tournament: n must be at least 1");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return Digraph::from_arcs(n, arcs);
}

Digraph spider(int k) {
    if (k < 1) throw std::invalid_argument("spider: k must be at least 1");
    int n = 2 * k + 1;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) {
        arcs.emplace_back(i, k + i);
        arcs.emplace_back(k + i, 2 * k);
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tournament: n must be at least 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            arcs.emplace_back(rng.next_bit() ? std::pair{v, u} : std::pair{u, v});
    return Digraph::from_arcs(n, arcs);
}

Digraph random_digraph(int n, double arc_prob, bool allow_symmetric, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_digraph: n must be at least 1");
    if (arc_prob < 0.0 || arc_prob > 1.0)
        throw std::invalid_argument("random_digraph: arc_prob must lie in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::vector<bool>> chosen(static_cast<std::size_t>(n),
                                          std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            // one draw per ordered pair regardless of the outcome, so the
            // stream position depends only on (n, seed)
            bool hit = rng.next_unit() < arc_prob;
            if (!hit) continue;
            if (!allow_symmetric && chosen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                continue;
            chosen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            arcs.emplace_back(u, v);
        }
    return Digraph::from_arcs(n, arcs);
}

Digraph separating_fixture() {
    // vertices v1..v7 as 0..6
    return Digraph::from_arcs(7, {
        {3, 0}, {3, 1}, {3, 4}, {3, 5}, {3, 6},
        {4, 2}, {4, 5}, {4, 6},
        {0, 4}, {1, 4},
        {2, 3},
    });
}

std::optional<Family> family_from_string(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != '_' && c != '-') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "dipath" || t == "path") return Family::Dipath;
    if (t == "dicycle" || t == "cycle") return Family::Dicycle;
    if (t == "transitivetournament" || t == "transtour" || t == "transitive")
        return Family::TransitiveTournament;
    if (t == "spider") return Family::Spider;
    if (t == "randomtournament" || t == "tournament") return Family::RandomTournament;
    if (t == "randomdigraph" || t == "random" || t == "digraph") return Family::RandomDigraph;
    return std::nullopt;
}

const char* family_key(Family f) {
    switch (f) {
        case Family::Dipath: return "dipath";
        case Family::Dicycle: return "dicycle";
        case Family::TransitiveTournament: return "transitive_tournament";
        case Family::Spider: return "spider";
        case Family::RandomTournament: return "random_tournament";
        case Family::RandomDigraph: return "random_digraph";
    }
    return "?";
}

Digraph gen_family(Family f, int size, const FamilyParams& params) {
    switch (f) {
        case Family::Dipath: return dipath(size);
        case Family::Dicycle: return dicycle(size);
        case Family::TransitiveTournament: return transitive_tournament(size);
        case Family::Spider: return spider(size);
        case Family::RandomTournament:
            if (!params.seed) throw std::invalid_argument("gen_family: random family needs a seed");
            return random_tournament(size, *params.seed);
        case Family::RandomDigraph:
            if (!params.seed) throw std::invalid_argument("gen_family: random family needs a seed");
            return random_digraph(size, params.arc_prob, params.allow_symmetric, *params.seed);
    }
    throw std::invalid_argument("gen_family: unknown family");
}

}  // namespace secdom
