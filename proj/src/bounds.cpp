#include "secdom/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "secdom/constructions.hpp"
#include "secdom/families.hpp"
#include "secdom/io.hpp"
#include "secdom/rng.hpp"

namespace secdom {

namespace {

constexpr int kSearchCap = 20;

void require_search_cap(const Digraph& d, const char* who) {
    if (d.order() > kSearchCap)
        throw std::invalid_argument(std::string(who) + ": order exceeds cap 20");
}

// n == 3 and the arcs form one directed triangle
bool is_directed_triangle(const Digraph& d) {
    if (d.order() != 3 || d.arc_count() != 3 || d.has_symmetric_arcs()) return false;
    for (int v = 0; v < 3; ++v)
        if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
    return true;
}

// underlying graph is K_{1,n-1}
bool underlying_is_star(const Digraph& d) {
    int n = d.order();
    if (n < 2) return false;
    int edges = 0, max_deg = 0;
    for (int v = 0; v < n; ++v) {
        int deg = (d.out(v) | d.in(v)).count();
        max_deg = std::max(max_deg, deg);
    }
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u)) ++edges;
    return edges == n - 1 && max_deg == n - 1;
}

}  // namespace

int longest_dipath_length(const Digraph& d) {
    require_search_cap(d, "longest_dipath_length");
    int n = d.order();
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> outmask(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        d.out(v).for_each([&](int w) { outmask[static_cast<std::size_t>(v)] |= 1u << w; });
    for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        best = std::max(best, std::popcount(mask) - 1);
        std::uint32_t fromset = e;
        while (fromset) {
            int v = std::countr_zero(fromset);
            fromset &= fromset - 1;
            std::uint32_t ext = outmask[static_cast<std::size_t>(v)] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return best;
}

int longest_dicycle_length(const Digraph& d) {
    require_search_cap(d, "longest_dicycle_length");
    int n = d.order();
    // paths anchored at the lowest vertex of the covered set; extensions only
    // to higher-numbered vertices, so each cycle is found at its minimum
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> outmask(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        d.out(v).for_each([&](int w) { outmask[static_cast<std::size_t>(v)] |= 1u << w; });
    for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        int anchor = std::countr_zero(mask);
        int size = std::popcount(mask);
        std::uint32_t fromset = e;
        while (fromset) {
            int v = std::countr_zero(fromset);
            fromset &= fromset - 1;
            if (size >= 2 && d.has_arc(v, anchor)) best = std::max(best, size);
            std::uint32_t ext = outmask[static_cast<std::size_t>(v)] & ~mask & ~((1u << (anchor + 1)) - 1);
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return best;
}

bool equals_n_characterization(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if (d.out_degree(v) > 0 && d.in_degree(v) > 0) return false;
    return true;
}

bool BoundReport::all_hold() const {
    for (const auto& e : entries)
        if (e.applicable && !e.holds) return false;
    return true;
}

const BoundEntry* BoundReport::first_violation() const {
    for (const auto& e : entries)
        if (e.applicable && !e.holds) return &e;
    return nullptr;
}

BoundReport bound_report(const Digraph& d, const std::map<ParamKind, SolveResult>& params) {
    for (ParamKind k : all_param_kinds)
        if (!params.count(k))
            throw std::invalid_argument(std::string("bound_report: missing parameter ") +
                                        param_key(k));
    const int n = d.order();
    const DegreeStats st = d.degree_stats();
    const bool sym = d.has_symmetric_arcs();
    const bool tournament = d.is_tournament();
    const bool searchable = n <= kSearchCap;
    const int l = searchable ? longest_dipath_length(d) : 0;
    const int c = searchable ? longest_dicycle_length(d) : 0;
    auto val = [&](ParamKind k) { return static_cast<long long>(params.at(k).value); };
    auto cdiv = [](long long a, long long b) { return (a + b - 1) / b; };

    BoundReport rep;
    struct Guard {
        bool ok;
        const char* why;
    };
    auto add = [&](const std::string& id, BoundEntry::Relation rel,
                   std::initializer_list<Guard> guards, long long lhs, long long rhs) {
        BoundEntry e;
        e.id = id;
        e.relation = rel;
        e.applicable = true;
        std::string why;
        for (const Guard& g : guards)
            if (!g.ok) {
                e.applicable = false;
                if (!why.empty()) why += "; ";
                why += g.why;
            }
        e.reason = e.applicable ? "applies" : why;
        if (e.applicable) {
            e.lhs = lhs;
            e.rhs = rhs;
            e.holds = rel == BoundEntry::Relation::LessEq ? lhs <= rhs : lhs == rhs;
            e.slack = rhs - lhs;
        }
        rep.entries.push_back(std::move(e));
    };
    auto le = [&](const std::string& id, std::initializer_list<Guard> guards, long long lhs,
                  long long rhs) { add(id, BoundEntry::Relation::LessEq, guards, lhs, rhs); };
    auto eq = [&](const std::string& id, std::initializer_list<Guard> guards, long long lhs,
                  long long rhs) { add(id, BoundEntry::Relation::Eq, guards, lhs, rhs); };

    const Guard no_sym{!sym, "requires no symmetric arcs"};
    const Guard has_arc{st.max_out >= 1, "requires at least one arc"};
    const Guard nontrivial{n >= 2, "requires n >= 2"};
    const Guard is_tour{tournament, "requires a tournament"};
    const Guard connected{d.weakly_connected(), "requires weak connectivity"};
    const Guard min_deg{st.min_degree >= 1, "requires min degree >= 1"};
    const Guard cap{searchable, "order exceeds path search cap"};

    // chain between the parameters
    le("chain/gamma_s-le-gamma_os", {}, val(ParamKind::GammaS), val(ParamKind::GammaOs));
    le("chain/gamma_s-le-gamma_so", {}, val(ParamKind::GammaS), val(ParamKind::GammaSo));
    le("chain/gamma_plus-le-gamma_os", {}, val(ParamKind::GammaPlus), val(ParamKind::GammaOs));
    le("chain/gamma_plus-le-gamma_so", {}, val(ParamKind::GammaPlus), val(ParamKind::GammaSo));
    le("chain/gamma_so-le-gamma_oso", {}, val(ParamKind::GammaSo), val(ParamKind::GammaOso));
    le("chain/gamma_so-le-gamma_iso", {}, val(ParamKind::GammaSo), val(ParamKind::GammaIso));
    le("chain/gamma_os-le-gamma_oso", {}, val(ParamKind::GammaOs), val(ParamKind::GammaOso));
    le("chain/gamma_os-le-gamma_iso", {no_sym}, val(ParamKind::GammaOs), val(ParamKind::GammaIso));

    // gamma_oso
    le("lower/gamma_oso/2n-over-2maxout+1", {no_sym, has_arc},
       cdiv(2LL * n, 2LL * st.max_out + 1), val(ParamKind::GammaOso));
    le("upper/gamma_oso/n-minus-mindeg", {}, val(ParamKind::GammaOso), n - st.min_degree);
    eq("char/gamma_oso/equals-n-iff-all-source-or-sink", {},
       equals_n_characterization(d) ? 1 : 0, val(ParamKind::GammaOso) == n ? 1 : 0);
    le("upper/gamma_oso/longest-path", {cap}, val(ParamKind::GammaOso), n - (l + 1) / 3);
    le("upper/gamma_oso/longest-cycle", {cap, {c >= 2, "requires a directed cycle"}},
       val(ParamKind::GammaOso), n - c / 3);
    le("upper/gamma_oso/tournament-two-thirds", {is_tour, nontrivial}, val(ParamKind::GammaOso),
       cdiv(2LL * n, 3));
    le("lower/gamma_oso/tournament-ge-2", {is_tour, nontrivial}, 2, val(ParamKind::GammaOso));
    le("upper/gamma_oso/tournament-source-log", {is_tour, {n >= 3, "requires n >= 3"},
        {[&] { for (int v = 0; v < n; ++v) if (d.in_degree(v) == 0) return true; return false; }(),
         "requires a vertex of in-degree 0"}},
       val(ParamKind::GammaOso), ceil_log2(n - 1) + 1);

    // gamma_os
    le("upper/gamma_os/outdom-plus-indom", {no_sym}, val(ParamKind::GammaOs),
       val(ParamKind::GammaPlus) + val(ParamKind::GammaMinus));
    le("upper/gamma_os/n-minus-1", {nontrivial, has_arc}, val(ParamKind::GammaOs), n - 1);
    eq("char/gamma_os/equals-n-1-iff-triangle-or-star", {connected, nontrivial},
       (is_directed_triangle(d) || underlying_is_star(d)) ? 1 : 0,
       val(ParamKind::GammaOs) == n - 1 ? 1 : 0);
    le("upper/gamma_os/longest-path", {cap}, val(ParamKind::GammaOs), n - (l + 1) / 2);
    le("upper/gamma_os/longest-cycle", {cap, {c >= 2, "requires a directed cycle"}},
       val(ParamKind::GammaOs), n - c / 2);
    eq("char/gamma_os/tournament-equals-1-iff-source", {is_tour},
       [&] { for (int v = 0; v < n; ++v) if (d.in_degree(v) == 0) return 1; return 0; }(),
       val(ParamKind::GammaOs) == 1 ? 1 : 0);
    le("upper/gamma_os/tournament-log", {is_tour, nontrivial}, val(ParamKind::GammaOs),
       ceil_log2(n));
    le("upper/gamma_os/twin", {no_sym}, val(ParamKind::GammaOs), val(ParamKind::GammaTwin));
    le("upper/gamma_twin/two-thirds", {min_deg}, val(ParamKind::GammaTwin), 2LL * n / 3);
    le("upper/gamma_os/two-thirds", {min_deg, no_sym}, val(ParamKind::GammaOs), 2LL * n / 3);

    // gamma_so
    le("lower/gamma_so/n+1-over-maxout+1", {no_sym, has_arc}, cdiv(n + 1, st.max_out + 1),
       val(ParamKind::GammaSo));
    le("lower/gamma_oso/n+1-over-maxout+1", {no_sym, has_arc}, cdiv(n + 1, st.max_out + 1),
       val(ParamKind::GammaOso));
    le("lower/gamma_iso/n+1-over-maxout+1", {no_sym, has_arc}, cdiv(n + 1, st.max_out + 1),
       val(ParamKind::GammaIso));
    eq("char/gamma_so/equals-n-iff-all-source-or-sink", {},
       equals_n_characterization(d) ? 1 : 0, val(ParamKind::GammaSo) == n ? 1 : 0);
    le("upper/gamma_so/longest-path", {cap}, val(ParamKind::GammaSo), n - (2 * l + 2) / 5);
    le("upper/gamma_so/longest-cycle", {cap, {c >= 3, "requires a directed cycle of length >= 3"}},
       val(ParamKind::GammaSo), n - 2 * c / 5);
    le("upper/gamma_so/tournament-outdom-plus-1", {is_tour}, val(ParamKind::GammaSo),
       val(ParamKind::GammaPlus) + 1);
    le("upper/gamma_so/tournament-log", {is_tour, nontrivial}, val(ParamKind::GammaSo),
       ceil_log2(n) + 1);
    le("lower/gamma_so/nontrivial-ge-2", {nontrivial, no_sym}, 2, val(ParamKind::GammaSo));
    le("lower/gamma_oso/nontrivial-ge-2", {nontrivial, no_sym}, 2, val(ParamKind::GammaOso));
    le("lower/gamma_iso/nontrivial-ge-2", {nontrivial, no_sym}, 2, val(ParamKind::GammaIso));

    // gamma_iso
    le("upper/gamma_iso/n-minus-min-indegree", {}, val(ParamKind::GammaIso), n - st.min_in);
    const bool has_pair = n >= 2 && dominant_pair(d).has_value();
    eq("char/gamma_iso/dominant-pair-equals-2",
       {nontrivial, no_sym, {has_pair, "requires a dominant pair"}}, 2,
       val(ParamKind::GammaIso));
    eq("char/gamma_iso/equals-n-iff-all-source-or-sink", {},
       equals_n_characterization(d) ? 1 : 0, val(ParamKind::GammaIso) == n ? 1 : 0);
    le("upper/gamma_iso/longest-path", {cap}, val(ParamKind::GammaIso), n - (l + 1) / 3);
    le("upper/gamma_iso/longest-cycle", {cap, {c >= 2, "requires a directed cycle"}},
       val(ParamKind::GammaIso), n - c / 3);

    return rep;
}

HuntReport conjecture_hunt(ParamKind kind, bool exhaustive, int n, int samples,
                           std::optional<std::uint64_t> seed, const SolverConfig& cfg) {
    if (kind != ParamKind::GammaOso && kind != ParamKind::GammaIso)
        throw std::invalid_argument("conjecture_hunt: kind must be gamma_oso or gamma_iso");
    if (n < 1) throw std::invalid_argument("conjecture_hunt: n must be at least 1");
    HuntReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.bound = static_cast<int>((2 * n + 2) / 3);
    rep.mode = exhaustive ? "exhaustive" : "sampled";

    auto consider = [&](const Digraph& d) {
        if (d.degree_stats().min_degree < 1) return;
        ++rep.digraphs_checked;
        int value = solve_min(d, kind, cfg).value;
        if (value > rep.bound) {
            int oracle = brute_oracle(d, kind).value;
            if (oracle != value)
                throw std::logic_error("conjecture_hunt: oracle disagrees with solver");
            rep.counterexamples.push_back({serialize_digraph(d), value});
        }
    };

    if (exhaustive) {
        if (n > 5)
            throw std::invalid_argument("conjecture_hunt: exhaustive mode is capped at n = 5");
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) pairs.emplace_back(u, v);
        std::uint64_t total = std::uint64_t{1} << pairs.size();
        std::vector<std::pair<int, int>> arcs;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            arcs.clear();
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) arcs.push_back(pairs[i]);
            if (arcs.size() < static_cast<std::size_t>(n)) continue;  // min degree 1 needs n arcs
            consider(Digraph::from_arcs(n, arcs));
        }
    } else {
        if (!seed) throw std::invalid_argument("conjecture_hunt: sampled mode needs a seed");
        if (samples < 1) throw std::invalid_argument("conjecture_hunt: samples must be positive");
        rep.seed = seed;
        rep.samples = samples;
        SplitMix64 rng(*seed);
        for (int i = 0; i < samples; ++i)
            consider(random_digraph(n, 0.5, true, rng.next()));
    }
    return rep;
}

}  // namespace secdom
