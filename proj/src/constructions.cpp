#include "secdom/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "secdom/families.hpp"
#include "secdom/solver.hpp"
#include "secdom/verifiers.hpp"

namespace secdom {

namespace {

void require_tournament(const Digraph& t, const char* who) {
    if (!t.is_tournament()) throw std::invalid_argument(std::string(who) + ": not a tournament");
}

VertexSet path_pattern(ParamKind kind, int n) {
    VertexSet s(n);
    for (int i = 1; i <= n; ++i) {
        bool pick = false;
        switch (kind) {
            case ParamKind::GammaPlus:
            case ParamKind::GammaOs: pick = i % 2 == 1; break;
            case ParamKind::GammaOso: pick = i % 3 == 1 || i % 3 == 2; break;
            case ParamKind::GammaSo: pick = i % 5 == 1 || i % 5 == 3 || i % 5 == 4; break;
            case ParamKind::GammaIso: pick = i % 3 == 0 || i % 3 == 1; break;
            default:
                throw std::invalid_argument("path pattern: no closed form for this parameter");
        }
        if (pick) s.add(i - 1);
    }
    if (kind == ParamKind::GammaSo && n % 5 == 2) s.add(n - 1);
    if (kind == ParamKind::GammaIso && n % 3 == 2) s.add(n - 1);
    return s;
}

}  // namespace

int closed_form(ParamKind kind, int n) {
    switch (kind) {
        case ParamKind::GammaPlus:
        case ParamKind::GammaOs: return (n + 1) / 2;
        case ParamKind::GammaOso:
        case ParamKind::GammaIso: return (2 * n + 2) / 3;
        case ParamKind::GammaSo: return (3 * n + 4) / 5;
        default: throw std::invalid_argument("closed_form: no closed form for this parameter");
    }
}

WitnessRecipe path_witness(ParamKind kind, int n) {
    if (n < 1) throw std::invalid_argument("path_witness: n must be at least 1");
    WitnessRecipe r{kind, "path", n, path_pattern(kind, n), closed_form(kind, n)};
    if (r.set.count() != r.claimed_size)
        throw std::logic_error("path_witness: pattern size differs from closed form");
    return r;
}

WitnessRecipe cycle_witness(ParamKind kind, int n) {
    if (n < 3) throw std::invalid_argument("cycle_witness: n must be at least 3");
    WitnessRecipe r{kind, "cycle", n, path_pattern(kind, n), closed_form(kind, n)};
    Digraph c = dicycle(n);
    SetKind sk = set_kind_for_param(kind);
    bool ok = is_secure_kind(sk) ? is_secure_set(c, r.set, sk).valid : is_set(c, r.set, sk);
    if (!ok) {
        // wrap-around broke the path pattern for this residue
        r.set = solve_min(c, kind).witness;
    }
    if (r.set.count() != r.claimed_size)
        throw std::logic_error("cycle_witness: witness size differs from closed form");
    return r;
}

VertexSet tournament_greedy_outdom(const Digraph& t) {
    require_tournament(t, "tournament_greedy_outdom");
    int n = t.order();
    VertexSet s(n);
    VertexSet remaining = VertexSet::full(n);
    while (!remaining.empty()) {
        int best = -1, best_deg = -1;
        for (int v = remaining.first(); v != -1; v = remaining.next(v)) {
            int deg = (t.out(v) & remaining).count();
            if (deg > best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        s.add(best);
        remaining -= t.out(best).with(best);
    }
    return s;
}

VertexSet tournament_sods(const Digraph& t) {
    require_tournament(t, "tournament_sods");
    if (t.order() < 2) throw std::invalid_argument("tournament_sods: n must be at least 2");
    VertexSet s = tournament_greedy_outdom(t);
    if (is_secure_set(t, s, SetKind::Sods).valid) return s;
    // any extra vertex defends every remaining outsider: swapping it for u
    // yields greedy + {u}, which still out-dominates
    int extra = s.complement().first();
    if (extra == -1) throw std::logic_error("tournament_sods: greedy set covers all vertices");
    s.add(extra);
    return s;
}

VertexSet tournament_osods_with_source(const Digraph& t) {
    require_tournament(t, "tournament_osods_with_source");
    int n = t.order();
    if (n < 3) throw std::invalid_argument("tournament_osods_with_source: n must be at least 3");
    int source = -1;
    for (int v = 0; v < n && source == -1; ++v)
        if (t.in_degree(v) == 0) source = v;
    if (source == -1)
        throw std::invalid_argument("tournament_osods_with_source: no vertex of in-degree 0");

    // greedy on the subtournament without the source
    VertexSet s(n);
    VertexSet remaining = VertexSet::full(n);
    remaining.remove(source);
    while (!remaining.empty()) {
        int best = -1, best_deg = -1;
        for (int v = remaining.first(); v != -1; v = remaining.next(v)) {
            int deg = (t.out(v) & remaining).count();
            if (deg > best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        s.add(best);
        remaining -= t.out(best).with(best);
    }
    s.add(source);
    return s;
}

std::vector<int> tournament_hamiltonian_path(const Digraph& t) {
    require_tournament(t, "tournament_hamiltonian_path");
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) {
        std::size_t pos = 0;
        while (pos < seq.size() && t.has_arc(seq[pos], v)) ++pos;
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), v);
    }
    return seq;
}

VertexSet tournament_osods_via_hampath(const Digraph& t) {
    require_tournament(t, "tournament_osods_via_hampath");
    if (t.order() < 2)
        throw std::invalid_argument("tournament_osods_via_hampath: n must be at least 2");
    std::vector<int> path = tournament_hamiltonian_path(t);
    VertexSet s(t.order());
    for (std::size_t i = 0; i < path.size(); ++i) {
        int pos = static_cast<int>(i) + 1;
        if (pos % 3 == 1 || pos % 3 == 2) s.add(path[i]);
    }
    return s;
}

VertexSet spider_isods_witness(int k) {
    if (k < 1) throw std::invalid_argument("spider_isods_witness: k must be at least 1");
    int n = 2 * k + 1;
    VertexSet s(n);
    for (int i = 0; i < k; ++i) s.add(i);
    s.add(2 * k);
    return s;
}

std::optional<std::pair<int, int>> dominant_pair(const Digraph& d) {
    int n = d.order();
    if (n < 2) throw std::invalid_argument("dominant_pair: n must be at least 2");
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            VertexSet rest = VertexSet::full(n);
            rest.remove(u);
            rest.remove(v);
            VertexSet out_u = d.out(u);
            out_u.remove(v);
            VertexSet in_v = d.in(v);
            in_v.remove(u);
            if (out_u == rest && in_v == rest) return std::make_pair(u, v);
        }
    return std::nullopt;
}

int ceil_log2(int n) {
    if (n <= 1) return 0;
    int k = 0;
    int m = n - 1;
    while (m > 0) {
        m >>= 1;
        ++k;
    }
    return k;
}

}  // namespace secdom
