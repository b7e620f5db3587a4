#include "secdom/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace secdom {

namespace {

// Directions in which a partial set must eventually cover the whole vertex
// set. Out-domination underlies gamma+, gamma_so, gamma_oso, gamma_iso and
// also gamma_os: a valid OSDS is out-dominating because defenders come from
// in-neighborhoods. gamma* needs both directions at once.
struct Streams {
    bool out = false;
    bool in = false;
    bool und = false;
};

Streams streams_for(ParamKind kind) {
    switch (kind) {
        case ParamKind::GammaPlus:
        case ParamKind::GammaSo:
        case ParamKind::GammaOso:
        case ParamKind::GammaIso:
        case ParamKind::GammaOs: return {.out = true};
        case ParamKind::GammaMinus: return {.in = true};
        case ParamKind::GammaS: return {.und = true};
        case ParamKind::GammaTwin: return {.out = true, .in = true};
    }
    return {.out = true};
}

struct Search {
    const Digraph& d;
    ParamKind kind;
    SetKind skind;
    bool secure;
    int n;
    int nfree = 0;
    int target = 0;  // choices beyond the forced set
    std::vector<int> free_v;
    std::vector<std::vector<VertexSet>> closure;  // per stream, per vertex
    std::vector<std::vector<VertexSet>> suffix;   // per stream, index 0..nfree
    std::vector<std::vector<VertexSet>> cov;      // per depth, per stream
    VertexSet cur;
    std::uint64_t nodes = 0;
    CardinalityAudit* audit = nullptr;
    VertexSet found;
    bool have_found = false;

    Search(const Digraph& dg, ParamKind k, const VertexSet& forced)
        : d(dg), kind(k), skind(set_kind_for_param(k)), secure(is_secure_kind(skind)),
          n(dg.order()), cur(forced) {
        Streams st = streams_for(kind);
        auto add_stream = [&](auto&& close) {
            std::vector<VertexSet> c;
            c.reserve(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) c.push_back(close(v));
            closure.push_back(std::move(c));
        };
        if (st.out) add_stream([&](int v) { return d.out(v).with(v); });
        if (st.in) add_stream([&](int v) { return d.in(v).with(v); });
        if (st.und) add_stream([&](int v) { return (d.out(v) | d.in(v)).with(v); });

        for (int v = 0; v < n; ++v)
            if (!forced.contains(v)) free_v.push_back(v);
        nfree = static_cast<int>(free_v.size());

        suffix.resize(closure.size());
        for (std::size_t s = 0; s < closure.size(); ++s) {
            suffix[s].assign(static_cast<std::size_t>(nfree) + 1, VertexSet(n));
            for (int i = nfree - 1; i >= 0; --i)
                suffix[s][static_cast<std::size_t>(i)] =
                    suffix[s][static_cast<std::size_t>(i) + 1] |
                    closure[s][static_cast<std::size_t>(free_v[static_cast<std::size_t>(i)])];
        }

        cov.assign(static_cast<std::size_t>(nfree) + 1,
                   std::vector<VertexSet>(closure.size(), VertexSet(n)));
        for (std::size_t s = 0; s < closure.size(); ++s) {
            VertexSet base(n);
            forced.for_each([&](int v) { base |= closure[s][static_cast<std::size_t>(v)]; });
            base |= forced;
            cov[0][s] = base;
        }
    }

    bool run(int k, int forced_count, CardinalityAudit* a) {
        target = k - forced_count;
        audit = a;
        have_found = false;
        return dfs(0, 0);
    }

    bool dfs(int start, int chosen) {
        ++nodes;
        for (std::size_t s = 0; s < closure.size(); ++s) {
            VertexSet reach = cov[static_cast<std::size_t>(chosen)][s] |
                              suffix[s][static_cast<std::size_t>(start)];
            if (!reach.is_full()) {
                audit->leaves_pruned += binomial(nfree - start, target - chosen);
                return false;
            }
        }
        if (chosen == target) {
            ++audit->leaves_checked;
            for (std::size_t s = 0; s < closure.size(); ++s)
                if (!cov[static_cast<std::size_t>(chosen)][s].is_full()) return false;
            if (secure && !is_secure_set(d, cur, skind).valid) return false;
            found = cur;
            have_found = true;
            return true;
        }
        int limit = nfree - (target - chosen);
        for (int i = start; i <= limit; ++i) {
            int v = free_v[static_cast<std::size_t>(i)];
            cur.add(v);
            for (std::size_t s = 0; s < closure.size(); ++s)
                cov[static_cast<std::size_t>(chosen) + 1][s] =
                    cov[static_cast<std::size_t>(chosen)][s] |
                    closure[s][static_cast<std::size_t>(v)];
            if (dfs(i + 1, chosen + 1)) return true;
            cur.remove(v);
        }
        return false;
    }
};

DefenseWitness defense_for(const Digraph& d, const VertexSet& witness, SetKind skind) {
    if (!is_secure_kind(skind)) return {};
    auto sc = is_secure_set(d, witness, skind);
    if (!sc.valid) throw std::logic_error("solver produced a witness the verifier rejects");
    return sc.defense;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

VertexSet forced_vertices(const Digraph& d, ParamKind kind) {
    int n = d.order();
    VertexSet f(n);
    for (int v = 0; v < n; ++v) {
        bool source = d.in_degree(v) == 0;
        bool sink = d.out_degree(v) == 0;
        switch (kind) {
            case ParamKind::GammaPlus:
            case ParamKind::GammaSo:
            case ParamKind::GammaOso:
                if (source) f.add(v);
                break;
            case ParamKind::GammaIso:
            case ParamKind::GammaTwin:
                if (source || sink) f.add(v);
                break;
            case ParamKind::GammaMinus:
                if (sink) f.add(v);
                break;
            case ParamKind::GammaOs:
            case ParamKind::GammaS:
                if (source && sink) f.add(v);
                break;
        }
    }
    return f;
}

int lower_bound(const Digraph& d, ParamKind kind) {
    int n = d.order();
    DegreeStats st = d.degree_stats();
    auto cdiv = [](long long a, long long b) { return static_cast<int>((a + b - 1) / b); };
    int lb = 1;
    switch (kind) {
        case ParamKind::GammaPlus:
        case ParamKind::GammaSo:
        case ParamKind::GammaOso:
        case ParamKind::GammaIso:
        case ParamKind::GammaOs:
            lb = std::max(lb, cdiv(n, st.max_out + 1));
            break;
        case ParamKind::GammaMinus:
            lb = std::max(lb, cdiv(n, st.max_in + 1));
            break;
        case ParamKind::GammaS: {
            int max_und = 0;
            for (int v = 0; v < n; ++v)
                max_und = std::max(max_und, (d.out(v) | d.in(v)).count());
            lb = std::max(lb, cdiv(n, max_und + 1));
            break;
        }
        case ParamKind::GammaTwin:
            lb = std::max(lb, std::max(cdiv(n, st.max_out + 1), cdiv(n, st.max_in + 1)));
            break;
    }
    if (!d.has_symmetric_arcs()) {
        bool secure_out = kind == ParamKind::GammaSo || kind == ParamKind::GammaOso ||
                          kind == ParamKind::GammaIso;
        if (secure_out) {
            if (n >= 2) lb = std::max(lb, 2);
            // (n+1)/(maxout+1) fails on arcless digraphs, hence the arc guard
            if (st.max_out >= 1) lb = std::max(lb, cdiv(n + 1, st.max_out + 1));
        }
        if (kind == ParamKind::GammaOso && st.max_out >= 1)
            lb = std::max(lb, cdiv(2LL * n, 2LL * st.max_out + 1));
    }
    return lb;
}

SolveResult solve_min(const Digraph& d, ParamKind kind, const SolverConfig& cfg) {
    int n = d.order();
    if (n > cfg.size_cap)
        throw std::invalid_argument("solve_min: order " + std::to_string(n) +
                                    " exceeds size cap " + std::to_string(cfg.size_cap));
    SolveResult res;
    res.kind = kind;
    res.forced = forced_vertices(d, kind);
    int fc = res.forced.count();
    int lb = std::max(lower_bound(d, kind), std::max(fc, 1));

    Search search(d, kind, res.forced);
    for (int k = lb; k <= n; ++k) {
        CardinalityAudit a;
        a.k = k;
        bool hit = search.run(k, fc, &a);
        a.exhausted = !hit;
        res.audit.push_back(a);
        if (hit) {
            res.value = k;
            res.witness = search.found;
            res.nodes_explored = search.nodes;
            res.defense = defense_for(d, res.witness, set_kind_for_param(kind));
            return res;
        }
    }
    throw std::logic_error("solve_min: no valid set found (impossible: V is valid)");
}

SolveResult brute_oracle(const Digraph& d, ParamKind kind) {
    int n = d.order();
    if (n > 20) throw std::invalid_argument("brute_oracle: order exceeds hard cap 20");
    SetKind skind = set_kind_for_param(kind);
    SolveResult res;
    res.kind = kind;
    res.forced = VertexSet(n);

    for (int k = 0; k <= n; ++k) {
        CardinalityAudit a;
        a.k = k;
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        bool more = true;
        while (more) {
            VertexSet s(n);
            for (int i : idx) s.add(i);
            ++res.nodes_explored;
            ++a.leaves_checked;
            bool valid = is_secure_kind(skind) ? is_secure_set(d, s, skind).valid
                                               : is_set(d, s, skind);
            if (valid) {
                res.value = k;
                res.witness = s;
                res.defense = defense_for(d, s, skind);
                a.exhausted = false;
                res.audit.push_back(a);
                return res;
            }
            // advance to the next k-combination in lexicographic order
            more = false;
            for (int i = k - 1; i >= 0; --i) {
                if (idx[static_cast<std::size_t>(i)] < n - (k - i)) {
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (k == 0) more = false;
        }
        a.exhausted = true;
        res.audit.push_back(a);
    }
    throw std::logic_error("brute_oracle: no valid set found (impossible: V is valid)");
}

std::map<ParamKind, SolveResult> solve_all(const Digraph& d, const SolverConfig& cfg) {
    std::map<ParamKind, SolveResult> out;
    for (ParamKind k : all_param_kinds) out.emplace(k, solve_min(d, k, cfg));

    auto val = [&](ParamKind k) { return out.at(k).value; };
    auto chain = [&](ParamKind a, ParamKind b) {
        if (val(a) > val(b))
            throw std::logic_error(std::string("parameter chain violated: ") + param_key(a) +
                                   " > " + param_key(b));
    };
    chain(ParamKind::GammaS, ParamKind::GammaOs);
    chain(ParamKind::GammaS, ParamKind::GammaSo);
    chain(ParamKind::GammaPlus, ParamKind::GammaOs);
    chain(ParamKind::GammaPlus, ParamKind::GammaSo);
    chain(ParamKind::GammaSo, ParamKind::GammaOso);
    chain(ParamKind::GammaSo, ParamKind::GammaIso);
    chain(ParamKind::GammaOs, ParamKind::GammaOso);
    if (!d.has_symmetric_arcs()) chain(ParamKind::GammaOs, ParamKind::GammaIso);
    return out;
}

}  // namespace secdom
