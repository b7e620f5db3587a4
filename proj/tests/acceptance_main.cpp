// Acceptance suite: one pass/fail line per criterion. Exits nonzero when any
// criterion fails. argv[1] must point at the secdom CLI binary (used by the
// determinism criterion).

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "secdom/bounds.hpp"
#include "secdom/constructions.hpp"
#include "secdom/families.hpp"
#include "secdom/io.hpp"
#include "secdom/rng.hpp"
#include "secdom/orientations.hpp"
#include "secdom/solver.hpp"
#include "secdom/verifiers.hpp"

using namespace secdom;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

std::string cli_path;

// ---------- shared corpora ----------

std::vector<Digraph> all_digraphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.emplace_back(u, v);
    std::vector<Digraph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) arcs.push_back(pairs[i]);
        out.push_back(Digraph::from_arcs(n, arcs));
    }
    return out;
}

std::vector<Digraph> all_symfree_digraphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<Digraph> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::pair<int, int>> arcs;
        std::uint64_t c = code;
        for (auto [u, v] : pairs) {
            if (c % 3 == 1) arcs.emplace_back(u, v);
            if (c % 3 == 2) arcs.emplace_back(v, u);
            c /= 3;
        }
        out.push_back(Digraph::from_arcs(n, arcs));
    }
    return out;
}

std::vector<VertexSet> all_subsets(int n) {
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.add(v);
        out.push_back(s);
    }
    return out;
}

// deterministic set of 200 mixed random digraphs with n <= 7
std::vector<Digraph> random_corpus_200() {
    std::vector<Digraph> out;
    SplitMix64 rng(0x5ecd0);
    const double probs[4] = {0.15, 0.3, 0.5, 0.7};
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 7;
        out.push_back(random_digraph(n, probs[i % 4], i % 2 == 0, rng.next()));
    }
    return out;
}

const std::initializer_list<ParamKind> kClosedFormKinds{
    ParamKind::GammaPlus, ParamKind::GammaOs, ParamKind::GammaSo, ParamKind::GammaOso,
    ParamKind::GammaIso};

void check_bounds_hold(const Digraph& d) {
    auto rep = bound_report(d, solve_all(d));
    if (const BoundEntry* bad = rep.first_violation())
        throw Failure{"bound " + bad->id + " violated (lhs=" + std::to_string(bad->lhs) +
                      ", rhs=" + std::to_string(bad->rhs) + ") on:\n" + serialize_digraph(d)};
}

// ---------- criteria ----------

void criterion_fixture() {
    auto t0 = std::chrono::steady_clock::now();
    auto all = solve_all(separating_fixture());
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    require(all.at(ParamKind::GammaPlus).value == 2, "gamma+ != 2");
    require(all.at(ParamKind::GammaOs).value == 2, "gamma_os != 2");
    require(all.at(ParamKind::GammaSo).value == 3, "gamma_so != 3");
    require(all.at(ParamKind::GammaOso).value == 4, "gamma_oso != 4");
    require(all.at(ParamKind::GammaIso).value == 5, "gamma_iso != 5");
    require(ms < 1000, "fixture computation took " + std::to_string(ms) + " ms (budget 1000)");
}

void criterion_paths() {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 12; ++n) {
        auto d = dipath(n);
        for (ParamKind k : kClosedFormKinds)
            require(solve_min(d, k).value == closed_form(k, n),
                    std::string(param_key(k)) + " wrong on path n=" + std::to_string(n));
    }
    auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
                 .count();
    require(s < 60, "path sweep took " + std::to_string(s) + " s (budget 60)");
}

void criterion_cycles() {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 3; n <= 12; ++n) {
        auto d = dicycle(n);
        for (ParamKind k : kClosedFormKinds)
            require(solve_min(d, k).value == closed_form(k, n),
                    std::string(param_key(k)) + " wrong on cycle n=" + std::to_string(n));
    }
    auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
                 .count();
    require(s < 60, "cycle sweep took " + std::to_string(s) + " s (budget 60)");
}

void criterion_oracle_equivalence() {
    auto check = [](const Digraph& d) {
        for (ParamKind k : all_param_kinds) {
            auto fast = solve_min(d, k);
            auto slow = brute_oracle(d, k);
            if (fast.value != slow.value || !(fast.witness == slow.witness))
                throw Failure{std::string("solver/oracle mismatch for ") + param_key(k) +
                              " on:\n" + serialize_digraph(d)};
        }
    };
    for (const auto& d : random_corpus_200()) check(d);
    for (const auto& d : all_digraphs(4)) check(d);
}

void criterion_bound_catalogue() {
    for (const auto& d : all_digraphs(4)) check_bounds_hold(d);
    auto symfree = all_symfree_digraphs(4);
    require(symfree.size() == 729, "symmetric-arc-free 4-vertex corpus must have 729 digraphs");
    for (const auto& d : symfree) check_bounds_hold(d);

    SplitMix64 rng(0xb0c4d);
    const double probs[4] = {0.15, 0.3, 0.5, 0.7};
    for (int n = 5; n <= 8; ++n)
        for (int i = 0; i < 1000; ++i)
            check_bounds_hold(random_digraph(n, probs[i % 4], i % 2 == 0, rng.next()));
    for (int n = 4; n <= 10; ++n)
        for (int i = 0; i < 200; ++i) check_bounds_hold(random_tournament(n, rng.next()));
}

void criterion_characterizations() {
    // sufficiency given the base condition, and exactness for the four forms
    // that are exact, on the exhaustive symmetric-arc-free 4-vertex corpus
    for (const auto& d : all_symfree_digraphs(4)) {
        for (const auto& s : all_subsets(4)) {
            bool outdom = is_set(d, s, SetKind::OutDominating);
            bool und = is_set(d, s, SetKind::UnderlyingDominating);
            for (int v = 0; v < 4; ++v) {
                if (s.contains(v)) continue;
                for (int u = s.first(); u != -1; u = s.next(u)) {
                    if (d.in(v).contains(u)) {
                        if (outdom) {
                            require(char_defense(d, s, u, v, CharForm::OsodsIn) ==
                                        defends(d, s, u, v, SetKind::Osods),
                                    "OsodsIn is not exact on:\n" + serialize_digraph(d));
                            require(char_defense(d, s, u, v, CharForm::SodsIn) ==
                                        defends(d, s, u, v, SetKind::Sods),
                                    "SodsIn is not exact on:\n" + serialize_digraph(d));
                        }
                        if (und && char_defense(d, s, u, v, CharForm::OsdsIn))
                            require(defends(d, s, u, v, SetKind::Osds),
                                    "OsdsIn unsound on:\n" + serialize_digraph(d));
                    }
                    if (d.out(v).contains(u) && outdom) {
                        require(char_defense(d, s, u, v, CharForm::SodsOut) ==
                                    defends(d, s, u, v, SetKind::Sods),
                                "SodsOut is not exact on:\n" + serialize_digraph(d));
                        require(char_defense(d, s, u, v, CharForm::IsodsOut) ==
                                    defends(d, s, u, v, SetKind::Isods),
                                "IsodsOut is not exact on:\n" + serialize_digraph(d));
                    }
                }
            }
        }
    }

    // recorded necessity counterexample: the defense holds, the predicate fails
    auto fx = separating_fixture();
    auto s45 = VertexSet::of(7, {3, 4});
    require(defends(fx, s45, 3, 0, SetKind::Osds), "fixture: v4 must defend v1 for OSDS");
    require(!char_defense(fx, s45, 3, 0, CharForm::OsdsIn),
            "fixture: the OSDS predicate must fail for (v4, v1)");
}

void criterion_equals_n() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : all_digraphs(n)) {
            bool pred = equals_n_characterization(d);
            for (ParamKind k : {ParamKind::GammaOso, ParamKind::GammaSo, ParamKind::GammaIso})
                require(pred == (solve_min(d, k).value == n),
                        std::string("equals-n mismatch for ") + param_key(k) + " on:\n" +
                            serialize_digraph(d));
        }

    // DOM reaches n exactly for bipartite graphs: connected, n <= 5, <= 8 edges
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << all_edges.size()); ++mask) {
            if (std::popcount(mask) > 8) continue;
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_edges.size(); ++i)
                if (mask >> i & 1) edges.push_back(all_edges[i]);
            auto g = UndirectedGraph::from_edges(n, edges);
            if (!g.connected()) continue;
            bool bip = g.bipartition().has_value();
            for (ParamKind k : {ParamKind::GammaOso, ParamKind::GammaSo, ParamKind::GammaIso})
                require((spectrum(g, k).DOM == n) == bip,
                        std::string("DOM=n iff bipartite fails for ") + param_key(k) + " on " +
                            serialize_graph(g));
        }
    }
}

void criterion_tournament_bounds() {
    SplitMix64 rng(0x70a3);
    for (int n = 2; n <= 512; n *= 2) {
        for (int i = 0; i < 200; ++i) {
            auto t = random_tournament(n, rng.next());
            auto greedy = tournament_greedy_outdom(t);
            require(greedy.count() <= ceil_log2(n),
                    "greedy set too large at n=" + std::to_string(n));
            require(is_set(t, greedy, SetKind::OutDominating),
                    "greedy set not out-dominating at n=" + std::to_string(n));
            auto sods = tournament_sods(t);
            require(sods.count() <= ceil_log2(n) + 1,
                    "sods construction too large at n=" + std::to_string(n));
            require(is_secure_set(t, sods, SetKind::Sods).valid,
                    "sods construction invalid at n=" + std::to_string(n));
            auto osods = tournament_osods_via_hampath(t);
            require(osods.count() <= (2 * n + 2) / 3,
                    "hampath osods too large at n=" + std::to_string(n));
            require(is_secure_set(t, osods, SetKind::Osods).valid,
                    "hampath osods invalid at n=" + std::to_string(n));
        }
    }
}

void criterion_spider_sharpness() {
    for (int k = 1; k <= 5; ++k) {
        auto d = spider(k);
        int n = d.order();
        int maxout = d.degree_stats().max_out;
        require(maxout == 1, "spider max out-degree must be 1");
        int value = solve_min(d, ParamKind::GammaIso).value;
        require(value == k + 1, "gamma_iso(spider) != k+1 at k=" + std::to_string(k));
        require((n + 1 + maxout) / (maxout + 1) == value,
                "lower bound slack not zero at k=" + std::to_string(k));
        require(is_secure_set(d, spider_isods_witness(k), SetKind::Isods).valid,
                "spider witness invalid at k=" + std::to_string(k));
    }
}

void criterion_orientation_constructions() {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << all_edges.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_edges.size(); ++i)
                if (mask >> i & 1) edges.push_back(all_edges[i]);
            auto g = UndirectedGraph::from_edges(n, edges);
            if (!g.connected()) continue;
            int gs = solve_min(g.symmetric_digraph(), ParamKind::GammaS).value;
            auto [d, s] = orientation_from_sds(g);
            require(is_secure_set(d, s, SetKind::Osds).valid,
                    "constructed S is not an OSDS on " + serialize_graph(g));
            require(solve_min(d, ParamKind::GammaOs).value == gs,
                    "gamma_os(D) != gamma_s(G) on " + serialize_graph(g));
        }
    }

    auto k23 = UndirectedGraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto i3 = VertexSet::of(5, {2, 3, 4});
    require(is_secure_set(orientation_from_independent_set(k23, i3), i3.complement(),
                          SetKind::Osds)
                .valid,
            "V \\ I is not an OSDS on K_{2,3}");

    auto c4 = UndirectedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto i2 = VertexSet::of(4, {0, 2});
    require(is_secure_set(orientation_from_independent_set(c4, i2), i2.complement(),
                          SetKind::Osds)
                .valid,
            "V \\ I is not an OSDS on C4");
}

void criterion_hunt() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t independent_count = 0;
    for (const auto& d : all_digraphs(4))
        if (d.degree_stats().min_degree >= 1) ++independent_count;
    for (ParamKind k : {ParamKind::GammaOso, ParamKind::GammaIso}) {
        auto rep = conjecture_hunt(k, true, 4, 0, std::nullopt);
        require(rep.digraphs_checked == independent_count,
                "hunt checked-count disagrees with an independent enumeration");
        for (const auto& cx : rep.counterexamples) {
            auto d = parse_digraph(cx.digraph_text);
            require(brute_oracle(d, k).value == cx.value,
                    "reported counterexample fails oracle re-verification");
            require(cx.value > rep.bound, "reported counterexample does not exceed the bound");
        }
    }
    auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
                 .count();
    require(s < 600, "exhaustive n=4 hunt took " + std::to_string(s) + " s (budget 600)");
}

std::string run_cli(const std::string& args, const std::string& out_path) {
    std::string cmd = "\"" + cli_path + "\" " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    (void)rc;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_determinism() {
    require(!cli_path.empty(), "CLI path missing (pass it as argv[1])");
    std::string dir = "/tmp/secdom_accept";
    int mkdir_rc = std::system(("mkdir -p " + dir).c_str());
    (void)mkdir_rc;
    std::string fx = dir + "/fixture.dg";
    {
        std::ofstream f(fx, std::ios::binary);
        f << serialize_digraph(separating_fixture());
    }
    auto a = run_cli("compute " + fx + " --param all --threads 1", dir + "/a.json");
    auto b = run_cli("compute " + fx + " --param all --threads 4", dir + "/b.json");
    auto c = run_cli("compute " + fx + " --param all --threads 1", dir + "/c.json");
    require(!a.empty() && a == b && a == c, "compute output varies across runs or thread hints");

    auto h1 = run_cli("hunt --conjecture iso --n 6 --samples 80 --seed 11 --threads 1",
                      dir + "/h1.json");
    auto h2 = run_cli("hunt --conjecture iso --n 6 --samples 80 --seed 11 --threads 2",
                      dir + "/h2.json");
    require(!h1.empty() && h1 == h2, "hunt output varies across runs or thread hints");

    auto g1 = run_cli("gen --family tournament --n 9 --seed 3", dir + "/g1.json");
    auto g2 = run_cli("gen --family tournament --n 9 --seed 3", dir + "/g2.json");
    require(!g1.empty() && g1 == g2, "gen output varies across runs");

    auto s1 = run_cli("survey " + fx + " --format tsv --threads 1", dir + "/s1.tsv");
    auto s2 = run_cli("survey " + fx + " --format tsv --threads 3", dir + "/s2.tsv");
    require(!s1.empty() && s1 == s2, "survey output varies across runs or thread hints");
}

struct Criterion {
    const char* name;
    std::function<void()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];

    const std::vector<Criterion> criteria{
        {"01 fixture values (2,2,3,4,5) under 1 s", criterion_fixture},
        {"02 path closed forms n=1..12 under 60 s", criterion_paths},
        {"03 cycle closed forms n=3..12 under 60 s", criterion_cycles},
        {"04 solver equals oracle on 200 random + all 4096 n=4 digraphs",
         criterion_oracle_equivalence},
        {"05 bound catalogue holds on all corpora", criterion_bound_catalogue},
        {"06 defense predicates: sufficiency, exactness, recorded counterexample",
         criterion_characterizations},
        {"07 equals-n and DOM=n-iff-bipartite characterizations", criterion_equals_n},
        {"08 tournament constructions within log bounds up to n=512",
         criterion_tournament_bounds},
        {"09 spider sharpness: gamma_iso = k+1 with zero slack", criterion_spider_sharpness},
        {"10 orientation constructions achieve their contracts",
         criterion_orientation_constructions},
        {"11 exhaustive n=4 conjecture hunt with verified report", criterion_hunt},
        {"12 byte-identical reruns across thread hints", criterion_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.fn();
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::printf("PASS  %s  (%lld ms)\n", c.name, static_cast<long long>(ms));
        } catch (const Failure& f) {
            ++failed;
            std::printf("FAIL  %s\n      %s\n", c.name, f.message.c_str());
        } catch (const std::exception& e) {
            ++failed;
            std::printf("FAIL  %s\n      unexpected exception: %s\n", c.name, e.what());
        }
        std::fflush(stdout);
    }
    if (failed == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
