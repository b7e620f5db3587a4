#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "secdom/bounds.hpp"
#include "secdom/constructions.hpp"
#include "secdom/families.hpp"
#include "secdom/io.hpp"
#include "secdom/orientations.hpp"
#include "secdom/solver.hpp"
#include "secdom/verifiers.hpp"

using json = nlohmann::json;
using namespace secdom;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

struct Output {
    std::string command;       // canonical echo, execution hints excluded
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    json results = json::object();
    std::vector<std::string> tsv;  // one row per line, tab-joined fields
    int exit_code = kExitOk;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json indices_1(const VertexSet& s) {
    json a = json::array();
    s.for_each([&](int v) { a.push_back(v + 1); });
    return a;
}

std::string joined_1(const VertexSet& s) {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
    });
    return out.empty() ? "-" : out;
}

json defense_json(const DefenseWitness& w) {
    json m = json::object();
    for (std::size_t v = 0; v < w.defender.size(); ++v)
        if (w.defender[v] >= 0) m[std::to_string(v + 1)] = w.defender[v] + 1;
    return m;
}

json solve_json(const SolveResult& r) {
    json j;
    j["value"] = r.value;
    j["witness"] = indices_1(r.witness);
    j["forced"] = indices_1(r.forced);
    j["nodes_explored"] = r.nodes_explored;
    if (!r.defense.defender.empty()) j["defenders"] = defense_json(r.defense);
    return j;
}

ParamKind need_param(const std::string& s) {
    auto k = param_from_string(s);
    if (!k) throw std::runtime_error("unknown parameter: " + s);
    return *k;
}

VertexSet parse_index_set(const std::string& text, int n) {
    VertexSet s(n);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (...) {
            throw std::runtime_error("bad vertex index: " + tok);
        }
        if (v < 1 || v > n) throw std::runtime_error("vertex index out of range: " + tok);
        s.add(v - 1);
    }
    return s;
}

json bound_entry_json(const BoundEntry& e) {
    json j;
    j["id"] = e.id;
    j["relation"] = e.relation == BoundEntry::Relation::LessEq ? "le" : "eq";
    j["applicable"] = e.applicable;
    j["reason"] = e.reason;
    if (e.applicable) {
        j["lhs"] = e.lhs;
        j["rhs"] = e.rhs;
        j["holds"] = e.holds;
        j["slack"] = e.slack;
    }
    return j;
}

// ---- commands ----

Output cmd_compute(const std::string& file, const std::string& param, int cap, int threads) {
    Output out;
    auto d = parse_digraph(read_file(file));
    out.input_digest = digest_hex(serialize_digraph(d));
    out.command = "compute --param " + (param == "all" ? std::string("all")
                                                       : std::string(param_key(need_param(param)))) +
                  " --cap " + std::to_string(cap);
    SolverConfig cfg;
    cfg.size_cap = cap;
    cfg.thread_hint = threads;
    json params = json::object();
    if (param == "all") {
        for (auto& [k, r] : solve_all(d, cfg)) {
            params[param_key(k)] = solve_json(r);
            out.tsv.push_back(std::string(param_key(k)) + '\t' + std::to_string(r.value) + '\t' +
                              joined_1(r.witness) + '\t' + joined_1(r.forced) + '\t' +
                              std::to_string(r.nodes_explored));
        }
    } else {
        auto r = solve_min(d, need_param(param), cfg);
        params[param_key(r.kind)] = solve_json(r);
        out.tsv.push_back(std::string(param_key(r.kind)) + '\t' + std::to_string(r.value) + '\t' +
                          joined_1(r.witness) + '\t' + joined_1(r.forced) + '\t' +
                          std::to_string(r.nodes_explored));
    }
    out.results["params"] = params;
    return out;
}

Output cmd_verify(const std::string& file, const std::string& set_text, const std::string& kind_text) {
    Output out;
    auto d = parse_digraph(read_file(file));
    out.input_digest = digest_hex(serialize_digraph(d));
    auto kind = set_kind_from_string(kind_text);
    if (!kind) throw std::runtime_error("unknown set kind: " + kind_text);
    VertexSet s = parse_index_set(set_text, d.order());
    out.command = std::string("verify --set ") + joined_1(s) + " --kind " + set_kind_key(*kind);

    json r;
    r["kind"] = set_kind_key(*kind);
    r["set"] = indices_1(s);
    if (is_secure_kind(*kind)) {
        auto chk = is_secure_set(d, s, *kind);
        r["valid"] = chk.valid;
        if (chk.valid) {
            r["defenders"] = defense_json(chk.defense);
            out.tsv.push_back(std::string(set_kind_key(*kind)) + "\tvalid\t-");
        } else {
            json f;
            f["vertex"] = chk.failed_vertex + 1;
            f["reason"] = chk.failure == SecureCheck::Failure::NotDominated ? "not dominated"
                                                                            : "undefended";
            r["first_failure"] = f;
            out.exit_code = kExitNegative;
            out.tsv.push_back(std::string(set_kind_key(*kind)) + "\tinvalid\tv" +
                              std::to_string(chk.failed_vertex + 1) + ' ' +
                              f["reason"].get<std::string>());
        }
    } else {
        bool ok = is_set(d, s, *kind);
        r["valid"] = ok;
        if (!ok) {
            // locate the first vertex violating the plain condition
            int bad = -1;
            for (int v = 0; v < d.order() && bad == -1; ++v) {
                if (s.contains(v)) continue;
                bool covered = true;
                switch (*kind) {
                    case SetKind::OutDominating: covered = d.in(v).intersects(s); break;
                    case SetKind::InDominating: covered = d.out(v).intersects(s); break;
                    case SetKind::UnderlyingDominating:
                        covered = d.in(v).intersects(s) || d.out(v).intersects(s);
                        break;
                    case SetKind::TwinDominating:
                        covered = d.in(v).intersects(s) && d.out(v).intersects(s);
                        break;
                    default: break;
                }
                if (!covered) bad = v;
            }
            json f;
            f["vertex"] = bad + 1;
            f["reason"] = "not dominated";
            r["first_failure"] = f;
            out.exit_code = kExitNegative;
            out.tsv.push_back(std::string(set_kind_key(*kind)) + "\tinvalid\tv" +
                              std::to_string(bad + 1) + " not dominated");
        } else {
            out.tsv.push_back(std::string(set_kind_key(*kind)) + "\tvalid\t-");
        }
    }
    out.results = r;
    return out;
}

Output cmd_survey(const std::string& file, int cap, int threads) {
    Output out;
    auto d = parse_digraph(read_file(file));
    out.input_digest = digest_hex(serialize_digraph(d));
    out.command = "survey --cap " + std::to_string(cap);
    SolverConfig cfg;
    cfg.size_cap = cap;
    cfg.thread_hint = threads;
    auto all = solve_all(d, cfg);
    json params = json::object();
    for (auto& [k, r] : all) {
        params[param_key(k)] = solve_json(r);
        out.tsv.push_back(std::string("param\t") + param_key(k) + '\t' + std::to_string(r.value));
    }
    auto rep = bound_report(d, all);
    json bounds = json::array();
    for (const auto& e : rep.entries) {
        bounds.push_back(bound_entry_json(e));
        std::string row = "bound\t" + e.id + '\t' + (e.applicable ? "yes" : "no");
        if (e.applicable)
            row += '\t' + std::to_string(e.lhs) + '\t' + std::to_string(e.rhs) + '\t' +
                   (e.holds ? "holds" : "VIOLATED") + '\t' + std::to_string(e.slack);
        out.tsv.push_back(row);
    }
    out.results["params"] = params;
    out.results["bounds"] = bounds;
    out.results["all_hold"] = rep.all_hold();
    if (const BoundEntry* bad = rep.first_violation()) {
        out.results["violation"] = bound_entry_json(*bad);
        out.results["counterexample"] = serialize_digraph(d);
        out.exit_code = kExitNegative;
    }
    return out;
}

Output cmd_family(const std::string& family, int n, int k, const std::string& param, int cap,
                  int threads) {
    Output out;
    ParamKind kind = need_param(param);
    SolverConfig cfg;
    cfg.size_cap = cap;
    cfg.thread_hint = threads;

    Digraph d = Digraph::from_arcs(1, {});
    VertexSet witness;
    int value = 0;
    if (family == "path" || family == "cycle") {
        if (n < 1) throw std::runtime_error("--n is required and positive");
        auto recipe = family == "path" ? path_witness(kind, n) : cycle_witness(kind, n);
        d = family == "path" ? dipath(n) : dicycle(n);
        witness = recipe.set;
        value = recipe.claimed_size;
    } else if (family == "spider") {
        int legs = k > 0 ? k : (n > 0 && n % 2 == 1 ? (n - 1) / 2 : 0);
        if (legs < 1) throw std::runtime_error("spider needs --k (or odd --n)");
        if (kind != ParamKind::GammaIso)
            throw std::runtime_error("spider has a closed form for gamma_iso only");
        d = spider(legs);
        witness = spider_isods_witness(legs);
        value = legs + 1;
        n = d.order();
    } else if (family == "transtour") {
        if (n < 2) throw std::runtime_error("--n must be at least 2");
        d = transitive_tournament(n);
        if (kind == ParamKind::GammaOs) {
            witness = VertexSet::of(n, {0});
            value = 1;
        } else if (kind == ParamKind::GammaIso) {
            witness = VertexSet::of(n, {0, n - 1});
            value = 2;
        } else if (kind == ParamKind::GammaSo) {
            witness = tournament_sods(d);
            value = 2;
        } else {
            throw std::runtime_error("transtour has closed forms for gamma_os, gamma_so, gamma_iso");
        }
    } else {
        throw std::runtime_error("unknown family: " + family);
    }
    out.input_digest = digest_hex(serialize_digraph(d));
    out.command = "family --family " + family + " --n " + std::to_string(d.order()) + " --param " +
                  param_key(kind);

    SetKind sk = set_kind_for_param(kind);
    bool verifies = is_secure_kind(sk) ? is_secure_set(d, witness, sk).valid
                                       : is_set(d, witness, sk);
    out.results["family"] = family;
    out.results["n"] = d.order();
    out.results["param"] = param_key(kind);
    out.results["closed_form"] = value;
    out.results["witness"] = indices_1(witness);
    out.results["verifies"] = verifies;
    std::string solver_field = "-";
    if (d.order() <= 12) {
        int solved = solve_min(d, kind, cfg).value;
        out.results["solver_value"] = solved;
        out.results["solver_confirms"] = solved == value;
        solver_field = std::to_string(solved);
    }
    if (!verifies) out.exit_code = kExitNegative;
    out.tsv.push_back(family + '\t' + std::to_string(d.order()) + '\t' + param_key(kind) + '\t' +
                      std::to_string(value) + '\t' + joined_1(witness) + '\t' +
                      (verifies ? "verifies" : "INVALID") + '\t' + solver_field);
    return out;
}

Output cmd_orient(const std::string& file, const std::string& param, const std::string& mode,
                  int cap, int threads) {
    Output out;
    auto g = parse_graph(read_file(file));
    out.input_digest = digest_hex(serialize_graph(g));
    ParamKind kind = need_param(param);
    out.command = "orient --param " + std::string(param_key(kind)) + " --mode " + mode;
    SolverConfig cfg;
    cfg.size_cap = cap;
    cfg.thread_hint = threads;
    auto sp = spectrum(g, kind, cfg);
    out.results["param"] = param_key(kind);
    out.results["mode"] = mode;
    out.results["dom"] = sp.dom;
    out.results["DOM"] = sp.DOM;
    out.results["achieved"] = sp.achieved;
    out.results["is_interval"] = sp.is_interval;
    out.results["orientations_evaluated"] = sp.orientations_evaluated;
    if (mode == "min")
        out.results["value"] = sp.dom;
    else if (mode == "max")
        out.results["value"] = sp.DOM;
    std::string achieved;
    for (int v : sp.achieved) {
        if (!achieved.empty()) achieved += ',';
        achieved += std::to_string(v);
    }
    out.tsv.push_back(std::string(param_key(kind)) + '\t' + std::to_string(sp.dom) + '\t' +
                      std::to_string(sp.DOM) + '\t' + achieved + '\t' +
                      (sp.is_interval ? "interval" : "gapped") + '\t' +
                      std::to_string(sp.orientations_evaluated));
    return out;
}

Output cmd_hunt(const std::string& conjecture, int n, bool exhaustive, int samples,
                std::optional<std::uint64_t> seed, int cap, int threads) {
    Output out;
    ParamKind kind;
    if (conjecture == "oso")
        kind = ParamKind::GammaOso;
    else if (conjecture == "iso")
        kind = ParamKind::GammaIso;
    else
        throw std::runtime_error("--conjecture must be oso or iso");
    SolverConfig cfg;
    cfg.size_cap = cap;
    cfg.thread_hint = threads;
    auto rep = conjecture_hunt(kind, exhaustive, n, samples, seed, cfg);
    out.command = "hunt --conjecture " + conjecture + " --n " + std::to_string(n) +
                  (exhaustive ? " --exhaustive"
                              : " --samples " + std::to_string(samples) + " --seed " +
                                    std::to_string(seed.value_or(0)));
    out.input_digest = digest_hex(out.command);
    out.seed = rep.seed;
    out.results["conjecture"] = param_key(kind);
    out.results["mode"] = rep.mode;
    out.results["n"] = rep.n;
    out.results["bound"] = rep.bound;
    out.results["digraphs_checked"] = rep.digraphs_checked;
    if (!exhaustive) out.results["samples"] = rep.samples;
    json cxs = json::array();
    for (const auto& cx : rep.counterexamples) {
        json c;
        c["digraph"] = cx.digraph_text;
        c["value"] = cx.value;
        cxs.push_back(c);
    }
    out.results["counterexamples"] = cxs;
    out.tsv.push_back(std::string(param_key(kind)) + '\t' + rep.mode + '\t' + std::to_string(n) +
                      '\t' + std::to_string(rep.bound) + '\t' +
                      std::to_string(rep.digraphs_checked) + '\t' +
                      std::to_string(rep.counterexamples.size()));
    return out;
}

Output cmd_gen(const std::string& family_text, int n, int k, std::optional<std::uint64_t> seed,
               double arc_prob, bool allow_symmetric, const std::string& out_file) {
    Output out;
    auto fam = family_from_string(family_text);
    if (!fam) throw std::runtime_error("unknown family: " + family_text);
    int size = *fam == Family::Spider ? (k > 0 ? k : (n > 0 && n % 2 == 1 ? (n - 1) / 2 : 0)) : n;
    if (size < 1) throw std::runtime_error("missing or invalid size (--n / --k)");
    FamilyParams params;
    params.seed = seed;
    params.arc_prob = arc_prob;
    params.allow_symmetric = allow_symmetric;
    auto d = gen_family(*fam, size, params);
    auto text = serialize_digraph(d);
    out.input_digest = digest_hex(text);
    bool random = *fam == Family::RandomTournament || *fam == Family::RandomDigraph;
    out.command = "gen --family " + std::string(family_key(*fam)) +
                  (*fam == Family::Spider ? " --k " + std::to_string(size)
                                          : " --n " + std::to_string(size)) +
                  (random ? " --seed " + std::to_string(*seed) : "");
    if (random) out.seed = seed;
    out.results["family"] = family_key(*fam);
    out.results["n"] = d.order();
    out.results["m"] = d.arc_count();
    out.results["digraph"] = text;
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write file: " + out_file);
        f << text;
        out.results["file"] = out_file;
    }
    out.tsv.push_back(std::string(family_key(*fam)) + '\t' + std::to_string(d.order()) + '\t' +
                      std::to_string(d.arc_count()) + '\t' + out.input_digest);
    return out;
}

void emit(const Output& out, const std::string& format) {
    if (format == "tsv") {
        for (const auto& row : out.tsv) std::cout << row << '\n';
        return;
    }
    json top;
    top["version"] = kVersion;
    top["command"] = out.command;
    top["input_digest"] = out.input_digest;
    if (out.seed) top["seed"] = *out.seed;
    top["results"] = out.results;
    std::cout << top.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secdom: exact secure-domination laboratory for digraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    std::string format = "json";
    int threads = 1;
    app.add_option("--format", format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--threads", threads, "worker hint (results never depend on it)");

    std::string file, param = "all", set_text, kind_text, family, mode = "spectrum", conjecture;
    std::string out_file;
    int n = 0, k = 0, cap = 26, samples = 0;
    bool exhaustive = false, no_symmetric = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t seed_raw = 0;
    double arc_prob = 0.5;

    auto* compute = app.add_subcommand("compute", "exact parameter values of a digraph");
    compute->add_option("file", file, "digraph file")->required();
    compute->add_option("--param", param, "parameter (gamma+, gamma-, s, twin, so, os, oso, iso, all)");
    compute->add_option("--cap", cap, "exact-solving size cap");

    auto* verify = app.add_subcommand("verify", "check a candidate set against a definition");
    verify->add_option("file", file, "digraph file")->required();
    verify->add_option("--set", set_text, "comma-separated 1-indexed vertices")->required();
    verify->add_option("--kind", kind_text, "set kind (out-dominating, twin, sds, sods, osds, osods, isods, ...)")
        ->required();

    auto* survey = app.add_subcommand("survey", "all parameters plus the bound catalogue");
    survey->add_option("file", file, "digraph file")->required();
    survey->add_option("--cap", cap, "exact-solving size cap");

    auto* family_cmd = app.add_subcommand("family", "closed-form witnesses on named families");
    family_cmd->add_option("--family", family, "path | cycle | spider | transtour")->required();
    family_cmd->add_option("--n", n, "vertex count");
    family_cmd->add_option("--k", k, "spider leg count");
    family_cmd->add_option("--param", param, "parameter")->required();
    family_cmd->add_option("--cap", cap, "exact-solving size cap");

    auto* orient = app.add_subcommand("orient", "parameter spectrum over all orientations");
    orient->add_option("file", file, "undirected graph file")->required();
    orient->add_option("--param", param, "parameter")->required();
    orient->add_option("--mode", mode, "min | max | spectrum")
        ->check(CLI::IsMember({"min", "max", "spectrum"}));
    orient->add_option("--cap", cap, "exact-solving size cap");

    auto* hunt = app.add_subcommand("hunt", "search for conjecture counterexamples");
    hunt->add_option("--conjecture", conjecture, "oso | iso")->required();
    hunt->add_option("--n", n, "digraph order")->required();
    hunt->add_flag("--exhaustive", exhaustive, "scan all labeled digraphs (n <= 5)");
    hunt->add_option("--samples", samples, "number of sampled digraphs");
    hunt->add_option("--seed", seed_raw, "sampling seed");
    hunt->add_option("--cap", cap, "exact-solving size cap");

    auto* gen = app.add_subcommand("gen", "generate a family digraph file");
    gen->add_option("--family", family, "dipath | dicycle | transtour | spider | tournament | random")
        ->required();
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--k,--n-k", k, "spider leg count");
    gen->add_option("--seed", seed_raw, "seed for random families");
    gen->add_option("--arc-prob", arc_prob, "arc probability for random digraphs");
    gen->add_flag("--no-symmetric", no_symmetric, "forbid opposite arc pairs in random digraphs");
    gen->add_option("--out", out_file, "write the digraph here as well");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (hunt->count("--seed") || gen->count("--seed")) seed = seed_raw;

    try {
        Output out;
        if (*compute)
            out = cmd_compute(file, param, cap, threads);
        else if (*verify)
            out = cmd_verify(file, set_text, kind_text);
        else if (*survey)
            out = cmd_survey(file, cap, threads);
        else if (*family_cmd)
            out = cmd_family(family, n, k, param, cap, threads);
        else if (*orient)
            out = cmd_orient(file, param, mode, cap, threads);
        else if (*hunt)
            out = cmd_hunt(conjecture, n, exhaustive, samples, seed, cap, threads);
        else if (*gen)
            out = cmd_gen(family, n, k, seed, arc_prob, !no_symmetric, out_file);
        emit(out, format);
        return out.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
