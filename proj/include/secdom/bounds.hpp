#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secdom/digraph.hpp"
#include "secdom/solver.hpp"

namespace secdom {

// Exact lengths in arcs by dynamic programming over vertex subsets; capped at
// n <= 20. A symmetric arc pair counts as a directed 2-cycle; 0 means acyclic.
int longest_dipath_length(const Digraph& d);
int longest_dicycle_length(const Digraph& d);

// every vertex has out-degree 0 or in-degree 0; exactly then the three
// secure out-domination parameters all equal n
bool equals_n_characterization(const Digraph& d);

struct BoundEntry {
    enum class Relation { LessEq, Eq };
    std::string id;
    Relation relation = Relation::LessEq;
    bool applicable = false;
    std::string reason;       // "applies" or the failed guards
    long long lhs = 0;
    long long rhs = 0;
    bool holds = true;        // vacuously true when inapplicable
    long long slack = 0;      // rhs - lhs
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    bool all_hold() const;
    const BoundEntry* first_violation() const;
};

// One entry per catalogued inequality or equality characterization, each with
// an explicit machine-checked applicability guard. A violated applicable
// entry is a finding, never to be swallowed: callers abort with the
// serialized digraph.
BoundReport bound_report(const Digraph& d, const std::map<ParamKind, SolveResult>& params);

struct CounterexampleRecord {
    std::string digraph_text;
    int value = 0;
};

struct HuntReport {
    ParamKind kind{};
    std::string mode;  // "exhaustive" or "sampled"
    int n = 0;
    std::optional<std::uint64_t> seed;
    int samples = 0;                      // draws in sampled mode
    std::uint64_t digraphs_checked = 0;   // digraphs with min degree >= 1 evaluated
    int bound = 0;                        // ceil(2n/3)
    std::vector<CounterexampleRecord> counterexamples;
};

// Scans digraphs with min degree >= 1 for violations of the two-thirds
// conjecture on gamma_oso / gamma_iso. Exhaustive mode enumerates all
// 2^(n(n-1)) labeled digraphs (n <= 5); sampled mode draws seeded random
// digraphs. Every counterexample is re-verified with brute_oracle before it
// is reported.
HuntReport conjecture_hunt(ParamKind kind, bool exhaustive, int n, int samples,
                           std::optional<std::uint64_t> seed, const SolverConfig& cfg = {});

}  // namespace secdom
