#include "secdom/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace secdom {

namespace {

struct Header {
    int n = 0;
    int m = 0;
};

// shared scanner for the two formats; kind is "digraph" or "graph",
// item is the expected payload-line tag ('a' or 'e')
std::pair<Header, std::vector<std::pair<int, int>>> scan(std::string_view text,
                                                         const std::string& kind, char item,
                                                         bool reject_loops) {
    Header hdr;
    bool have_header = false;
    std::vector<std::pair<int, int>> pairs;
    std::set<std::pair<int, int>> seen;
    int lineno = 0;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string k;
            if (!(ls >> k >> hdr.n >> hdr.m) || k != kind || hdr.n < 1 || hdr.m < 0)
                throw ParseError(lineno, "malformed header, expected `p " + kind + " <n> <m>`");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            have_header = true;
            continue;
        }
        if (tag == std::string(1, item)) {
            if (!have_header) throw ParseError(lineno, "line before header");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed line");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens");
            if (u < 1 || u > hdr.n || v < 1 || v > hdr.n)
                throw ParseError(lineno, "vertex index out of range");
            if (reject_loops && u == v) throw ParseError(lineno, "loop not allowed");
            auto key = item == 'e' ? std::pair{std::min(u, v), std::max(u, v)} : std::pair{u, v};
            if (!seen.insert(key).second) throw ParseError(lineno, "duplicate line");
            pairs.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError(lineno, "unrecognized line tag `" + tag + "`");
    }
    if (!have_header) throw ParseError(lineno, "missing header");
    if (static_cast<int>(pairs.size()) != hdr.m)
        throw ParseError(lineno, "header announces " + std::to_string(hdr.m) + " lines, found " +
                                     std::to_string(pairs.size()));
    return {hdr, pairs};
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
    auto [hdr, arcs] = scan(text, "digraph", 'a', true);
    return Digraph::from_arcs(hdr.n, arcs);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream os;
    os << "p digraph " << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) os << "a " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

UndirectedGraph parse_graph(std::string_view text) {
    auto [hdr, edges] = scan(text, "graph", 'e', true);
    return UndirectedGraph::from_edges(hdr.n, edges);
}

std::string serialize_graph(const UndirectedGraph& g) {
    std::ostringstream os;
    os << "p graph " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace secdom
