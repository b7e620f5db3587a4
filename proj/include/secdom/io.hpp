#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "secdom/digraph.hpp"
#include "secdom/undirected.hpp"

namespace secdom {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Digraph file format (UTF-8, LF):
//   c <comment>
//   p digraph <n> <m>
//   a <u> <v>            (1-indexed, m lines)
// Canonical serialization sorts arc lines by (u, v) and carries no comments.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

// Undirected variant: header `p graph <n> <m>`, edge lines `e <u> <v>`.
UndirectedGraph parse_graph(std::string_view text);
std::string serialize_graph(const UndirectedGraph& g);

std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);  // 16 hex chars of fnv1a64

}  // namespace secdom
