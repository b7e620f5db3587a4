#include "secdom/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace secdom {

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 1) throw std::invalid_argument("Digraph: order must be at least 1");
    Digraph d(n);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Digraph: arc (" + std::to_string(u + 1) + "," +
                                        std::to_string(v + 1) + ") out of range");
        if (u == v)
            throw std::invalid_argument("Digraph: loop arc at vertex " + std::to_string(u + 1));
        if (!d.out_[static_cast<std::size_t>(u)].contains(v)) {
            d.out_[static_cast<std::size_t>(u)].add(v);
            d.in_[static_cast<std::size_t>(v)].add(u);
            ++d.m_;
        }
    }
    return d;
}

Digraph Digraph::reversed() const {
    Digraph r(n_);
    r.out_ = in_;
    r.in_ = out_;
    r.m_ = m_;
    return r;
}

Digraph Digraph::symmetric_closure() const {
    Digraph r(n_);
    for (int u = 0; u < n_; ++u) {
        r.out_[static_cast<std::size_t>(u)] = out(u) | in(u);
        r.in_[static_cast<std::size_t>(u)] = r.out_[static_cast<std::size_t>(u)];
    }
    r.m_ = 0;
    for (int u = 0; u < n_; ++u) r.m_ += r.out_[static_cast<std::size_t>(u)].count();
    return r;
}

bool Digraph::has_symmetric_arcs() const {
    for (int u = 0; u < n_; ++u)
        if (out(u).intersects(in(u))) return true;
    return false;
}

bool Digraph::is_symmetric() const {
    for (int u = 0; u < n_; ++u)
        if (out(u) != in(u)) return false;
    return true;
}

bool Digraph::is_tournament() const {
    if (has_symmetric_arcs()) return false;
    return 2 * m_ == n_ * (n_ - 1);
}

bool Digraph::weakly_connected() const {
    VertexSet seen(n_);
    seen.add(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet nbrs = out(u) | in(u);
        nbrs -= seen;
        nbrs.for_each([&](int v) {
            seen.add(v);
            stack.push_back(v);
        });
    }
    return seen.is_full();
}

DegreeStats Digraph::degree_stats() const {
    DegreeStats s;
    s.min_out = n_;
    s.min_in = n_;
    for (int u = 0; u < n_; ++u) {
        int dout = out_degree(u), din = in_degree(u);
        s.min_out = std::min(s.min_out, dout);
        s.min_in = std::min(s.min_in, din);
        s.max_out = std::max(s.max_out, dout);
        s.max_in = std::max(s.max_in, din);
    }
    s.min_degree = std::min(s.min_out, s.min_in);
    return s;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) this->out(u).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
}

}  // namespace secdom
