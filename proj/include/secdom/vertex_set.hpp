#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace secdom {

// Subset of a fixed vertex universe {0..n-1}, backed by 64-bit words.
// Universe size is part of the value; operations require matching universes.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(check_universe(n)), w_(word_count(n), 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int n, std::initializer_list<int> xs) {
        VertexSet s(n);
        for (int x : xs) s.add(x);
        return s;
    }

    static VertexSet of(int n, const std::vector<int>& xs) {
        VertexSet s(n);
        for (int x : xs) s.add(x);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::add: vertex out of range");
        w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::remove: vertex out of range");
        w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool is_full() const { return count() == n_; }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // set difference: removes o's members
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    VertexSet with(int v) const {
        VertexSet r = *this;
        r.add(v);
        return r;
    }

    VertexSet without(int v) const {
        VertexSet r = *this;
        r.remove(v);
        return r;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // Lexicographic order on the sorted index sequences of two equal-size
    // sets: the set owning the smallest element of the symmetric difference
    // comes first.
    bool lex_less(const VertexSet& o) const {
        assert(n_ == o.n_);
        assert(count() == o.count());
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t diff = w_[i] ^ o.w_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }

    // -1 when empty
    int first() const { return next(-1); }

    // smallest member > after, or -1
    int next(int after) const {
        int v = after + 1;
        if (v >= n_) return -1;
        std::size_t i = static_cast<std::size_t>(v) >> 6;
        std::uint64_t w = w_[i] >> (v & 63);
        if (w) return v + std::countr_zero(w);
        for (++i; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i << 6) + std::countr_zero(w_[i]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int v = static_cast<int>(i << 6) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    static int check_universe(int n) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
        return n;
    }
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void trim() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace secdom
