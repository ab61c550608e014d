#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpd {

// Fixed-width bit vector over vertex indices 0..n-1. The currency of all
// solvers: subsets are built, intersected and popcounted as machine words.
class vertex_set {
public:
    vertex_set() = default;

    explicit vertex_set(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("vertex_set: negative universe");
    }

    vertex_set(int universe, std::initializer_list<int> bits) : vertex_set(universe) {
        for (int b : bits) set(b);
    }

    static vertex_set full(int universe) {
        vertex_set s(universe);
        for (auto& word : s.w_) word = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1ULL;
    }

    void set(int i) {
        check(i);
        w_[i >> 6] |= 1ULL << (i & 63);
    }

    void reset(int i) {
        check(i);
        w_[i >> 6] &= ~(1ULL << (i & 63));
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0ULL); }

    int count() const {
        int c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }

    bool empty() const {
        for (auto word : w_)
            if (word) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // Lowest set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // Lowest set bit strictly greater than i, or -1.
    int next(int i) const {
        int j = i + 1;
        if (j >= n_) return -1;
        std::size_t word = static_cast<std::size_t>(j) >> 6;
        std::uint64_t cur = w_[word] & (~0ULL << (j & 63));
        while (true) {
            if (cur) return static_cast<int>(word * 64 + std::countr_zero(cur));
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v != -1; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    vertex_set& operator|=(const vertex_set& o) {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    vertex_set& operator&=(const vertex_set& o) {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    vertex_set& operator-=(const vertex_set& o) {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
    friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
    friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

    vertex_set complement() const {
        vertex_set s(*this);
        for (auto& word : s.w_) word = ~word;
        s.trim();
        return s;
    }

    bool intersects(const vertex_set& o) const {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const vertex_set& o) const {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const vertex_set& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const vertex_set& o) const { return !(*this == o); }

    bool operator<(const vertex_set& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return w_ < o.w_;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first_item = true;
        for_each([&](int v) {
            if (!first_item) s += ",";
            s += std::to_string(v);
            first_item = false;
        });
        return s + "}";
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("vertex_set: index " + std::to_string(i));
    }
    void require_same(const vertex_set& o) const {
        if (n_ != o.n_) throw std::invalid_argument("vertex_set: mismatched universes");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (~0ULL >> (64 - (n_ & 63)));
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace gpd
