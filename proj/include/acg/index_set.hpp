#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace acg {

/// Dense membership set over the index range [0, universe).
///
/// Every subset-valued quantity in the library (connection sets, subgroup
/// member sets, fragments) is one of these; groups are small, so O(1)
/// membership and word-parallel set algebra beat anything clever.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static IndexSet full(int universe) {
        IndexSet s(universe);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void insert(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }

    void erase(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    IndexSet& operator|=(const IndexSet& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    IndexSet& operator&=(const IndexSet& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    /// Set difference (remove o's members).
    IndexSet& operator-=(const IndexSet& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    IndexSet complement() const {
        IndexSet r(n_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    bool intersects(const IndexSet& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool is_subset_of(const IndexSet& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(int(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull ^ uint64_t(n_);
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Orders sets by their member sequences ({0,2} < {0,3} < {1}, {} first).
inline bool lex_members_less(const IndexSet& a, const IndexSet& b) {
    assert(a.universe() == b.universe());
    if (a == b) return false;
    // Find the smallest element on which the sets differ; the set holding it
    // comes first unless the other set has already run out of members.
    IndexSet sym = (a - b) | (b - a);
    int e = sym.first();
    bool in_a = a.contains(e);
    const IndexSet& other = in_a ? b : a;
    bool other_has_later = false;
    other.for_each([&](int i) {
        if (i > e) other_has_later = true;
    });
    if (in_a) return other_has_later;  // a's next member is smaller
    return !other_has_later;           // a is a proper prefix of b
}

struct IndexSetHash {
    size_t operator()(const IndexSet& s) const { return s.hash(); }
};

} // namespace acg
