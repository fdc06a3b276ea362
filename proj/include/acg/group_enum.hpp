#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "group.hpp"

namespace acg {

namespace detail {

inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace detail

/// One factor list per isomorphism type of abelian group of order <= max:
/// for each order, partitions of every prime exponent combine into
/// prime-power cyclic factors.  Deterministically ordered by (order,
/// factor sequence).
inline std::vector<std::vector<int>> abelian_group_types(int max_order) {
    std::vector<std::vector<int>> out;
    for (int n = 1; n <= max_order; ++n) {
        // factor n
        std::vector<std::pair<int, int>> pe; // (prime, exponent)
        int m = n;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                pe.push_back({p, e});
            }
        }
        if (m > 1) pe.push_back({m, 1});

        std::vector<std::vector<int>> combos{{}};
        for (auto [p, e] : pe) {
            std::vector<std::vector<int>> next;
            for (const auto& parts : detail::partitions_of(e)) {
                std::vector<int> powers;
                for (int part : parts) {
                    int q = 1;
                    for (int i = 0; i < part; ++i) q *= p;
                    powers.push_back(q);
                }
                for (const auto& base : combos) {
                    std::vector<int> f = base;
                    f.insert(f.end(), powers.begin(), powers.end());
                    next.push_back(std::move(f));
                }
            }
            combos = std::move(next);
        }
        for (auto& f : combos) {
            std::sort(f.begin(), f.end(), std::greater<int>());
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        long long pa = 1, pb = 1;
        for (int x : a) pa *= x;
        for (int x : b) pb *= x;
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

} // namespace acg
