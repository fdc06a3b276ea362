#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "acg/group.hpp"
#include "acg/index_set.hpp"

namespace testutil {

inline acg::IndexSet setof(int universe, std::initializer_list<int> xs) {
    acg::IndexSet s(universe);
    for (int x : xs) s.insert(x);
    return s;
}

inline acg::IndexSet setof(const acg::GroupSpec& g, std::initializer_list<int> xs) {
    return setof(g.order(), xs);
}

/// Element index from coordinates, for readable multi-factor test cases.
inline int at(const acg::GroupSpec& g, std::initializer_list<int> coords) {
    return g.index_of(std::vector<int>(coords));
}

inline acg::IndexSet mask_set(int universe, uint64_t mask) {
    acg::IndexSet s(universe);
    for (int i = 0; i < universe; ++i)
        if ((mask >> i) & 1) s.insert(i);
    return s;
}

/// Tiny deterministic generator for property tests (seedable, portable).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }
    int below(int n) { return int(next() % uint64_t(n)); }
    acg::IndexSet subset(int universe) { return mask_set(universe, next()); }
};

} // namespace testutil
