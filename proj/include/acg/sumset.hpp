#pragma once

#include "group.hpp"
#include "index_set.hpp"

namespace acg {

/// A + B = {a + b}.  Empty operands absorb: the sumset with an empty set
/// is empty.
inline IndexSet sumset(const GroupSpec& g, const IndexSet& a, const IndexSet& b) {
    IndexSet r(g.order());
    a.for_each([&](int x) { b.for_each([&](int y) { r.insert(g.add(x, y)); }); });
    return r;
}

/// A - B = {a - b}.
inline IndexSet diffset(const GroupSpec& g, const IndexSet& a, const IndexSet& b) {
    IndexSet r(g.order());
    a.for_each([&](int x) { b.for_each([&](int y) { r.insert(g.sub(x, y)); }); });
    return r;
}

inline IndexSet translate(const GroupSpec& g, const IndexSet& a, int t) {
    IndexSet r(g.order());
    a.for_each([&](int x) { r.insert(g.add(x, t)); });
    return r;
}

/// S + H for a subgroup H: the union of the H-cosets that meet S.
inline IndexSet saturate(const GroupSpec& g, const IndexSet& s, const Subgroup& h) {
    return sumset(g, s, h.members);
}

/// The maximal period pi(S) = {g : S + g = S}.  Always a subgroup;
/// equals G exactly for S empty or S = G.
inline Subgroup period(const GroupSpec& g, const IndexSet& s) {
    IndexSet m(g.order());
    for (int t = 0; t < g.order(); ++t)
        if (translate(g, s, t) == s) m.insert(t);
    return Subgroup{m};
}

/// Number of representations of c as a + b with a in A, b in B.
inline int rep_count(const GroupSpec& g, const IndexSet& a, const IndexSet& b, int c) {
    int cnt = 0;
    a.for_each([&](int x) {
        if (b.contains(g.sub(c, x))) ++cnt;
    });
    return cnt;
}

/// Minimum representation count over A + B; requires both sets non-empty.
inline int min_rep(const GroupSpec& g, const IndexSet& a, const IndexSet& b) {
    if (a.empty() || b.empty())
        throw PreconditionError("min_rep: operands must be non-empty");
    IndexSet s = sumset(g, a, b);
    int best = -1;
    s.for_each([&](int c) {
        int r = rep_count(g, a, b, c);
        if (best < 0 || r < best) best = r;
    });
    return best;
}

} // namespace acg
