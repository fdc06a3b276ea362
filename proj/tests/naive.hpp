// Test-only reference implementations.  Everything here computes straight
// from the definitions (subset scans, literal condition checks) and stays
// independent of the code paths it is used to check: subgroup enumeration
// by filtering all masks, connectivity by trying removal sets, families by
// literal witness scans over plain sumsets.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "acg/connectivity.hpp"
#include "acg/graph.hpp"
#include "acg/group.hpp"
#include "acg/index_set.hpp"
#include "acg/sumset.hpp"

namespace oracle {

using acg::GroupSpec;
using acg::IndexSet;
using acg::SimpleGraph;
using acg::Subgroup;

/// Every addition-closed subset containing 0, found by scanning all masks.
inline std::vector<IndexSet> brute_subgroups(const GroupSpec& g) {
    int n = g.order();
    std::vector<IndexSet> out;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask += 2) { // bit 0 always set
        IndexSet s(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.insert(i);
        if (acg::is_closed_subgroup(g, s)) out.push_back(s);
    }
    return out;
}

/// Vertex connectivity by deleting every vertex set of increasing size.
inline int brute_kappa_removal(const SimpleGraph& gr) {
    if (gr.n <= 1) return 0;
    for (int k = 0; k <= gr.n - 2; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            IndexSet c(gr.n);
            for (int i : pick) c.insert(i);
            if (acg::connected_components(gr, c).size() >= 2) return k;
            int i = k - 1;
            while (i >= 0 && pick[i] == gr.n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return gr.n - 1;
}

/// kappa as the minimum boundary |(S-A)\A| over non-empty A with
/// (S-A) u A != G; nullopt when no such A exists (complete graphs).
inline std::optional<int> brute_kappa_boundary(const GroupSpec& g, const IndexSet& s) {
    int n = g.order();
    IndexSet full = IndexSet::full(n);
    std::optional<int> best;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        IndexSet a(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) a.insert(i);
        IndexSet nb = acg::diffset(g, s, a);
        if ((nb | a) == full) continue;
        int score = (nb - a).count();
        if (!best || score < *best) best = score;
    }
    return best;
}

inline bool naive_in_h(const GroupSpec& g, const IndexSet& s, const Subgroup& h) {
    IndexSet reach = acg::sumset(g, s, acg::double_image(g).members);
    if (!reach.intersects(h.members)) return false;
    return acg::sumset(g, s, h.members) != IndexSet::full(g.order());
}

/// Literal scan for the weak two-coset family membership of L.
inline bool naive_in_l(const GroupSpec& g, const IndexSet& s, const Subgroup& l,
                       const std::vector<Subgroup>& subs) {
    IndexSet sat = acg::sumset(g, s, l.members);
    for (const auto& g0 : subs) {
        if (!l.members.is_subset_of(g0.members)) continue;
        int ratio = g0.order() / l.order();
        if (ratio % 2 != 0 || ratio <= 2) continue;
        bool hit = false;
        g0.members.for_each([&](int cand) {
            if (hit) return;
            IndexSet expected = g0.members.complement() | acg::translate(g, l.members, cand);
            if (sat == expected) hit = true;
        });
        if (hit) return true;
    }
    return false;
}

/// Literal scan of all (G0, g0) for the four certification conditions;
/// returns the first witness in (G0 order, member set, element) order.
inline std::optional<std::pair<Subgroup, int>> naive_lstar_witness(
    const GroupSpec& g, const IndexSet& s, const Subgroup& l,
    const std::vector<Subgroup>& subs) {
    IndexSet sat = acg::sumset(g, s, l.members);
    int exp_gl = acg::exponent_of_quotient_in(g, IndexSet::full(g.order()), l.members);
    for (const auto& g0 : subs) {
        if (!l.members.is_subset_of(g0.members)) continue;
        int ratio = g0.order() / l.order();
        if (ratio < 4 || (ratio & (ratio - 1)) != 0) continue;

        bool elementary_above = true;
        for (int x = 0; x < g.order() && elementary_above; ++x)
            if (!g0.members.contains(g.twice(x))) elementary_above = false;
        if (!elementary_above) continue;

        if (acg::exponent_of_quotient_in(g, g0.members, l.members) != exp_gl) continue;

        std::optional<int> found;
        g0.members.for_each([&](int cand) {
            if (found) return;
            // <g0> + L must be all of G0
            std::vector<int> gens = l.members.members();
            gens.push_back(cand);
            if (acg::subgroup_generated(g, gens).members != g0.members) return;
            IndexSet expected = g0.members.complement() | acg::translate(g, l.members, cand);
            if (sat != expected) return;
            IndexSet slice = s & acg::translate(g, l.members, cand);
            if (slice.empty()) return;
            int base = slice.first();
            std::vector<int> diff;
            slice.for_each([&](int x) { diff.push_back(g.sub(x, base)); });
            if (acg::subgroup_generated(g, diff).members != l.members) return;
            found = cand;
        });
        if (found) return std::make_pair(g0, *found);
    }
    return std::nullopt;
}

} // namespace oracle
