#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "group.hpp"
#include "index_set.hpp"
#include "sumset.hpp"

namespace acg {

/// Which subgroup family an entry belongs to.  H entries give single-coset
/// fragments; L entries give two-coset fragments; Lstar is the certified
/// sub-family of L whose minimizer controls the branch selection.
enum class FamilyTag { H, L, Lstar };

/// Witness data for an L / Lstar entry: the subgroup lying above L whose
/// complement S+L covers, and a representative of the single L-coset of
/// S+L inside it.  Serialized as (G0, g0) in reports.
struct LWitness {
    Subgroup upper;
    int rep = 0;
};

struct FamilyEntry {
    Subgroup subgroup;
    int score = 0; // |S+K| - |K|
    FamilyTag family = FamilyTag::H;
    std::optional<LWitness> witness;
};

enum class Branch { Complete, Degree, Eta, LambdaStar };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Complete: return "complete";
        case Branch::Degree: return "degree";
        case Branch::Eta: return "eta";
        case Branch::LambdaStar: return "lambda-star";
    }
    return "?";
}

struct KappaReport {
    GroupSpec group;
    IndexSet subset;
    int kappa = 0;
    Branch branch = Branch::Degree;
    std::optional<int> eta;
    std::optional<int> lambda;
    std::optional<int> lambda_star;
    std::optional<FamilyEntry> witness;
    std::optional<Fragment> fragment;
};

struct CorollaryCheck {
    bool applicable = false;
    bool holds = true;
};

struct CorollaryChecks {
    CorollaryCheck half_degree;      // connected: kappa >= |S|/2
    CorollaryCheck smallest_prime;   // connected: kappa >= min(|S|-1, p)
    CorollaryCheck below_degree_iff; // kappa < |S|  <=>  some K scores <= |S|-1
    CorollaryCheck doubles_simple;   // S meets 2*G: kappa equals the plain minimum
};

namespace detail {

inline std::optional<int> opt_min(std::optional<int> a, int b) {
    if (!a || b < *a) return b;
    return a;
}

inline void sort_entries(std::vector<FamilyEntry>& v) {
    std::sort(v.begin(), v.end(), [](const FamilyEntry& a, const FamilyEntry& b) {
        if (a.score != b.score) return a.score < b.score;
        if (a.subgroup.order() != b.subgroup.order())
            return a.subgroup.order() < b.subgroup.order();
        return lex_members_less(a.subgroup.members, b.subgroup.members);
    });
}

} // namespace detail

/// Single-coset fragment for H in the coset-bound family: a coset g+H with
/// 2g in S+H, whose boundary has size exactly |S+H| - |H|.
inline Fragment coset_fragment(const GroupSpec& g, const IndexSet& s, const Subgroup& h) {
    IndexSet sat = saturate(g, s, h);
    if (sat == IndexSet::full(g.order()))
        throw PreconditionError("coset_fragment: S+H covers the whole group");
    int anchor = -1;
    for (int x = 0; x < g.order(); ++x) {
        if (sat.contains(g.twice(x))) {
            anchor = x;
            break;
        }
    }
    if (anchor < 0)
        throw PreconditionError("coset_fragment: no element g with 2g in S+H");
    Fragment f = make_fragment(g, s, translate(g, h.members, anchor));
    if (f.boundary.count() != sat.count() - h.order() || f.outside.empty())
        throw TheoremViolationError("coset_fragment: boundary size mismatch");
    return f;
}

/// Two-coset fragment for an L-family witness (L, G0, g0): the union
/// (g+L) u (g+g0+L) for g in G0 \ L with 2g in L.  Its boundary is exactly
/// G \ G0, of size |S+L| - |L|.
inline Fragment two_coset_fragment(const GroupSpec& g, const IndexSet& s, const Subgroup& l,
                                   const Subgroup& g0_sub, int g0) {
    if (!l.members.is_subset_of(g0_sub.members) || !g0_sub.contains(g0))
        throw PreconditionError("two_coset_fragment: witness chain violated");
    int ratio = g0_sub.order() / l.order();
    if (ratio % 2 != 0 || ratio <= 2)
        throw PreconditionError("two_coset_fragment: |G0/L| must be even and larger than 2");
    IndexSet sat = saturate(g, s, l);
    IndexSet expected = g0_sub.members.complement() | translate(g, l.members, g0);
    if (sat != expected)
        throw PreconditionError("two_coset_fragment: S+L is not (G \\ G0) u (g0+L)");

    int half = -1;
    for (int x = 0; x < g.order(); ++x) {
        if (g0_sub.contains(x) && !l.contains(x) && l.contains(g.twice(x))) {
            half = x;
            break;
        }
    }
    if (half < 0)
        throw PreconditionError("two_coset_fragment: no g in G0 \\ L with 2g in L");

    IndexSet a = translate(g, l.members, half) | translate(g, l.members, g.add(half, g0));
    Fragment f = make_fragment(g, s, a);
    if (f.boundary.count() != sat.count() - l.order() || f.outside.empty())
        throw TheoremViolationError("two_coset_fragment: boundary size mismatch");
    return f;
}

/// Precomputed subgroup lattice plus per-instance family scans for a fixed
/// group.  Construction enumerates every subgroup with its coset table and
/// the chains that can ever carry an L / Lstar witness; the per-subset
/// operations then run on bitmask algebra alone.
class ConnectivityAnalyzer {
public:
    explicit ConnectivityAnalyzer(GroupSpec group, int max_group_order = 512)
        : g_(std::move(group)), full_(IndexSet::full(g_.order())) {
        subs_ = all_subgroups(g_, max_group_order);
        int nsub = int(subs_.size());
        cosets_.reserve(nsub);
        complements_.reserve(nsub);
        for (const auto& h : subs_) {
            cosets_.emplace_back(g_, h);
            complements_.push_back(h.members.complement());
        }

        Subgroup dbl = double_image(g_);
        dbl_id_ = find_subgroup_id(dbl.members);

        exp_full_.resize(nsub);
        elementary_above_.resize(nsub);
        for (int i = 0; i < nsub; ++i) {
            exp_full_[i] = exponent_of_quotient_in(g_, full_, subs_[i].members);
            elementary_above_[i] = subs_[dbl_id_].members.is_subset_of(subs_[i].members);
        }

        l_pairs_.resize(nsub);
        lstar_pairs_.resize(nsub);
        for (int i = 0; i < nsub; ++i) {
            for (int j = 0; j < nsub; ++j) {
                if (!subs_[i].members.is_subset_of(subs_[j].members)) continue;
                int ratio = subs_[j].order() / subs_[i].order();
                if (ratio <= 2 || ratio % 2 != 0) continue;
                l_pairs_[i].push_back(j);
                // Lstar additionally needs a cyclic 2-group quotient whose
                // order matches exp(G/L), with an elementary 2-group on top.
                if ((ratio & (ratio - 1)) != 0) continue;
                if (!elementary_above_[j]) continue;
                if (exp_full_[i] != ratio) continue;
                IndexSet gens(g_.order());
                subs_[j].members.for_each([&](int x) {
                    if (coset_order(g_, x, subs_[i].members) == ratio) gens.insert(x);
                });
                if (!gens.empty()) lstar_pairs_[i].push_back({j, std::move(gens)});
            }
        }

        z4z2_ = false;
        for (const auto& h : subs_) {
            if (h.order() == 8 &&
                exponent_of_quotient_in(g_, h.members, trivial_subgroup(g_).members) == 4)
                z4z2_ = true;
        }
    }

    const GroupSpec& group() const { return g_; }
    const std::vector<Subgroup>& subgroups() const { return subs_; }
    bool has_z4z2_subgroup() const { return z4z2_; }
    const Subgroup& doubles() const { return subs_[dbl_id_]; }

    /// S+H for every subgroup, via the coset tables.
    std::vector<IndexSet> saturations(const IndexSet& s) const {
        std::vector<IndexSet> out;
        out.reserve(subs_.size());
        for (size_t i = 0; i < subs_.size(); ++i) {
            IndexSet r(g_.order());
            const CosetSpace& cs = cosets_[i];
            for (int c = 0; c < cs.num_cosets(); ++c)
                if (cs.coset(c).intersects(s)) r |= cs.coset(c);
            out.push_back(std::move(r));
        }
        return out;
    }

    std::vector<FamilyEntry> h_family(const IndexSet& s) const {
        return h_family_from(s, saturations(s));
    }

    std::optional<int> eta(const IndexSet& s) const {
        auto sats = saturations(s);
        std::optional<int> best;
        IndexSet meet = sats[dbl_id_];
        for (size_t i = 0; i < subs_.size(); ++i) {
            if (sats[i] == full_) continue;
            if (!meet.intersects(subs_[i].members)) continue;
            best = detail::opt_min(best, sats[i].count() - subs_[i].order());
        }
        return best;
    }

    std::optional<LWitness> lstar_check(const IndexSet& s, const Subgroup& l) const {
        int id = find_subgroup_id(l.members);
        if (id < 0) throw InvalidSubgroupError("lstar_check: L is not a subgroup of G");
        return lstar_witness(s, saturate_by(s, id), id);
    }

    std::vector<FamilyEntry> l_family(const IndexSet& s) const {
        auto sats = saturations(s);
        std::vector<FamilyEntry> out;
        for (size_t i = 0; i < subs_.size(); ++i) {
            if (auto w = l_witness(s, sats[i], int(i)))
                out.push_back({subs_[i], sats[i].count() - subs_[i].order(), FamilyTag::L,
                               std::move(w)});
        }
        detail::sort_entries(out);
        return out;
    }

    std::vector<FamilyEntry> lstar_family(const IndexSet& s) const {
        return lstar_family_from(s, saturations(s));
    }

    std::optional<int> lambda(const IndexSet& s) const {
        auto sats = saturations(s);
        std::optional<int> best;
        for (size_t i = 0; i < subs_.size(); ++i)
            if (l_witness(s, sats[i], int(i)))
                best = detail::opt_min(best, sats[i].count() - subs_[i].order());
        return best;
    }

    std::optional<int> lambda_star(const IndexSet& s) const {
        auto sats = saturations(s);
        std::optional<int> best;
        for (size_t i = 0; i < subs_.size(); ++i)
            if (lstar_witness(s, sats[i], int(i)))
                best = detail::opt_min(best, sats[i].count() - subs_[i].order());
        return best;
    }

    /// The plain minimum of |S+H| - |H| over subgroups with S+H != G;
    /// equals kappa exactly when kappa < |S|.
    std::optional<int> kappa_simple(const IndexSet& s) const {
        auto sats = saturations(s);
        return kappa_simple_from(sats);
    }

    /// Full report: branch selection on the certified family, with the
    /// three-way minimum re-asserted as an internal consistency check.
    KappaReport kappa_formula(const IndexSet& s) const {
        return formula_from(s, saturations(s));
    }

    CorollaryChecks corollary_predicates(const IndexSet& s, const KappaReport& rep) const {
        return corollaries_from(s, rep, kappa_simple(s), is_connected(g_, s));
    }

    /// Everything the per-instance verification needs from one saturation
    /// pass: the report, the plain minimum, connectivity, corollaries.
    struct InstanceEvaluation {
        KappaReport report;
        std::optional<int> simple;
        bool connected = false;
        CorollaryChecks corollaries;
    };

    InstanceEvaluation evaluate(const IndexSet& s) const {
        InstanceEvaluation ev;
        auto sats = saturations(s);
        ev.report = formula_from(s, sats);
        ev.simple = kappa_simple_from(sats);
        ev.connected = is_connected(g_, s);
        ev.corollaries = corollaries_from(s, ev.report, ev.simple, ev.connected);
        return ev;
    }

    IndexSet saturate_by(const IndexSet& s, int subgroup_id) const {
        IndexSet r(g_.order());
        const CosetSpace& cs = cosets_[subgroup_id];
        for (int c = 0; c < cs.num_cosets(); ++c)
            if (cs.coset(c).intersects(s)) r |= cs.coset(c);
        return r;
    }

    int find_subgroup_id(const IndexSet& members) const {
        for (size_t i = 0; i < subs_.size(); ++i)
            if (subs_[i].members == members) return int(i);
        return -1;
    }

private:
    KappaReport formula_from(const IndexSet& s, const std::vector<IndexSet>& sats) const {
        KappaReport rep;
        rep.group = g_;
        rep.subset = s;

        auto h_entries = h_family_from(s, sats);
        auto lstar_entries = lstar_family_from(s, sats);
        if (!h_entries.empty()) rep.eta = h_entries.front().score;
        for (size_t i = 0; i < subs_.size(); ++i)
            if (l_witness(s, sats[i], int(i)))
                rep.lambda = detail::opt_min(rep.lambda, sats[i].count() - subs_[i].order());
        if (!lstar_entries.empty()) rep.lambda_star = lstar_entries.front().score;

        bool proper = s != full_;
        int degree = s.count();

        if (!proper || (!s.empty() && is_complete(g_, s))) {
            rep.kappa = g_.order() - 1;
            rep.branch = Branch::Complete;
        } else {
            std::vector<const FamilyEntry*> qualifying;
            for (const auto& e : lstar_entries)
                if (e.score <= degree - 1) qualifying.push_back(&e);
            if (qualifying.size() > 1)
                throw TheoremViolationError(
                    "two distinct certified subgroups score below the degree");

            if (qualifying.size() == 1) {
                const FamilyEntry& e = *qualifying.front();
                rep.kappa = e.score;
                rep.branch = Branch::LambdaStar;
                rep.witness = e;
                rep.fragment =
                    two_coset_fragment(g_, s, e.subgroup, e.witness->upper, e.witness->rep);
            } else if (rep.eta && *rep.eta <= degree) {
                rep.kappa = *rep.eta;
                rep.branch = Branch::Eta;
                rep.witness = h_entries.front();
                rep.fragment = coset_fragment(g_, s, h_entries.front().subgroup);
            } else {
                rep.kappa = degree;
                rep.branch = Branch::Degree;
            }
        }

        if (proper) {
            int three_way = degree;
            if (rep.eta) three_way = std::min(three_way, *rep.eta);
            if (rep.lambda) three_way = std::min(three_way, *rep.lambda);
            if (three_way != rep.kappa)
                throw TheoremViolationError("three-way minimum disagrees with selected branch");
        }
        if (rep.fragment) {
            const Fragment& f = *rep.fragment;
            IndexSet nb = diffset(g_, s, f.vertices);
            if ((nb - f.vertices).count() != rep.kappa || (nb | f.vertices) == full_)
                throw TheoremViolationError("reported fragment is not genuine");
        }
        return rep;
    }

    CorollaryChecks corollaries_from(const IndexSet& s, const KappaReport& rep,
                                     const std::optional<int>& simple, bool connected) const {
        CorollaryChecks out;
        bool proper = s != full_;
        if (!proper) return out;
        int degree = s.count();

        out.half_degree.applicable = connected;
        if (connected) out.half_degree.holds = 2 * rep.kappa >= degree;

        out.smallest_prime.applicable = connected && g_.order() > 1;
        if (out.smallest_prime.applicable) {
            int p = smallest_nonzero_subgroup_order(g_);
            out.smallest_prime.holds = rep.kappa >= std::min(degree - 1, p);
        }

        out.below_degree_iff.applicable = true;
        bool witness_exists = (rep.eta && *rep.eta <= degree - 1) ||
                              (rep.lambda_star && *rep.lambda_star <= degree - 1);
        out.below_degree_iff.holds = (rep.kappa < degree) == witness_exists;

        out.doubles_simple.applicable = s.intersects(subs_[dbl_id_].members);
        if (out.doubles_simple.applicable)
            out.doubles_simple.holds = simple && *simple == rep.kappa;
        return out;
    }

    std::vector<FamilyEntry> h_family_from(const IndexSet& s,
                                           const std::vector<IndexSet>& sats) const {
        std::vector<FamilyEntry> out;
        const IndexSet& meet = sats[dbl_id_];
        for (size_t i = 0; i < subs_.size(); ++i) {
            if (sats[i] == full_) continue;
            if (!meet.intersects(subs_[i].members)) continue;
            out.push_back({subs_[i], sats[i].count() - subs_[i].order(), FamilyTag::H, {}});
        }
        detail::sort_entries(out);
        return out;
    }

    std::vector<FamilyEntry> lstar_family_from(const IndexSet& s,
                                               const std::vector<IndexSet>& sats) const {
        std::vector<FamilyEntry> out;
        for (size_t i = 0; i < subs_.size(); ++i) {
            if (auto w = lstar_witness(s, sats[i], int(i)))
                out.push_back({subs_[i], sats[i].count() - subs_[i].order(), FamilyTag::Lstar,
                               std::move(w)});
        }
        detail::sort_entries(out);
        return out;
    }

    std::optional<int> kappa_simple_from(const std::vector<IndexSet>& sats) const {
        std::optional<int> best;
        for (size_t i = 0; i < subs_.size(); ++i)
            if (sats[i] != full_)
                best = detail::opt_min(best, sats[i].count() - subs_[i].order());
        return best;
    }

    /// Does (S+L) look like (G \ G0) u (single L-coset inside G0)?
    /// Returns the coset mask on success.
    std::optional<IndexSet> single_inner_coset(const IndexSet& sat, int l_id, int g0_id) const {
        if (!complements_[g0_id].is_subset_of(sat)) return std::nullopt;
        IndexSet inside = sat & subs_[g0_id].members;
        if (inside.count() != subs_[l_id].order()) return std::nullopt;
        int r = inside.first();
        const CosetSpace& cs = cosets_[l_id];
        if (cs.coset(cs.coset_id(r)) != inside) return std::nullopt;
        return inside;
    }

    std::optional<LWitness> l_witness(const IndexSet& s, const IndexSet& sat, int l_id) const {
        for (int j : l_pairs_[l_id]) {
            if (auto inside = single_inner_coset(sat, l_id, j))
                return LWitness{subs_[j], inside->first()};
        }
        return std::nullopt;
    }

    /// First (G0, g0) in (subgroup order, member set, element index) order
    /// passing all four certification conditions, if any.
    std::optional<LWitness> lstar_witness(const IndexSet& s, const IndexSet& sat,
                                          int l_id) const {
        for (const auto& pair : lstar_pairs_[l_id]) {
            auto inside = single_inner_coset(sat, l_id, pair.upper_id);
            if (!inside) continue;
            IndexSet g0_options = pair.generators & *inside;
            if (g0_options.empty()) continue;
            if (!coset_slice_generates(s, *inside, l_id)) continue;
            return LWitness{subs_[pair.upper_id], g0_options.first()};
        }
        return std::nullopt;
    }

    /// S restricted to the distinguished coset, translated to the origin,
    /// must generate all of L (equivalently: it fits in no proper L-coset).
    bool coset_slice_generates(const IndexSet& s, const IndexSet& coset, int l_id) const {
        IndexSet slice = s & coset;
        int base = slice.first();
        std::vector<int> gens;
        slice.for_each([&](int x) { gens.push_back(g_.sub(x, base)); });
        return subgroup_generated(g_, gens).members == subs_[l_id].members;
    }

    struct LstarPair {
        int upper_id;
        IndexSet generators; // elements of G0 whose coset order equals |G0/L|
    };

    GroupSpec g_;
    IndexSet full_;
    std::vector<Subgroup> subs_;
    std::vector<CosetSpace> cosets_;
    std::vector<IndexSet> complements_;
    std::vector<int> exp_full_;
    std::vector<char> elementary_above_;
    std::vector<std::vector<int>> l_pairs_;
    std::vector<std::vector<LstarPair>> lstar_pairs_;
    int dbl_id_ = 0;
    bool z4z2_ = false;
};

// Convenience wrappers constructing a throwaway analyzer.

inline std::vector<FamilyEntry> h_family(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).h_family(s);
}

inline std::optional<int> eta(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).eta(s);
}

inline std::optional<LWitness> lstar_check(const GroupSpec& g, const IndexSet& s,
                                           const Subgroup& l) {
    return ConnectivityAnalyzer(g).lstar_check(s, l);
}

inline std::vector<FamilyEntry> l_family(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).l_family(s);
}

inline std::vector<FamilyEntry> lstar_family(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).lstar_family(s);
}

inline std::optional<int> lambda(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).lambda(s);
}

inline std::optional<int> lambda_star(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).lambda_star(s);
}

inline KappaReport kappa_formula(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).kappa_formula(s);
}

inline std::optional<int> kappa_simple(const GroupSpec& g, const IndexSet& s) {
    return ConnectivityAnalyzer(g).kappa_simple(s);
}

inline CorollaryChecks corollary_predicates(const GroupSpec& g, const IndexSet& s,
                                            const KappaReport& rep) {
    return ConnectivityAnalyzer(g).corollary_predicates(s, rep);
}

} // namespace acg
