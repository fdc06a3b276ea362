#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"

namespace acg {

/// A finite abelian group given as a direct sum of cyclic factors
/// Z_{n1} + ... + Z_{nk}.  Elements are addressed by a mixed-radix index
/// with the most significant factor first; the trivial group is the empty
/// factor sequence.
class GroupSpec {
public:
    GroupSpec() : order_(1) {}

    explicit GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
        long long ord = 1;
        for (int f : factors_) {
            if (f < 2) throw InvalidSpecError("group factor must be >= 2");
            ord *= f;
            if (ord > (1 << 30)) throw InvalidSpecError("group order overflows the index space");
        }
        order_ = int(ord);
        strides_.assign(factors_.size(), 1);
        for (int i = int(factors_.size()) - 2; i >= 0; --i)
            strides_[i] = strides_[i + 1] * factors_[i + 1];
        if (order_ <= kTableLimit) build_tables();
    }

    const std::vector<int>& factors() const { return factors_; }
    int order() const { return order_; }
    int num_factors() const { return int(factors_.size()); }

    std::vector<int> coords_of(int index) const {
        check_index(index);
        std::vector<int> c(factors_.size());
        for (size_t i = 0; i < factors_.size(); ++i) {
            c[i] = index / strides_[i];
            index %= strides_[i];
        }
        return c;
    }

    int index_of(const std::vector<int>& coords) const {
        if (int(coords.size()) != num_factors())
            throw InvalidSpecError("element has wrong number of coordinates");
        int idx = 0;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] < 0 || coords[i] >= factors_[i])
                throw InvalidSpecError("element coordinate out of range");
            idx += coords[i] * strides_[i];
        }
        return idx;
    }

    int add(int a, int b) const {
        check_index(a);
        check_index(b);
        if (tables_) return tables_->add[a * order_ + b];
        return add_slow(a, b);
    }

    int neg(int a) const {
        check_index(a);
        if (tables_) return tables_->neg[a];
        return neg_slow(a);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }
    int twice(int a) const { return add(a, a); }

    /// k * g for k >= 0.
    int mul(int k, int g) const {
        check_index(g);
        int acc = 0;
        int base = g;
        while (k > 0) {
            if (k & 1) acc = add(acc, base);
            base = add(base, base);
            k >>= 1;
        }
        return acc;
    }

    int order_of(int g) const {
        auto c = coords_of(g);
        long long ord = 1;
        for (size_t i = 0; i < factors_.size(); ++i)
            ord = std::lcm(ord, (long long)factors_[i] / std::gcd(factors_[i], c[i]));
        return int(ord);
    }

    int exponent() const {
        long long e = 1;
        for (int f : factors_) e = std::lcm(e, (long long)f);
        return int(e);
    }

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

private:
    static constexpr int kTableLimit = 64;

    struct Tables {
        std::vector<int> add; // order x order
        std::vector<int> neg;
    };

    void check_index(int i) const {
        if (i < 0 || i >= order_) throw InvalidSpecError("element index out of range");
    }

    int add_slow(int a, int b) const {
        int r = 0;
        for (size_t i = 0; i < factors_.size(); ++i) {
            int xa = a / strides_[i] % factors_[i];
            int xb = b / strides_[i] % factors_[i];
            int x = xa + xb;
            if (x >= factors_[i]) x -= factors_[i];
            r += x * strides_[i];
        }
        return r;
    }

    int neg_slow(int a) const {
        int r = 0;
        for (size_t i = 0; i < factors_.size(); ++i) {
            int xa = a / strides_[i] % factors_[i];
            if (xa != 0) r += (factors_[i] - xa) * strides_[i];
        }
        return r;
    }

    void build_tables() {
        auto t = std::make_shared<Tables>();
        t->add.resize(size_t(order_) * order_);
        t->neg.resize(order_);
        for (int a = 0; a < order_; ++a) {
            t->neg[a] = neg_slow(a);
            for (int b = 0; b < order_; ++b) t->add[a * order_ + b] = add_slow(a, b);
        }
        tables_ = std::move(t);
    }

    std::vector<int> factors_;
    std::vector<int> strides_;
    int order_ = 1;
    std::shared_ptr<const Tables> tables_; // shared across copies, small orders only
};

inline GroupSpec make_group(std::vector<int> factors) { return GroupSpec(std::move(factors)); }

/// A group element carried together with its coordinates; the index alone
/// is what the rest of the library works with.
struct Element {
    std::vector<int> coords;
    int index = 0;
};

inline Element element_at(const GroupSpec& g, int index) { return {g.coords_of(index), index}; }

inline Element element_from_coords(const GroupSpec& g, const std::vector<int>& coords) {
    int idx = g.index_of(coords);
    return {coords, idx};
}

inline Element elem_add(const GroupSpec& g, const Element& a, const Element& b) {
    return element_at(g, g.add(a.index, b.index));
}

inline Element elem_neg(const GroupSpec& g, const Element& a) {
    return element_at(g, g.neg(a.index));
}

inline Element elem_double(const GroupSpec& g, const Element& a) {
    return element_at(g, g.twice(a.index));
}

/// A subgroup as an explicit member set.  All factories validate closure;
/// code that constructs subgroups from known-closed sets fills the struct
/// directly.
struct Subgroup {
    IndexSet members;

    int order() const { return members.count(); }
    bool contains(int g) const { return members.contains(g); }
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

inline bool is_closed_subgroup(const GroupSpec& g, const IndexSet& members) {
    if (members.universe() != g.order()) return false;
    if (!members.contains(0)) return false;
    bool ok = true;
    members.for_each([&](int a) {
        if (!ok) return;
        members.for_each([&](int b) {
            if (!members.contains(g.add(a, b))) ok = false;
        });
    });
    return ok;
}

inline Subgroup make_subgroup(const GroupSpec& g, const IndexSet& members) {
    if (!is_closed_subgroup(g, members))
        throw InvalidSubgroupError("member set is not an addition-closed subgroup");
    return Subgroup{members};
}

inline Subgroup trivial_subgroup(const GroupSpec& g) {
    IndexSet m(g.order());
    m.insert(0);
    return Subgroup{m};
}

inline Subgroup whole_group(const GroupSpec& g) { return Subgroup{IndexSet::full(g.order())}; }

/// Smallest addition-closed subset containing the generators and 0.  In a
/// finite group addition-closure already forces inverses, so no separate
/// negation step is needed.
inline Subgroup subgroup_generated(const GroupSpec& g, const std::vector<int>& gens) {
    IndexSet m(g.order());
    m.insert(0);
    std::vector<int> work;
    for (int x : gens) {
        if (!m.contains(x)) {
            m.insert(x);
            work.push_back(x);
        }
    }
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        std::vector<int> cur = m.members();
        for (int y : cur) {
            int z = g.add(x, y);
            if (!m.contains(z)) {
                m.insert(z);
                work.push_back(z);
            }
        }
    }
    return Subgroup{m};
}

/// The subgroup 2*G = {2g : g in G}; equals G exactly when |G| is odd.
inline Subgroup double_image(const GroupSpec& g) {
    IndexSet m(g.order());
    for (int x = 0; x < g.order(); ++x) m.insert(g.twice(x));
    return Subgroup{m};
}

/// Least m >= 1 with m*g in H.  Depends only on the coset of g.
inline int coset_order(const GroupSpec& g, int x, const IndexSet& h) {
    int acc = x;
    int m = 1;
    while (!h.contains(acc)) {
        acc = g.add(acc, x);
        ++m;
    }
    return m;
}

/// exp(D/H) for a sub-domain D of G closed under addition and containing H:
/// the least m with m*d in H for every d in D.
inline int exponent_of_quotient_in(const GroupSpec& g, const IndexSet& domain, const IndexSet& h) {
    long long e = 1;
    domain.for_each([&](int d) { e = std::lcm(e, (long long)coset_order(g, d, h)); });
    return int(e);
}

/// exp(G/H): least m >= 1 such that m*g lands in H for all g.
inline int exponent_of_quotient(const GroupSpec& g, const Subgroup& h) {
    if (!is_closed_subgroup(g, h.members))
        throw InvalidSubgroupError("exponent_of_quotient: H is not a subgroup");
    return exponent_of_quotient_in(g, IndexSet::full(g.order()), h.members);
}

/// Every subgroup of G, sorted by (order, member set).  Enumeration closes
/// the family of cyclic subgroups under pairwise joins; complete because
/// every subgroup is a join of the cyclic subgroups it contains.
inline std::vector<Subgroup> all_subgroups(const GroupSpec& g, int max_order = 512) {
    if (g.order() > max_order)
        throw ResourceLimitError("all_subgroups: group order exceeds configured bound");

    std::vector<IndexSet> found;
    auto add_new = [&](const IndexSet& m) {
        for (const auto& f : found)
            if (f == m) return false;
        found.push_back(m);
        return true;
    };

    for (int x = 0; x < g.order(); ++x) add_new(subgroup_generated(g, {x}).members);

    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = found.size();
        for (size_t i = 0; i < sz; ++i) {
            for (size_t j = i + 1; j < sz; ++j) {
                if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
                IndexSet u = found[i] | found[j];
                std::vector<int> gens = u.members();
                if (add_new(subgroup_generated(g, gens).members)) grew = true;
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const IndexSet& a, const IndexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return lex_members_less(a, b);
    });

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& m : found) out.push_back(Subgroup{std::move(m)});
    return out;
}

/// Coset decomposition of G by a subgroup; cosets are numbered by their
/// smallest representative, in ascending order.
class CosetSpace {
public:
    CosetSpace(const GroupSpec& g, const Subgroup& h) {
        int n = g.order();
        id_of_.assign(n, -1);
        for (int x = 0; x < n; ++x) {
            if (id_of_[x] != -1) continue;
            int id = int(reps_.size());
            reps_.push_back(x);
            IndexSet coset(n);
            h.members.for_each([&](int hh) {
                int y = g.add(x, hh);
                coset.insert(y);
                id_of_[y] = id;
            });
            cosets_.push_back(std::move(coset));
        }
    }

    int num_cosets() const { return int(reps_.size()); }
    int coset_id(int g) const { return id_of_[g]; }
    int rep(int id) const { return reps_[id]; }
    const IndexSet& coset(int id) const { return cosets_[id]; }
    const std::vector<int>& reps() const { return reps_; }

private:
    std::vector<int> id_of_;
    std::vector<int> reps_;
    std::vector<IndexSet> cosets_;
};

struct QuotientShape {
    bool cyclic_2group = false;
    std::optional<Element> witness_generator;
    bool elementary_2group_above = false;
};

/// Shape predicates for a chain L <= G0 <= G: whether G0/L is a cyclic
/// 2-group (with a generating element as witness) and whether G/G0 is an
/// elementary abelian 2-group.
inline QuotientShape quotient_predicates(const GroupSpec& g, const Subgroup& l, const Subgroup& g0) {
    if (!is_closed_subgroup(g, l.members) || !is_closed_subgroup(g, g0.members))
        throw InvalidChainError("quotient_predicates: arguments are not subgroups");
    if (!l.members.is_subset_of(g0.members))
        throw InvalidChainError("quotient_predicates: L is not contained in G0");

    QuotientShape out;
    int q = g0.order() / l.order();
    if ((q & (q - 1)) == 0) {
        // Power of two: cyclic iff some element reaches the full coset order.
        bool done = false;
        g0.members.for_each([&](int x) {
            if (done) return;
            if (coset_order(g, x, l.members) == q) {
                out.cyclic_2group = true;
                out.witness_generator = element_at(g, x);
                done = true;
            }
        });
    }
    out.elementary_2group_above = true;
    for (int x = 0; x < g.order() && out.elementary_2group_above; ++x)
        if (!g0.members.contains(g.twice(x))) out.elementary_2group_above = false;
    return out;
}

/// Smallest order of a non-zero subgroup, i.e. the smallest prime factor
/// of |G|.  Requires a non-trivial group.
inline int smallest_nonzero_subgroup_order(const GroupSpec& g) {
    if (g.order() <= 1) throw PreconditionError("trivial group has no non-zero subgroup");
    int n = g.order();
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

} // namespace acg
