#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"
#include "index_set.hpp"
#include "sumset.hpp"

namespace acg {

/// Loopless undirected graph on vertices [0, n); used both for addition
/// Cayley graphs (loops kept aside) and for their quotient graphs.
struct SimpleGraph {
    int n = 0;
    std::vector<IndexSet> adj;
};

inline bool is_connected(const SimpleGraph& g) {
    if (g.n <= 1) return true;
    std::vector<int> stack{0};
    IndexSet seen(g.n);
    seen.insert(0);
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.adj[v].for_each([&](int w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                ++cnt;
                stack.push_back(w);
            }
        });
    }
    return cnt == g.n;
}

inline bool is_complete_graph(const SimpleGraph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v].count() != g.n - 1) return false;
    return true;
}

inline std::vector<IndexSet> connected_components(const SimpleGraph& g, const IndexSet& removed) {
    std::vector<IndexSet> comps;
    IndexSet seen = removed;
    for (int v = 0; v < g.n; ++v) {
        if (seen.contains(v)) continue;
        IndexSet comp(g.n);
        std::vector<int> stack{v};
        seen.insert(v);
        comp.insert(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            g.adj[x].for_each([&](int w) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    comp.insert(w);
                    stack.push_back(w);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace detail {

/// Unit-vertex-capacity max-flow on the standard vertex-split network:
/// node in(v)=2v, out(v)=2v+1, internal arc of capacity 1, edge arcs of
/// effectively infinite capacity.  Max flow from out(s) to in(t) equals the
/// number of internally vertex-disjoint s-t paths (Menger).  Augmentation
/// runs in level phases with blocking flows.
class VertexFlow {
public:
    explicit VertexFlow(const SimpleGraph& g) : nv_(g.n), head_(2 * g.n, -1) {
        big_ = g.n + 1;
        int edges = 0;
        for (int v = 0; v < g.n; ++v) edges += g.adj[v].count();
        to_.reserve(2 * (g.n + edges));
        cap_.reserve(2 * (g.n + edges));
        next_.reserve(2 * (g.n + edges));
        for (int v = 0; v < g.n; ++v) add_pair(in(v), out(v), 1);
        for (int v = 0; v < g.n; ++v)
            g.adj[v].for_each([&](int w) {
                if (w > v) {
                    add_pair(out(v), in(w), big_);
                    add_pair(out(w), in(v), big_);
                }
            });
        cap0_ = cap_;
        level_.assign(2 * nv_, -1);
        it_.assign(2 * nv_, -1);
        queue_.reserve(2 * nv_);
    }

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    /// Max flow out(s) -> in(t), stopping early once `limit` is reached.
    int max_flow(int s, int t, int limit) {
        cap_ = cap0_;
        src_ = out(s);
        dst_ = in(t);
        int flow = 0;
        while (flow < limit && bfs_levels()) {
            for (int u = 0; u < 2 * nv_; ++u) it_[u] = head_[u];
            while (flow < limit) {
                int pushed = dfs(src_, big_);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    /// Vertices whose internal arc crosses the residual reachability cut.
    /// Valid only after max_flow ran to completion (no augmenting path left).
    IndexSet cut_vertices() {
        std::vector<char> reach(2 * nv_, 0);
        queue_.clear();
        queue_.push_back(src_);
        reach[src_] = 1;
        for (size_t qi = 0; qi < queue_.size(); ++qi) {
            int u = queue_[qi];
            for (int a = head_[u]; a != -1; a = next_[a]) {
                if (cap_[a] > 0 && !reach[to_[a]]) {
                    reach[to_[a]] = 1;
                    queue_.push_back(to_[a]);
                }
            }
        }
        IndexSet cut(nv_);
        for (int v = 0; v < nv_; ++v)
            if (reach[in(v)] && !reach[out(v)]) cut.insert(v);
        return cut;
    }

private:
    void add_pair(int u, int v, int c) {
        add_arc(u, v, c);
        add_arc(v, u, 0);
    }

    void add_arc(int u, int v, int c) {
        to_.push_back(v);
        cap_.push_back(c);
        next_.push_back(head_[u]);
        head_[u] = int(to_.size()) - 1;
    }

    bool bfs_levels() {
        std::fill(level_.begin(), level_.end(), -1);
        queue_.clear();
        queue_.push_back(src_);
        level_[src_] = 0;
        for (size_t qi = 0; qi < queue_.size(); ++qi) {
            int u = queue_[qi];
            for (int a = head_[u]; a != -1; a = next_[a]) {
                int v = to_[a];
                if (cap_[a] > 0 && level_[v] == -1) {
                    level_[v] = level_[u] + 1;
                    if (v == dst_) return true;
                    queue_.push_back(v);
                }
            }
        }
        return level_[dst_] != -1;
    }

    int dfs(int u, int budget) {
        if (u == dst_) return budget;
        for (int& a = it_[u]; a != -1; a = next_[a]) {
            int v = to_[a];
            if (cap_[a] > 0 && level_[v] == level_[u] + 1) {
                int pushed = dfs(v, std::min(budget, cap_[a]));
                if (pushed > 0) {
                    cap_[a] -= pushed;
                    cap_[a ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        level_[u] = -1;
        return 0;
    }

    int nv_;
    int big_;
    int src_ = 0, dst_ = 0;
    std::vector<int> head_, to_, next_, cap_, cap0_;
    std::vector<int> level_, it_;
    std::vector<int> queue_;
};

/// Source/sink pairs that are guaranteed to realize the connectivity:
/// a fixed vertex plus its whole neighborhood, against their non-neighbors.
/// Some minimum cut misses at least one vertex of that closed neighborhood,
/// and that vertex sees every component of the cut graph.
template <typename F>
void sweep_pairs(const SimpleGraph& g, F&& visit) {
    int v0 = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.adj[v].count() < g.adj[v0].count()) v0 = v;
    IndexSet sources = g.adj[v0];
    sources.insert(v0);
    sources.for_each([&](int s) {
        for (int t = 0; t < g.n; ++t) {
            if (t == s || g.adj[s].contains(t)) continue;
            if (sources.contains(t) && t < s) continue; // unordered pair already seen
            visit(s, t);
        }
    });
}

/// One record per swept pair.  Flowed pairs carry the (possibly capped)
/// flow value; twin pairs (equal neighborhoods) have exact connectivity
/// deg(s) without a flow; bounded pairs were skipped because the common
/// neighborhood already matched the best value seen.
struct PairRecord {
    enum Kind { Flowed, Twin, Bounded } kind;
    int s, t;
    int value; // flow value / degree / lower bound respectively
};

struct SweepOutcome {
    int kappa = 0;
    bool swept = false; // false for the trivial/complete/disconnected cases
    std::vector<PairRecord> pairs;
};

inline SweepOutcome sweep_connectivity(const SimpleGraph& g) {
    SweepOutcome out;
    if (g.n <= 1) return out;
    if (is_complete_graph(g)) {
        out.kappa = g.n - 1;
        return out;
    }
    if (!is_connected(g)) return out;

    out.swept = true;
    int best = g.n - 1;
    // Twin pass first: equal neighborhoods pin the pair connectivity to the
    // degree (the shared neighborhood is itself a separating set, met by
    // that many internally disjoint two-step paths).
    sweep_pairs(g, [&](int s, int t) {
        if (g.adj[s] == g.adj[t]) {
            int deg = g.adj[s].count();
            out.pairs.push_back({PairRecord::Twin, s, t, deg});
            best = std::min(best, deg);
        } else {
            out.pairs.push_back({PairRecord::Flowed, s, t, -1});
        }
    });
    std::vector<uint64_t> nbhash(g.n);
    for (int v = 0; v < g.n; ++v) nbhash[v] = g.adj[v].hash();

    VertexFlow flow(g);
    for (size_t i = 0; i < out.pairs.size(); ++i) {
        auto& rec = out.pairs[i];
        if (rec.kind != PairRecord::Flowed) continue;
        int lb = (g.adj[rec.s] & g.adj[rec.t]).count();
        if (lb >= best) {
            rec.kind = PairRecord::Bounded;
            rec.value = lb;
            continue;
        }
        // Pair connectivity only depends on the endpoint neighborhoods, so
        // a pair matching an already-flowed one inherits its value.
        uint64_t key = nbhash[rec.s] + nbhash[rec.t];
        int inherited = -1;
        for (size_t j = 0; j < i && inherited < 0; ++j) {
            const auto& prev = out.pairs[j];
            if (prev.kind != PairRecord::Flowed || prev.value < 0) continue;
            if (nbhash[prev.s] + nbhash[prev.t] != key) continue;
            if ((g.adj[prev.s] == g.adj[rec.s] && g.adj[prev.t] == g.adj[rec.t]) ||
                (g.adj[prev.s] == g.adj[rec.t] && g.adj[prev.t] == g.adj[rec.s]))
                inherited = prev.value;
        }
        rec.value = inherited >= 0 ? inherited : flow.max_flow(rec.s, rec.t, best);
        best = std::min(best, rec.value);
    }
    out.kappa = best;
    return out;
}

/// Distinct minimum cuts realized by the swept pairs: twin pairs at the
/// optimum contribute their shared neighborhood, flow pairs at the optimum
/// contribute the residual-reachability cut of a completed flow.
inline std::vector<IndexSet> cuts_from_sweep(const SimpleGraph& g, const SweepOutcome& outcome) {
    std::vector<IndexSet> cuts;
    auto add_cut = [&](const IndexSet& c) {
        for (const auto& existing : cuts)
            if (existing == c) return;
        cuts.push_back(c);
    };
    if (!outcome.swept) {
        if (outcome.kappa == 0 && g.n >= 1) add_cut(IndexSet(g.n)); // disconnected
    } else {
        VertexFlow flow(g);
        for (const auto& rec : outcome.pairs) {
            if (rec.kind == PairRecord::Twin) {
                if (rec.value == outcome.kappa) add_cut(g.adj[rec.s]);
            } else {
                // Bounded pairs may still hit the optimum when the bound ties.
                if (rec.value > outcome.kappa) continue;
                if (flow.max_flow(rec.s, rec.t, outcome.kappa + 1) == outcome.kappa)
                    add_cut(flow.cut_vertices());
            }
        }
    }
    std::sort(cuts.begin(), cuts.end(), lex_members_less);
    return cuts;
}

} // namespace detail

/// Exact vertex connectivity of an arbitrary loopless graph: n-1 for
/// complete graphs, 0 when disconnected, otherwise the minimum over the
/// restricted non-adjacent pair sweep of vertex-split max-flow values.
inline int vertex_connectivity(const SimpleGraph& g) {
    return detail::sweep_connectivity(g).kappa;
}

/// All distinct minimum vertex cuts found by the pair sweep, or every one
/// of them when `exhaustive` is set (feasible only for small graphs).
inline std::vector<IndexSet> minimum_vertex_cuts(const SimpleGraph& g, int kappa,
                                                 bool exhaustive = false) {
    if (is_complete_graph(g))
        throw PreconditionError("complete graph has no vertex cuts");
    if (kappa == 0) return {IndexSet(g.n)};

    if (exhaustive) {
        std::vector<IndexSet> cuts;
        std::vector<int> pick(kappa);
        for (int i = 0; i < kappa; ++i) pick[i] = i;
        while (true) {
            IndexSet c(g.n);
            for (int i : pick) c.insert(i);
            if (connected_components(g, c).size() >= 2) cuts.push_back(c);
            int i = kappa - 1;
            while (i >= 0 && pick[i] == g.n - kappa + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < kappa; ++j) pick[j] = pick[j - 1] + 1;
        }
        std::sort(cuts.begin(), cuts.end(), lex_members_less);
        return cuts;
    }

    auto outcome = detail::sweep_connectivity(g);
    if (outcome.kappa != kappa)
        throw PreconditionError("minimum_vertex_cuts: kappa does not match the graph");
    return detail::cuts_from_sweep(g, outcome);
}

/// The addition Cayley graph on G induced by S: vertices are the group
/// elements, g1 ~ g2 whenever g1 + g2 lies in S.  Loops (2g in S) are
/// recorded but kept out of the simple adjacency, since cuts ignore them.
class AdditionCayleyGraph {
public:
    AdditionCayleyGraph(GroupSpec group, IndexSet s) : group_(std::move(group)), s_(std::move(s)) {
        int n = group_.order();
        simple_.n = n;
        simple_.adj.assign(n, IndexSet(n));
        loops_ = IndexSet(n);
        s_.for_each([&](int sum) {
            for (int v = 0; v < n; ++v) {
                int w = group_.sub(sum, v);
                if (w == v)
                    loops_.insert(v);
                else
                    simple_.adj[v].insert(w);
            }
        });
    }

    const GroupSpec& group() const { return group_; }
    const IndexSet& connection_set() const { return s_; }
    const SimpleGraph& simple() const { return simple_; }
    const IndexSet& loops() const { return loops_; }

    /// Degree with a loop contributing 1; always |S| for these graphs.
    int degree(int v) const { return simple_.adj[v].count() + (loops_.contains(v) ? 1 : 0); }

private:
    GroupSpec group_;
    IndexSet s_;
    SimpleGraph simple_;
    IndexSet loops_;
};

inline AdditionCayleyGraph build_graph(const GroupSpec& g, const IndexSet& s) {
    return AdditionCayleyGraph(g, s);
}

/// Closed-form completeness test: S = G, or S = G \ {0} on an elementary
/// abelian 2-group (of any rank, including zero).
inline bool is_complete(const GroupSpec& g, const IndexSet& s) {
    if (s == IndexSet::full(g.order())) return true;
    IndexSet all_but_zero = IndexSet::full(g.order());
    all_but_zero.erase(0);
    return s == all_but_zero && g.exponent() <= 2;
}

/// Connectivity by traversal; the authoritative answer.
inline bool is_connected(const GroupSpec& g, const IndexSet& s) {
    int n = g.order();
    if (n <= 1) return true;
    IndexSet seen(n);
    seen.insert(0);
    std::vector<int> stack{0};
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        s.for_each([&](int sum) {
            int w = g.sub(sum, v);
            if (!seen.contains(w)) {
                seen.insert(w);
                ++cnt;
                stack.push_back(w);
            }
        });
    }
    return cnt == n;
}

/// The coset-containment criterion for connectivity: every containment of
/// S in a coset of a proper subgroup must be the exceptional one (non-zero
/// coset of an index-2 subgroup).  Tested against the traversal answer;
/// any disagreement is surfaced by the verification harness.
inline bool connected_by_coset_criterion(const GroupSpec& g, const IndexSet& s,
                                          const std::vector<Subgroup>& subs) {
    if (s.empty()) return subs.size() <= 1; // only the trivial group lacks proper subgroups
    int s0 = s.first();
    IndexSet shifted = translate(g, s, g.neg(s0));
    for (const auto& h : subs) {
        if (h.order() == g.order()) continue;
        if (!shifted.is_subset_of(h.members)) continue;
        bool exceptional = 2 * h.order() == g.order() && !h.contains(s0);
        if (!exceptional) return false;
    }
    return true;
}

inline bool connected_by_coset_criterion(const GroupSpec& g, const IndexSet& s) {
    return connected_by_coset_criterion(g, s, all_subgroups(g));
}

/// Exact vertex connectivity via the max-flow oracle.
inline int kappa_oracle(const GroupSpec& g, const IndexSet& s, int max_order = 64) {
    if (g.order() > max_order)
        throw ResourceLimitError("kappa_oracle: group order exceeds configured bound");
    AdditionCayleyGraph graph(g, s);
    return vertex_connectivity(graph.simple());
}

/// A vertex set whose boundary is a minimum cut and whose closed
/// neighborhood leaves something out.
struct Fragment {
    IndexSet vertices;
    IndexSet boundary;
    IndexSet outside;
};

inline Fragment make_fragment(const GroupSpec& g, const IndexSet& s, const IndexSet& vertices) {
    IndexSet nb = diffset(g, s, vertices);
    Fragment f;
    f.vertices = vertices;
    f.boundary = nb - vertices;
    f.outside = (nb | vertices).complement();
    return f;
}

/// One fragment per connected component of the graph minus each discovered
/// minimum cut; deduplicated, sorted by (size, member order).
inline std::vector<Fragment> enumerate_fragments(const GroupSpec& g, const IndexSet& s,
                                                 bool exhaustive = false) {
    AdditionCayleyGraph graph(g, s);
    if (is_complete_graph(graph.simple()))
        throw PreconditionError("complete graph has no fragments");
    int kappa = vertex_connectivity(graph.simple());
    auto cuts = minimum_vertex_cuts(graph.simple(), kappa, exhaustive);

    std::vector<Fragment> out;
    auto add = [&](const IndexSet& comp) {
        for (const auto& f : out)
            if (f.vertices == comp) return;
        out.push_back(make_fragment(g, s, comp));
    };
    for (const auto& cut : cuts)
        for (const auto& comp : connected_components(graph.simple(), cut)) add(comp);

    std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) {
        int ca = a.vertices.count(), cb = b.vertices.count();
        if (ca != cb) return ca < cb;
        return lex_members_less(a.vertices, b.vertices);
    });
    return out;
}

/// The addition Cayley graph of the quotient G/H with connection set
/// phi_H(S), realized on coset representatives: cosets i, j are adjacent
/// when rep_i + rep_j lands in S+H.  No quotient GroupSpec is built.
inline SimpleGraph quotient_cayley_graph(const GroupSpec& g, const IndexSet& s_plus_h,
                                         const CosetSpace& cs) {
    SimpleGraph q;
    q.n = cs.num_cosets();
    q.adj.assign(q.n, IndexSet(q.n));
    for (int i = 0; i < q.n; ++i)
        for (int j = i + 1; j < q.n; ++j)
            if (s_plus_h.contains(g.add(cs.rep(i), cs.rep(j)))) {
                q.adj[i].insert(j);
                q.adj[j].insert(i);
            }
    return q;
}

/// DOT dump with loops as self-edges.
inline std::string to_dot(const AdditionCayleyGraph& graph, const std::string& name = "cayley") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < graph.simple().n; ++v) {
        graph.simple().adj[v].for_each([&](int w) {
            if (w > v) os << "  " << v << " -- " << w << ";\n";
        });
        if (graph.loops().contains(v)) os << "  " << v << " -- " << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace acg
