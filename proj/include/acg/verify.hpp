#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "group_enum.hpp"
#include "index_set.hpp"
#include "json_io.hpp"
#include "sumset.hpp"

namespace acg {

struct VerifyConfig {
    int max_order = 16;
    int sample_threshold = 16;  // orders above this get sampled subsets
    long long sample_count = 100000;
    uint64_t seed = 0;
    int jobs = 1;               // 0 = hardware concurrency
    int oracle_max_order = 64;
};

struct VerifySummary {
    long long groups = 0;
    long long instances = 0;
    long long mismatches = 0;
    long long theorem2_violations = 0;
    long long simple_violations = 0;
    long long corollary_failures = 0;
    long long fragment_violations = 0;
    long long connectivity_criterion_mismatches = 0;
    long long completeness_mismatches = 0;

    bool clean() const {
        return mismatches == 0 && theorem2_violations == 0 && simple_violations == 0 &&
               corollary_failures == 0 && fragment_violations == 0 &&
               connectivity_criterion_mismatches == 0 && completeness_mismatches == 0;
    }

    VerifySummary& operator+=(const VerifySummary& o) {
        groups += o.groups;
        instances += o.instances;
        mismatches += o.mismatches;
        theorem2_violations += o.theorem2_violations;
        simple_violations += o.simple_violations;
        corollary_failures += o.corollary_failures;
        fragment_violations += o.fragment_violations;
        connectivity_criterion_mismatches += o.connectivity_criterion_mismatches;
        completeness_mismatches += o.completeness_mismatches;
        return *this;
    }

    bool operator==(const VerifySummary&) const = default;
};

struct VerifyResult {
    VerifySummary summary;
    std::vector<std::string> counterexamples; // JSON lines, deterministic order
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// k-th sampled subset mask for a group; a pure function of (seed, group,
/// k), so any partition of the sample range across workers sees the same
/// stream.
inline uint64_t sampled_mask(uint64_t seed, int group_idx, long long k, int n) {
    uint64_t x = splitmix64(seed + splitmix64(uint64_t(group_idx) + 1) + uint64_t(k) * 2);
    if (n < 64) x &= (uint64_t{1} << n) - 1;
    return x;
}

inline IndexSet mask_to_set(uint64_t mask, int n) {
    IndexSet s(n);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) s.insert(i);
    return s;
}

struct InstanceChecker {
    const ConnectivityAnalyzer& an;
    VerifySummary& sum;
    std::vector<std::string>& lines;

    void dump(const IndexSet& s, const char* kind, const KappaReport* rep, int oracle,
              const std::string& detail = "") {
        ordered_json j;
        j["group"] = an.group().factors();
        j["subset"] = set_to_json(s);
        j["kind"] = kind;
        j["oracle"] = oracle;
        j["report"] = rep ? report_to_json(*rep) : ordered_json(nullptr);
        if (!detail.empty()) j["detail"] = detail;
        lines.push_back(j.dump());
    }

    void check(const IndexSet& s) {
        const GroupSpec& g = an.group();
        ++sum.instances;

        AdditionCayleyGraph graph(g, s);
        SweepOutcome sweep_outcome = sweep_connectivity(graph.simple());
        int oracle = sweep_outcome.kappa;
        int degree = s.count();

        ConnectivityAnalyzer::InstanceEvaluation ev;
        try {
            ev = an.evaluate(s);
        } catch (const TheoremViolationError& e) {
            ++sum.theorem2_violations;
            dump(s, "theorem2_violation", nullptr, oracle, e.what());
            return;
        }
        const KappaReport& rep = ev.report;

        if (rep.kappa != oracle) {
            ++sum.mismatches;
            dump(s, "mismatch", &rep, oracle);
        }

        // Theorem 2 branch consistency: a certified witness below the degree
        // forces the coset-bound family to score at least |S|.
        if (rep.branch == Branch::LambdaStar && rep.eta && *rep.eta < degree) {
            ++sum.theorem2_violations;
            dump(s, "theorem2_branch", &rep, oracle);
        }

        if (oracle < degree) {
            if (!ev.simple || *ev.simple != oracle) {
                ++sum.simple_violations;
                dump(s, "theorem_simple", &rep, oracle);
            }
        }

        auto check_cor = [&](const CorollaryCheck& c, const char* name) {
            if (c.applicable && !c.holds) {
                ++sum.corollary_failures;
                dump(s, name, &rep, oracle);
            }
        };
        check_cor(ev.corollaries.half_degree, "corollary_half_degree");
        check_cor(ev.corollaries.smallest_prime, "corollary_smallest_prime");
        check_cor(ev.corollaries.below_degree_iff, "corollary_below_degree_iff");
        check_cor(ev.corollaries.doubles_simple, "corollary_doubles_simple");

        // The no-(Z4+Z2) / small-S corollary of the branch theorem.
        bool proper = degree < g.order();
        if (proper && ev.connected &&
            (2 * degree <= g.order() || !an.has_z4z2_subgroup())) {
            int expect = degree;
            if (rep.eta) expect = std::min(expect, *rep.eta);
            if (rep.kappa != expect) {
                ++sum.corollary_failures;
                dump(s, "corollary_no_z4z2", &rep, oracle);
            }
        }

        // Fragment suite: every oracle fragment must be periodic with the
        // right score, and the quotient graph maximally connected.
        if (proper && oracle < degree && !is_complete_graph(graph.simple())) {
            auto cuts = cuts_from_sweep(graph.simple(), sweep_outcome);
            for (const auto& cut : cuts) {
                for (const auto& comp : connected_components(graph.simple(), cut)) {
                    Fragment f = make_fragment(g, s, comp);
                    IndexSet nb = diffset(g, s, f.vertices);
                    Subgroup h = period(g, nb);
                    bool ok = f.vertices.is_subset_of(nb);
                    ok = ok && saturate(g, f.vertices, h) == f.vertices;
                    IndexSet sat = saturate(g, s, h);
                    ok = ok && sat.count() - h.order() == oracle;
                    if (ok) {
                        CosetSpace cs(g, h);
                        SimpleGraph q = quotient_cayley_graph(g, sat, cs);
                        ok = vertex_connectivity(q) == sat.count() / h.order() - 1;
                    }
                    if (!ok) {
                        ++sum.fragment_violations;
                        dump(s, "fragment_suite", &rep, oracle,
                             "fragment " + std::to_string(f.vertices.first()));
                    }
                }
            }
        }

        if (connected_by_coset_criterion(g, s, an.subgroups()) != ev.connected) {
            ++sum.connectivity_criterion_mismatches;
            dump(s, "connectivity_criterion", &rep, oracle);
        }
        if (is_complete(g, s) != is_complete_graph(graph.simple())) {
            ++sum.completeness_mismatches;
            dump(s, "completeness_criterion", &rep, oracle);
        }
    }
};

struct WorkUnit {
    int group_idx;
    long long lo, hi; // mask range (exhaustive) or sample index range
    bool sampled;
};

} // namespace detail

/// Sweeps every abelian group type of order <= max_order and every proper
/// subset (exhaustively up to the sample threshold, seeded samples above),
/// running the whole per-instance invariant suite.  Results are merged in
/// work-unit order, so summaries and counterexample files are byte-stable
/// across worker counts.
inline VerifyResult run_verification(const VerifyConfig& cfg) {
    if (cfg.max_order < 1) throw PreconditionError("verify: max_order must be >= 1");
    if (cfg.max_order > cfg.oracle_max_order)
        throw ResourceLimitError("verify: max_order exceeds the oracle bound");

    auto types = abelian_group_types(cfg.max_order);
    std::vector<std::unique_ptr<ConnectivityAnalyzer>> analyzers;
    analyzers.reserve(types.size());
    for (const auto& f : types)
        analyzers.push_back(std::make_unique<ConnectivityAnalyzer>(GroupSpec(f)));

    const long long chunk = 8192;
    std::vector<detail::WorkUnit> units;
    for (size_t gi = 0; gi < types.size(); ++gi) {
        int n = analyzers[gi]->group().order();
        bool sampled = n > cfg.sample_threshold;
        long long total =
            sampled ? cfg.sample_count : (n >= 63 ? 0 : (1ll << n) - 1); // proper subsets only
        if (!sampled && n >= 63)
            throw ResourceLimitError("verify: exhaustive sweep infeasible at this order");
        for (long long lo = 0; lo < total; lo += chunk)
            units.push_back({int(gi), lo, std::min(total, lo + chunk), sampled});
        if (total == 0) units.push_back({int(gi), 0, 0, sampled});
    }

    struct UnitResult {
        VerifySummary sum;
        std::vector<std::string> lines;
    };
    std::vector<UnitResult> results(units.size());

    auto run_unit = [&](const detail::WorkUnit& u, UnitResult& out) {
        const ConnectivityAnalyzer& an = *analyzers[u.group_idx];
        int n = an.group().order();
        detail::InstanceChecker checker{an, out.sum, out.lines};
        uint64_t full = (n >= 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        for (long long k = u.lo; k < u.hi; ++k) {
            uint64_t mask;
            if (u.sampled) {
                mask = detail::sampled_mask(cfg.seed, u.group_idx, k, n);
                if (mask == full) continue; // S must be proper
            } else {
                mask = uint64_t(k);
            }
            checker.check(detail::mask_to_set(mask, n));
        }
    };

    int jobs = cfg.jobs > 0 ? cfg.jobs : int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < units.size(); ++i) run_unit(units[i], results[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::string> errors(jobs);
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1))
                        run_unit(units[i], results[i]);
                } catch (const std::exception& e) {
                    errors[w] = e.what();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (!e.empty()) throw Error("verify worker failed: " + e);
    }

    VerifyResult out;
    out.summary.groups = (long long)types.size();
    for (auto& r : results) {
        out.summary += r.sum;
        for (auto& l : r.lines) out.counterexamples.push_back(std::move(l));
    }
    return out;
}

inline ordered_json summary_to_json(const VerifySummary& s) {
    ordered_json j;
    j["groups"] = s.groups;
    j["instances"] = s.instances;
    j["mismatches"] = s.mismatches;
    j["theorem2_violations"] = s.theorem2_violations;
    j["simple_violations"] = s.simple_violations;
    j["corollary_failures"] = s.corollary_failures;
    j["fragment_violations"] = s.fragment_violations;
    j["connectivity_criterion_mismatches"] = s.connectivity_criterion_mismatches;
    j["completeness_mismatches"] = s.completeness_mismatches;
    return j;
}

} // namespace acg
