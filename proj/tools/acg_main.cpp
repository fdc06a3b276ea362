#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "acg/connectivity.hpp"
#include "acg/graph.hpp"
#include "acg/group.hpp"
#include "acg/json_io.hpp"
#include "acg/text.hpp"
#include "acg/verify.hpp"

namespace {

using namespace acg;

struct InstanceArgs {
    std::string group_text;
    std::string set_text;
    std::string format = "human";
    std::string dump_dot;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("--group", args.group_text, "group factors, e.g. 4,2 (empty = trivial)")
        ->required();
    cmd->add_option("--set", args.set_text,
                    "connection set, e.g. {1,3} or {(1,0),(0,1)} or complement:{...}")
        ->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--dump-dot", args.dump_dot, "write the instance graph in DOT format");
}

void maybe_dump_dot(const GroupSpec& g, const IndexSet& s, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    out << to_dot(build_graph(g, s));
}

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

std::string entry_str(const GroupSpec& g, const FamilyEntry& e) {
    std::string out = subset_to_string(g, e.subgroup.members) + " score " + std::to_string(e.score);
    if (e.witness) {
        out += " via G0=" + subset_to_string(g, e.witness->upper.members) +
               " g0=" + element_to_string(g, e.witness->rep);
    }
    return out;
}

ordered_json entry_json(const FamilyEntry& e) {
    ordered_json j;
    j["subgroup"] = set_to_json(e.subgroup.members);
    j["score"] = e.score;
    if (e.witness) {
        j["G0"] = set_to_json(e.witness->upper.members);
        j["g0"] = e.witness->rep;
    }
    return j;
}

int cmd_kappa(const InstanceArgs& args, bool check) {
    GroupSpec g = parse_group(args.group_text);
    IndexSet s = parse_subset(g, args.set_text);
    maybe_dump_dot(g, s, args.dump_dot);

    KappaReport rep = kappa_formula(g, s);
    std::optional<int> oracle;
    if (check) oracle = kappa_oracle(g, s);

    if (args.format == "json") {
        if (check) {
            ordered_json j;
            j["report"] = report_to_json(rep);
            j["oracle"] = *oracle;
            j["agree"] = *oracle == rep.kappa;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << report_to_string(rep) << "\n";
        }
    } else {
        std::cout << "group: " << group_to_string(g) << "  order " << g.order() << "\n";
        std::cout << "set: " << subset_to_string(g, s) << "  size " << s.count() << "\n";
        std::cout << "kappa: " << rep.kappa << "  branch: " << branch_name(rep.branch) << "\n";
        std::cout << "eta: " << opt_str(rep.eta) << "  lambda: " << opt_str(rep.lambda)
                  << "  lambda_star: " << opt_str(rep.lambda_star) << "\n";
        if (rep.witness) std::cout << "witness: " << entry_str(g, *rep.witness) << "\n";
        if (rep.fragment)
            std::cout << "fragment: vertices " << subset_to_string(g, rep.fragment->vertices)
                      << " boundary " << subset_to_string(g, rep.fragment->boundary) << "\n";
        if (check)
            std::cout << "oracle: " << *oracle << "  agree: "
                      << (*oracle == rep.kappa ? "yes" : "NO") << "\n";
    }
    return (check && *oracle != rep.kappa) ? 1 : 0;
}

int cmd_families(const InstanceArgs& args) {
    GroupSpec g = parse_group(args.group_text);
    IndexSet s = parse_subset(g, args.set_text);
    maybe_dump_dot(g, s, args.dump_dot);

    ConnectivityAnalyzer an(g);
    auto h = an.h_family(s);
    auto l = an.l_family(s);
    auto lstar = an.lstar_family(s);

    if (args.format == "json") {
        ordered_json j;
        j["group"] = g.factors();
        j["subset"] = set_to_json(s);
        for (auto [name, fam] :
             {std::pair{"h_family", &h}, {"l_family", &l}, {"lstar_family", &lstar}}) {
            ordered_json arr = ordered_json::array();
            for (const auto& e : *fam) arr.push_back(entry_json(e));
            j[name] = std::move(arr);
        }
        auto opt = [](std::optional<int> v) {
            return v ? ordered_json(*v) : ordered_json(nullptr);
        };
        j["eta"] = opt(an.eta(s));
        j["lambda"] = opt(an.lambda(s));
        j["lambda_star"] = opt(an.lambda_star(s));
        std::cout << j.dump() << "\n";
    } else {
        auto print_family = [&](const char* name, const std::vector<FamilyEntry>& fam) {
            std::cout << name << " (" << fam.size() << " entries)";
            if (fam.empty()) {
                std::cout << ": none\n";
                return;
            }
            std::cout << ":\n";
            for (const auto& e : fam) std::cout << "  " << entry_str(g, e) << "\n";
        };
        print_family("H-family", h);
        print_family("L-family", l);
        print_family("Lstar-family", lstar);
        std::cout << "eta: " << opt_str(an.eta(s)) << "  lambda: " << opt_str(an.lambda(s))
                  << "  lambda_star: " << opt_str(an.lambda_star(s)) << "\n";
    }
    return 0;
}

int cmd_fragments(const InstanceArgs& args, bool exhaustive) {
    GroupSpec g = parse_group(args.group_text);
    IndexSet s = parse_subset(g, args.set_text);
    maybe_dump_dot(g, s, args.dump_dot);

    auto frags = enumerate_fragments(g, s, exhaustive);
    int kappa = kappa_oracle(g, s);

    if (args.format == "json") {
        ordered_json j;
        j["group"] = g.factors();
        j["subset"] = set_to_json(s);
        j["kappa"] = kappa;
        ordered_json arr = ordered_json::array();
        for (const auto& f : frags) {
            // re-verify against the graph before printing
            IndexSet nb = diffset(g, s, f.vertices);
            if ((nb - f.vertices) != f.boundary || int(f.boundary.count()) != kappa)
                throw TheoremViolationError("fragment failed re-verification");
            ordered_json fj;
            fj["vertices"] = set_to_json(f.vertices);
            fj["boundary"] = set_to_json(f.boundary);
            arr.push_back(std::move(fj));
        }
        j["fragments"] = std::move(arr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "kappa: " << kappa << "  fragments: " << frags.size() << "\n";
        for (const auto& f : frags) {
            IndexSet nb = diffset(g, s, f.vertices);
            if ((nb - f.vertices) != f.boundary || int(f.boundary.count()) != kappa)
                throw TheoremViolationError("fragment failed re-verification");
            std::cout << "  vertices " << subset_to_string(g, f.vertices) << " boundary "
                      << subset_to_string(g, f.boundary) << " outside "
                      << subset_to_string(g, f.outside) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& format,
               const std::string& counterexample_path) {
    VerifyResult res = run_verification(cfg);

    if (!counterexample_path.empty()) {
        std::ofstream out(counterexample_path);
        for (const auto& line : res.counterexamples) out << line << "\n";
    }

    if (format == "json") {
        std::cout << summary_to_json(res.summary).dump() << "\n";
    } else {
        const auto& s = res.summary;
        std::cout << "groups: " << s.groups << "\ninstances: " << s.instances
                  << "\nmismatches: " << s.mismatches
                  << "\ntheorem2_violations: " << s.theorem2_violations
                  << "\nsimple_violations: " << s.simple_violations
                  << "\ncorollary_failures: " << s.corollary_failures
                  << "\nfragment_violations: " << s.fragment_violations
                  << "\nconnectivity_criterion_mismatches: "
                  << s.connectivity_criterion_mismatches
                  << "\ncompleteness_mismatches: " << s.completeness_mismatches
                  << "\nclean: " << (s.clean() ? "yes" : "NO") << "\n";
    }
    if (!counterexample_path.empty() && !res.counterexamples.empty())
        std::cerr << res.counterexamples.size() << " counterexamples written to "
                  << counterexample_path << "\n";
    return res.summary.clean() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"addition Cayley graph connectivity toolkit"};
    app.require_subcommand(1);

    InstanceArgs kappa_args;
    bool check = false;
    auto* kappa_cmd = app.add_subcommand("kappa", "compute the vertex connectivity of one instance");
    add_instance_options(kappa_cmd, kappa_args);
    kappa_cmd->add_flag("--check", check, "also run the max-flow oracle and compare");

    InstanceArgs fam_args;
    auto* fam_cmd = app.add_subcommand("families", "list the subgroup families and their scores");
    add_instance_options(fam_cmd, fam_args);

    InstanceArgs frag_args;
    bool exhaustive = false;
    auto* frag_cmd = app.add_subcommand("fragments", "list minimum-cut fragments of one instance");
    add_instance_options(frag_cmd, frag_args);
    frag_cmd->add_flag("--exhaustive", exhaustive,
                       "enumerate every minimum cut (small groups only)");

    VerifyConfig cfg;
    std::string verify_format = "human";
    std::string counterexample_path;
    auto* verify_cmd =
        app.add_subcommand("verify", "sweep groups and subsets against the oracle");
    verify_cmd->add_option("--max-order", cfg.max_order, "largest group order to sweep");
    verify_cmd->add_option("--sample-threshold", cfg.sample_threshold,
                           "orders above this get sampled subsets")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--sample-count", cfg.sample_count,
                           "number of sampled subsets per large group");
    verify_cmd->add_option("--seed", cfg.seed, "sampling seed");
    verify_cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");
    verify_cmd->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    verify_cmd->add_option("--counterexamples", counterexample_path,
                           "write counterexamples as JSON lines to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*kappa_cmd) return cmd_kappa(kappa_args, check);
        if (*fam_cmd) return cmd_families(fam_args);
        if (*frag_cmd) return cmd_fragments(frag_args, exhaustive);
        if (*verify_cmd) return cmd_verify(cfg, verify_format, counterexample_path);
    } catch (const acg::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const acg::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const acg::InvalidSpecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const acg::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const acg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
