// Small end-to-end tour of the library: build a group, compute the
// connectivity report by formula, cross-check it against the max-flow
// oracle, and inspect the witnessing fragment.
#include <iostream>

#include "acg/connectivity.hpp"
#include "acg/graph.hpp"
#include "acg/text.hpp"

int main() {
    using namespace acg;

    // Z8 with the singleton connection set {1}: a perfect matching.
    GroupSpec g = make_group({8});
    IndexSet s(g.order());
    s.insert(1);

    KappaReport rep = kappa_formula(g, s);
    std::cout << "kappa(" << group_to_string(g) << ", " << subset_to_string(g, s)
              << ") = " << rep.kappa << " via " << branch_name(rep.branch) << "\n";
    if (rep.witness) {
        std::cout << "witness subgroup " << subset_to_string(g, rep.witness->subgroup.members)
                  << ", score " << rep.witness->score << "\n";
    }
    if (rep.fragment) {
        std::cout << "fragment " << subset_to_string(g, rep.fragment->vertices) << " with boundary "
                  << subset_to_string(g, rep.fragment->boundary) << "\n";
    }

    int oracle = kappa_oracle(g, s);
    std::cout << "oracle agrees: " << (oracle == rep.kappa ? "yes" : "no") << "\n";
    return oracle == rep.kappa ? 0 : 1;
}
