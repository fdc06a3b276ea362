#pragma once

#include <json.hpp>

#include "connectivity.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "index_set.hpp"
#include "sumset.hpp"

namespace acg {

using ordered_json = nlohmann::ordered_json;

inline ordered_json set_to_json(const IndexSet& s) {
    ordered_json a = ordered_json::array();
    s.for_each([&](int x) { a.push_back(x); });
    return a;
}

inline IndexSet set_from_json(const ordered_json& j, int universe) {
    if (!j.is_array()) throw ParseError("expected an array of element indices");
    IndexSet s(universe);
    for (const auto& v : j) {
        int x = v.get<int>();
        if (x < 0 || x >= universe) throw ParseError("element index out of range");
        s.insert(x);
    }
    return s;
}

/// Stable report document; field order and null conventions are part of
/// the interface, so round-tripping a dump is byte-identical.
inline ordered_json report_to_json(const KappaReport& rep) {
    ordered_json j;
    j["group"] = rep.group.factors();
    j["subset"] = set_to_json(rep.subset);
    j["kappa"] = rep.kappa;
    j["branch"] = branch_name(rep.branch);
    j["eta"] = rep.eta ? ordered_json(*rep.eta) : ordered_json(nullptr);
    j["lambda"] = rep.lambda ? ordered_json(*rep.lambda) : ordered_json(nullptr);
    j["lambda_star"] = rep.lambda_star ? ordered_json(*rep.lambda_star) : ordered_json(nullptr);
    if (rep.witness) {
        ordered_json w;
        w["subgroup"] = set_to_json(rep.witness->subgroup.members);
        if (rep.witness->witness) {
            w["G0"] = set_to_json(rep.witness->witness->upper.members);
            w["g0"] = rep.witness->witness->rep;
        } else {
            w["G0"] = nullptr;
            w["g0"] = nullptr;
        }
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    if (rep.fragment) {
        ordered_json f;
        f["vertices"] = set_to_json(rep.fragment->vertices);
        f["boundary"] = set_to_json(rep.fragment->boundary);
        j["fragment"] = std::move(f);
    } else {
        j["fragment"] = nullptr;
    }
    return j;
}

inline Branch branch_from_name(const std::string& name) {
    if (name == "complete") return Branch::Complete;
    if (name == "degree") return Branch::Degree;
    if (name == "eta") return Branch::Eta;
    if (name == "lambda-star") return Branch::LambdaStar;
    throw ParseError("unknown branch tag '" + name + "'");
}

inline KappaReport report_from_json(const ordered_json& j) {
    KappaReport rep;
    rep.group = GroupSpec(j.at("group").get<std::vector<int>>());
    int n = rep.group.order();
    rep.subset = set_from_json(j.at("subset"), n);
    rep.kappa = j.at("kappa").get<int>();
    rep.branch = branch_from_name(j.at("branch").get<std::string>());
    auto opt_int = [&](const char* key) -> std::optional<int> {
        const auto& v = j.at(key);
        if (v.is_null()) return std::nullopt;
        return v.get<int>();
    };
    rep.eta = opt_int("eta");
    rep.lambda = opt_int("lambda");
    rep.lambda_star = opt_int("lambda_star");

    const auto& w = j.at("witness");
    if (!w.is_null()) {
        FamilyEntry e;
        e.subgroup = make_subgroup(rep.group, set_from_json(w.at("subgroup"), n));
        e.score = int(saturate(rep.group, rep.subset, e.subgroup).count()) - e.subgroup.order();
        if (!w.at("G0").is_null()) {
            e.family = FamilyTag::Lstar;
            e.witness = LWitness{make_subgroup(rep.group, set_from_json(w.at("G0"), n)),
                                 w.at("g0").get<int>()};
        } else {
            e.family = FamilyTag::H;
        }
        rep.witness = std::move(e);
    }

    const auto& f = j.at("fragment");
    if (!f.is_null()) {
        Fragment frag = make_fragment(rep.group, rep.subset, set_from_json(f.at("vertices"), n));
        IndexSet boundary = set_from_json(f.at("boundary"), n);
        if (boundary != frag.boundary) throw ParseError("fragment boundary does not match");
        rep.fragment = std::move(frag);
    }
    return rep;
}

inline std::string report_to_string(const KappaReport& rep) { return report_to_json(rep).dump(); }

inline KappaReport report_from_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    try {
        return report_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

} // namespace acg
