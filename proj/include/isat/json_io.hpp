#pragma once

#include <string>

#include <json.hpp>

#include "isat/assemble.hpp"
#include "isat/detect.hpp"
#include "isat/graph6.hpp"
#include "isat/territory.hpp"

namespace isat {

using json = nlohmann::json;

inline json target_to_json(const TargetPattern& t) {
    return {{"kind", t.kind == TargetPattern::Kind::cycle ? "cycle" : "path"}, {"size", t.size}};
}

inline json edge_pairs_to_json(const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

inline json scan_to_json(const EdgeScan& s) {
    return {{"checked", s.checked},
            {"critical", s.critical},
            {"failing_edges", edge_pairs_to_json(s.failing)},
            {"budget_exceeded", edge_pairs_to_json(s.budget_exceeded)}};
}

inline json report_to_json(const VerificationReport& r) {
    json j{{"target", target_to_json(r.target)},
           {"free", r.free},
           {"witness", r.witness ? json(*r.witness) : json(nullptr)},
           {"deletion", scan_to_json(r.deletion)},
           {"addition", scan_to_json(r.addition)},
           {"induced_saturated", r.induced_saturated},
           {"budget_exceeded", r.free_budget_exceeded || !r.deletion.budget_exceeded.empty() ||
                                   !r.addition.budget_exceeded.empty()},
           {"stats", {{"nodes", r.nodes}, {"millis", r.millis}}}};
    return j;
}

/// Drops wall-clock fields so reports can be compared across runs.
inline void strip_timing(json& j) {
    if (j.is_object()) {
        j.erase("millis");
        for (auto& [key, value] : j.items()) strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_timing(value);
    }
}

inline json territory_to_json(const Territory& T) {
    json labels = json::object();
    for (std::size_t v = 0; v < T.graph.labels.size(); ++v)
        if (!T.graph.labels[v].empty()) labels[std::to_string(v)] = T.graph.labels[v];
    return {{"t", T.t},
            {"edges", edge_pairs_to_json(T.graph.edges())},
            {"boundary", T.boundary.verts},
            {"labels", labels}};
}

inline Territory territory_from_json(const json& j) {
    Territory T;
    T.t = j.at("t").get<int>();
    int n = 0;
    for (const auto& e : j.at("edges"))
        n = std::max({n, e.at(0).get<int>() + 1, e.at(1).get<int>() + 1});
    for (const auto& v : j.at("boundary")) n = std::max(n, v.get<int>() + 1);
    T.graph = Graph(n);
    for (const auto& e : j.at("edges")) T.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& v : j.at("boundary")) T.boundary.verts.push_back(v.get<int>());
    if (j.contains("labels")) {
        T.graph.labels.resize(static_cast<std::size_t>(n));
        for (const auto& [key, value] : j.at("labels").items())
            T.graph.labels[static_cast<std::size_t>(std::stoi(key))] = value.get<std::string>();
    }
    // loaded territories are finished artifacts; nothing grows them further
    T.expanded = true;
    T.rings = -1;
    return T;
}

inline json audit_to_json(const AuditReport& a) {
    return {{"pass", a.pass},
            {"gamma_induced", a.gamma_induced},
            {"boundaries_match", a.boundaries_match},
            {"interiors_anticomplete", a.interiors_anticomplete},
            {"interiors_clear_of_gamma", a.interiors_clear_of_gamma},
            {"violations", a.violations}};
}

inline json manifest_to_json(const Assembly& a, const FreenessProbe* freeness = nullptr,
                             const M3ProbeReport* m3 = nullptr,
                             const Lemma43Report* lemma43 = nullptr) {
    json cycles = json::array();
    for (const auto& rec : a.records)
        cycles.push_back({{"class", rec.cls},
                          {"length", rec.length},
                          {"territory_vertices", rec.territory_vertices}});
    json audit = audit_to_json(a.audit);
    audit["girth_configured"] = a.base.girth;
    audit["girth_required"] = a.base.girth_required;
    audit["girth_full_scale"] =
        std::to_string(a.t) + "^" + std::to_string(5 * a.t) + " = " +
        (full_scale_girth(a.t) >= (1LL << 62) ? std::string("huge")
                                               : std::to_string(full_scale_girth(a.t)));
    audit["meets_full_scale"] = a.base.girth >= full_scale_girth(a.t);
    if (freeness) {
        audit["freeness_probe"] = {{"attempted", freeness->attempted},
                                   {"free", freeness->free},
                                   {"outside_guarantee", freeness->outside_guarantee}};
    }
    if (m3) {
        audit["m3_criticality_probe"] = {
            {"edges", m3->entries.size()}, {"passes", m3->passes}, {"all_pass", m3->all_pass()}};
    }
    if (lemma43) {
        audit["lemma43_probe"] = {{"len_cap", lemma43->len_cap},
                                  {"sampled", lemma43->sampled},
                                  {"intersecting", lemma43->intersecting},
                                  {"violations", lemma43->violations}};
    }
    return {{"base", a.base.name},
            {"t", a.t},
            {"provider", a.provider},
            {"cycles", cycles},
            {"audit", audit},
            {"graph6", encode_graph6(a.result)}};
}

}  // namespace isat
