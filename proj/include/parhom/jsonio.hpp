#pragma once

// JSON serialization for certificates and reports. Key order is fixed by
// construction (ordered_json), big integers travel as decimal strings, and
// input files are identified by FNV-1a digests so documents can embed what
// they were computed from.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parhom/gadget.hpp"
#include "parhom/graph.hpp"
#include "parhom/symmetry.hpp"

namespace parhom {

using ordered_json = nlohmann::ordered_json;

inline std::string fnv1a64_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xF];
    return out;
}

inline ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = g.vertex_names();
    auto& edges = j["edges"] = ordered_json::array();
    for (const auto& [u, v] : g.edge_names()) edges.push_back({u, v});
    return j;
}

inline Graph graph_from_json(const ordered_json& j) {
    std::vector<std::string> vs = j.at("vertices");
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.at("edges")) es.push_back({e.at(0), e.at(1)});
    return Graph::make(vs, es);
}

inline ordered_json plg_to_json(const PartiallyLabelledGraph& p) {
    ordered_json j;
    j["graph"] = graph_to_json(p.g);
    j["pins"] = ordered_json(p.pins);
    return j;
}

inline PartiallyLabelledGraph plg_from_json(const ordered_json& j) {
    std::map<std::string, std::string> pins = j.at("pins");
    return PartiallyLabelledGraph::make(graph_from_json(j.at("graph")), pins);
}

inline ordered_json sigma_to_json(const SigmaTable& t) {
    auto out = ordered_json::array();
    for (const auto& [key, odd] : t.parity) {
        ordered_json row;
        row["a"] = key.first;
        row["b"] = key.second;
        row["parity"] = odd ? 1 : 0;
        auto it = t.exact.find(key);
        if (it != t.exact.end()) row["exact"] = it->second.str();
        out.push_back(std::move(row));
    }
    return out;
}

inline SigmaTable sigma_from_json(const ordered_json& j) {
    SigmaTable t;
    for (const auto& row : j) {
        std::pair<std::string, std::string> key{row.at("a"), row.at("b")};
        t.parity[key] = row.at("parity").get<int>() != 0;
        if (row.contains("exact")) t.exact[key] = bigint(row.at("exact").get<std::string>());
    }
    return t;
}

// The host field is informational: verification always recomputes against
// the host the caller supplies.
inline ordered_json gadget_to_json(const HardnessGadget& g,
                                   const ordered_json& host = ordered_json()) {
    ordered_json j;
    j["schema"] = "parhom-gadget-1";
    if (!host.is_null()) j["host"] = host;
    j["i"] = g.i;
    j["s"] = g.s;
    j["j1"] = plg_to_json(g.j1.j);
    j["j1"]["root"] = g.j1.x;
    j["j2"] = plg_to_json(g.j2.j);
    j["j2"]["root"] = g.j2.x;
    j["j3"] = plg_to_json(g.j3.j);
    j["j3"]["y"] = g.j3.y;
    j["j3"]["z"] = g.j3.z;
    j["omega_y"] = g.omega_y;
    j["omega_z"] = g.omega_z;
    j["sigma"] = sigma_to_json(g.sigma);
    return j;
}

inline HardnessGadget gadget_from_json(const ordered_json& doc) {
    // accept either a bare certificate or a report envelope holding one
    const ordered_json& j = doc.contains("payload") ? doc.at("payload") : doc;
    HardnessGadget g;
    g.i = j.at("i");
    g.s = j.at("s");
    g.j1 = {plg_from_json(j.at("j1")), j.at("j1").at("root")};
    g.j2 = {plg_from_json(j.at("j2")), j.at("j2").at("root")};
    g.j3 = {plg_from_json(j.at("j3")), j.at("j3").at("y"), j.at("j3").at("z")};
    g.omega_y = j.at("omega_y").get<std::vector<std::string>>();
    g.omega_z = j.at("omega_z").get<std::vector<std::string>>();
    g.sigma = sigma_from_json(j.at("sigma"));
    return g;
}

inline ordered_json chain_to_json(const ReductionChain& chain) {
    ordered_json j;
    j["steps"] = ordered_json::array();
    for (const auto& step : chain.steps) {
        ordered_json s;
        s["vertices"] = step.graph.n();
        s["involution"] = ordered_json(step.involution.as_name_map(step.graph));
        s["fixed"] = step.involution.fixed_point_names(step.graph);
        j["steps"].push_back(std::move(s));
    }
    j["result"] = graph_to_json(chain.result);
    return j;
}

}  // namespace parhom
