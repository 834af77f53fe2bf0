// Compiler from independent-set instances to partially labelled instances
// over a host with a certified hardness gadget, a brute-force parity check
// for compiled instances at desk scale, the polynomial counting path for
// hosts whose involution-free reduct has at most one vertex, and the
// classifier tying the pipeline together.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parhom/gadget.hpp"
#include "parhom/graph.hpp"
#include "parhom/hom.hpp"
#include "parhom/structure.hpp"
#include "parhom/symmetry.hpp"

namespace parhom {

// Compiled vertex names embed the input names: anchors are "y@v" and
// "z@u~w", piece interiors get a copy tag in front. An input name crafted
// to collide with another compiled name is rejected, never merged.
struct CompiledInstance {
    PartiallyLabelledGraph j;
    std::map<std::string, std::string> vertex_anchors;
    std::map<std::pair<std::string, std::string>, std::string> edge_anchors;
    HardnessGadget gadget;
};

struct CompileBudget {
    CountBudget count;
    int max_instance_vertices = 8;
    int max_compiled_vertices = 120;
    int max_host_vertices = 16;
};

// Three-way outcome: accepted, rejected, or abandoned at a cap.
struct ParityVerdict {
    bool accepted = false;
    bool inconclusive = false;
    std::string reason;
};

namespace detail {

// Checks everything about a gadget certificate that is checkable without
// the host: piece shapes and the four properties on the stored tables.
// Recomputation against the host belongs to verify_hardness_gadget.
inline void require_certificate(const HardnessGadget& g) {
    auto bad = [](const std::string& why) {
        fail(errc::precondition, "gadget certificate rejected: " + why);
    };
    auto root_ok = [&](const PartiallyLabelledGraph& j, const std::string& r, const char* piece) {
        if (!j.g.has_vertex(r)) bad(std::string(piece) + ": root '" + r + "' missing");
        if (j.pins.count(r)) bad(std::string(piece) + ": root '" + r + "' is pinned");
        if (!j.g.is_connected()) bad(std::string(piece) + ": piece is disconnected");
    };
    root_ok(g.j1.j, g.j1.x, "J1");
    root_ok(g.j2.j, g.j2.x, "J2");
    if (g.j3.y == g.j3.z) bad("J3: distinguished vertices coincide");
    root_ok(g.j3.j, g.j3.y, "J3");
    root_ok(g.j3.j, g.j3.z, "J3");

    auto even_set = [&](const std::vector<std::string>& om, const std::string& member,
                        const char* which) {
        if (!std::is_sorted(om.begin(), om.end()) ||
            std::adjacent_find(om.begin(), om.end()) != om.end())
            bad(std::string(which) + " is not a sorted set");
        if (om.size() % 2 != 0) bad(std::string("property 1: |") + which + "| is odd");
        if (!std::binary_search(om.begin(), om.end(), member))
            bad("property 1: '" + member + "' not in " + which);
    };
    even_set(g.omega_y, g.i, "omega_y");
    even_set(g.omega_z, g.s, "omega_z");

    for (const auto& a : g.omega_y)
        for (const auto& b : g.omega_z) {
            auto it = g.sigma.parity.find({a, b});
            if (it == g.sigma.parity.end()) bad("sigma(" + a + "," + b + ") missing");
            if (a == g.i || b == g.s) {
                if (!it->second) bad("property 4: sigma(" + a + "," + b + ") is even");
            } else if (it->second) {
                bad("property 3: sigma(" + a + "," + b + ") is odd");
            }
        }
}

struct Assembly {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::map<std::string, std::string> pins;
    std::set<std::string> have;
    std::map<std::string, std::string> vertex_anchors;
    std::map<std::pair<std::string, std::string>, std::string> edge_anchors;

    // Anchors shared across copies register once; everything else must be
    // fresh, so an engineered name collision fails loudly.
    const std::string& name(const std::string& v, bool fresh) {
        if (have.insert(v).second)
            vs.push_back(v);
        else if (fresh)
            fail(errc::precondition, "compiled vertex name collision at '" + v + "'");
        return v;
    }
};

// Relabels one piece into the assembly: roots land on their anchors, every
// other vertex gets the copy tag in front, pins carry over.
inline void add_copy(Assembly& a, const PartiallyLabelledGraph& piece,
                     const std::map<std::string, std::string>& roots, const std::string& tag) {
    auto nm = [&](const std::string& t) {
        auto it = roots.find(t);
        return it == roots.end() ? tag + "@" + t : it->second;
    };
    for (const auto& t : piece.g.vertex_names())
        if (!roots.count(t)) a.name(tag + "@" + t, true);
    for (auto [u, v] : piece.g.edge_pairs())
        a.es.push_back({nm(piece.g.name(u)), nm(piece.g.name(v))});
    for (const auto& [t, target] : piece.pins) a.pins[nm(t)] = target;
}

// The edge stage: per input edge, two copies of J3 whose z-ends merge into
// z^e and whose y-ends land on the per-endpoint anchors y^v.
inline void edge_stage(Assembly& a, const Graph& g, const HardnessGadget& gad) {
    for (auto [ui, wi] : g.edge_pairs()) {
        auto u = g.name(ui);
        auto w = g.name(wi);
        if (w < u) std::swap(u, w);
        const auto ek = u + "~" + w;
        const auto ze = a.name("z@" + ek, true);
        a.edge_anchors[{u, w}] = ze;
        for (const auto& v : {u, w}) {
            const auto yv = a.name("y@" + v, false);
            a.vertex_anchors[v] = yv;
            add_copy(a, gad.j3.j, {{gad.j3.y, yv}, {gad.j3.z, ze}}, "3@" + ek + "@" + v);
        }
    }
}

inline CompiledInstance seal(Assembly a, const HardnessGadget& gad) {
    return {PartiallyLabelledGraph::make(Graph::make(std::move(a.vs), a.es), a.pins),
            std::move(a.vertex_anchors), std::move(a.edge_anchors), gad};
}

}  // namespace detail

// The edge stage alone: anchors exist only for vertices with an incident
// edge. A homomorphism from this core extends to the full instance in an
// odd number of ways exactly when it maps every anchor into its omega set.
inline CompiledInstance compile_is_core(const Graph& g, const HardnessGadget& gad) {
    detail::require_certificate(gad);
    detail::Assembly a;
    detail::edge_stage(a, g, gad);
    return detail::seal(std::move(a), gad);
}

// Full construction: the core plus one J1 copy per input vertex glued at
// y^v and one J2 copy per input edge glued at z^e.
inline CompiledInstance compile_is_instance(const Graph& g, const HardnessGadget& gad) {
    detail::require_certificate(gad);
    detail::Assembly a;
    detail::edge_stage(a, g, gad);
    for (const auto& v : g.vertex_names()) {
        const auto yv = a.name("y@" + v, false);
        a.vertex_anchors[v] = yv;
        detail::add_copy(a, gad.j1.j, {{gad.j1.x, yv}}, "1@" + v);
    }
    for (const auto& [e, ze] : a.edge_anchors)
        detail::add_copy(a, gad.j2.j, {{gad.j2.x, ze}}, "2@" + e.first + "~" + e.second);
    return detail::seal(std::move(a), gad);
}

// Checks the compiled instance against brute force: the number of
// independent sets of g and the number of homomorphisms from the compiled
// instance to the host must agree mod 2.
inline ParityVerdict verify_compiled_parity(const Graph& g, const HardnessGadget& gad,
                                            const Graph& h, const CompileBudget& budget = {}) {
    if (g.n() > budget.max_instance_vertices)
        return {false, true,
                "instance has " + std::to_string(g.n()) + " vertices, cap " +
                    std::to_string(budget.max_instance_vertices)};
    if (h.n() > budget.max_host_vertices)
        return {false, true,
                "host has " + std::to_string(h.n()) + " vertices, cap " +
                    std::to_string(budget.max_host_vertices)};
    auto inst = compile_is_instance(g, gad);
    if (inst.j.g.n() > budget.max_compiled_vertices)
        return {false, true,
                "compiled instance has " + std::to_string(inst.j.g.n()) + " vertices, cap " +
                    std::to_string(budget.max_compiled_vertices)};
    const bool is_odd = count_independent_sets(g).parity;
    bool hom_odd = false;
    try {
        hom_odd = count_pinned_parity(inst.j, h, budget.count);
    } catch (const error& e) {
        if (e.code != errc::cap_exceeded) throw;
        return {false, true, std::string("count aborted: ") + e.what()};
    }
    auto word = [](bool odd) { return odd ? "odd" : "even"; };
    if (is_odd != hom_odd)
        return {false, false,
                std::string("parity mismatch: independent sets are ") + word(is_odd) +
                    ", homomorphisms are " + word(hom_odd)};
    return {true, false, std::string("parities agree (both ") + word(is_odd) + ")"};
}

// Counting path for a host whose involution-free reduct has at most one
// vertex: the count only depends on whether g has vertices or edges.
inline HomCount trivial_count(const Graph& g, const Graph& hstar) {
    if (hstar.n() > 1)
        fail(errc::precondition,
             "reduced host has " + std::to_string(hstar.n()) + " vertices");
    if (hstar.n() == 0) return hom_count(g.n() == 0 ? 1 : 0);
    return hom_count(g.edge_count() == 0 ? 1 : 0);
}

enum class DichotomyClass { polynomial, parity_hard, conjectured_hard, inconclusive };

// chain.result is the involution-free reduct; hard_component and gadget
// are filled exactly when hardness is certified. An inconclusive verdict
// names the component the exhausted search ran on.
struct DichotomyVerdict {
    DichotomyClass kind;
    ReductionChain chain;
    std::optional<Graph> hard_component;
    std::optional<HardnessGadget> gadget;
    std::string detail;
};

inline DichotomyVerdict classify(const Graph& h, const GadgetBudget& budget = {}) {
    DichotomyVerdict v{DichotomyClass::polynomial,
                       involution_free_reduction(h, InvolutionPolicy::least, budget.symmetry),
                       std::nullopt,
                       std::nullopt,
                       ""};
    const Graph& hstar = v.chain.result;
    if (hstar.n() <= 1) {
        v.detail = "reduct has " + std::to_string(hstar.n()) +
                   (hstar.n() == 1 ? " vertex" : " vertices") + "; counting is polynomial";
        return v;
    }
    if (!is_square_free(hstar)) {
        v.kind = DichotomyClass::conjectured_hard;
        v.detail = "conjectured hard, out of theorem scope";
        return v;
    }
    // An involution-free graph with two vertices in distinct singleton
    // components would admit the swap, so a component below always exists.
    for (const auto& comp : hstar.connected_components()) {
        if (comp.n() < 2) continue;
        v.hard_component = comp;
        break;
    }
    if (!v.hard_component)
        fail(errc::contract, "involution-free reduct has no component with two vertices");
    try {
        v.gadget = find_hardness_gadget(*v.hard_component, budget);
    } catch (const error& e) {
        if (e.code != errc::cap_exceeded) throw;
        v.kind = DichotomyClass::inconclusive;
        v.detail = std::string("certificate search exhausted: ") + e.what();
        return v;
    }
    v.kind = DichotomyClass::parity_hard;
    v.detail = "hardness gadget certified on a component with " +
               std::to_string(v.hard_component->n()) + " vertices";
    return v;
}

}  // namespace parhom
