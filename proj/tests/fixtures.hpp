#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parhom/gadget.hpp"
#include "parhom/graph.hpp"

namespace support {

// Seeded engine with our own reduction helpers: std distributions are not
// portable across standard libraries, and fixtures freeze seeds.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }
};

inline std::string vname(int i) {
    std::string s = std::to_string(i);
    if (s.size() < 2) s = "0" + s;
    return "v" + s;
}

inline std::vector<std::string> vnames(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(vname(i));
    return out;
}

inline std::string numbered(const std::string& prefix, int i) {
    std::string s = std::to_string(i);
    if (s.size() < 2) s = "0" + s;
    return prefix + s;
}

inline parhom::Graph random_graph(Rng& rng, int n, int edge_percent) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(edge_percent)) edges.push_back({vname(i), vname(j)});
    return parhom::Graph::make(vnames(n), edges);
}

inline parhom::Graph path_graph(const std::vector<std::string>& vs) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < vs.size(); ++i) edges.push_back({vs[i - 1], vs[i]});
    return parhom::Graph::make(vs, edges);
}

inline parhom::Graph cycle_graph(const std::vector<std::string>& vs) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < vs.size(); ++i) edges.push_back({vs[i - 1], vs[i]});
    edges.push_back({vs.back(), vs.front()});
    return parhom::Graph::make(vs, edges);
}

inline parhom::Graph complete_graph(const std::vector<std::string>& vs) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back({vs[i], vs[j]});
    return parhom::Graph::make(vs, edges);
}

// Smallest involution-free tree: a centre with pendant arms of lengths 1, 2, 3.
inline parhom::Graph tree7() {
    return parhom::Graph::make({"c", "a1", "b1", "b2", "d1", "d2", "d3"},
                               {{"c", "a1"},
                                {"c", "b1"},
                                {"b1", "b2"},
                                {"c", "d1"},
                                {"d1", "d2"},
                                {"d2", "d3"}});
}

inline parhom::Graph petersen() {
    // outer 5-cycle o0..o4, inner pentagram i0..i4, spokes
    std::vector<std::pair<std::string, std::string>> edges;
    auto nm = [](const char* p, int i) { return std::string(p) + std::to_string(i); };
    for (int k = 0; k < 5; ++k) {
        edges.push_back({nm("o", k), nm("o", (k + 1) % 5)});
        edges.push_back({nm("i", k), nm("i", (k + 2) % 5)});
        edges.push_back({nm("o", k), nm("i", k)});
    }
    std::vector<std::string> vs;
    for (int k = 0; k < 5; ++k) {
        vs.push_back(nm("o", k));
        vs.push_back(nm("i", k));
    }
    return parhom::Graph::make(vs, edges);
}

// Nine-vertex involution-free square-free host: a 5-cycle and a 6-cycle
// sharing the edge a-b, plus the chord c-f closing a triangle.
inline parhom::Graph rigid9() {
    return parhom::Graph::make({"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                               {{"a", "b"},
                                {"b", "c"},
                                {"c", "d"},
                                {"d", "e"},
                                {"e", "a"},
                                {"a", "i"},
                                {"i", "h"},
                                {"h", "g"},
                                {"g", "f"},
                                {"f", "b"},
                                {"c", "f"}});
}

// Same skeleton with the chord moved so the graph gains involutions and
// reduces all the way down to one vertex.
inline parhom::Graph collapsing9() {
    return parhom::Graph::make({"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                               {{"a", "b"},
                                {"b", "c"},
                                {"c", "d"},
                                {"d", "e"},
                                {"e", "a"},
                                {"a", "h"},
                                {"h", "g"},
                                {"g", "f"},
                                {"f", "b"},
                                {"c", "i"},
                                {"i", "f"}});
}

// Ladder with k+1 rungs (bottom v0j, top w0j), a pendant on the last top
// vertex. Every rung closes a square.
inline parhom::Graph hk(int k) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int j = 0; j <= k; ++j) {
        vs.push_back(numbered("v", j));
        vs.push_back(numbered("w", j));
        es.push_back({numbered("v", j), numbered("w", j)});
        if (j > 0) {
            es.push_back({numbered("v", j - 1), numbered("v", j)});
            es.push_back({numbered("w", j - 1), numbered("w", j)});
        }
    }
    vs.push_back("d");
    es.push_back({numbered("w", k), "d"});
    return parhom::Graph::make(vs, es);
}

// Seven-vertex host whose only cycle is the square o-s-i-x, with a pendant
// on x and a two-edge tail on o.
inline parhom::Graph square_h1() {
    return parhom::Graph::make(
        {"a", "b", "c", "i", "o", "s", "x"},
        {{"o", "s"}, {"s", "i"}, {"i", "x"}, {"x", "o"}, {"x", "a"}, {"o", "b"}, {"b", "c"}});
}

// Triangle with a pendant on every corner; all degrees odd.
inline parhom::Graph sunlet3() {
    return parhom::Graph::make({"a", "b", "c", "pa", "pb", "pc"},
                               {{"a", "b"}, {"b", "c"}, {"c", "a"},
                                {"a", "pa"}, {"b", "pb"}, {"c", "pc"}});
}

// Five-cycle with a pendant on every vertex; all degrees odd.
inline parhom::Graph sunlet5() {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int j = 0; j < 5; ++j) {
        vs.push_back(numbered("v", j));
        vs.push_back(numbered("p", j));
        es.push_back({numbered("v", j), numbered("v", (j + 1) % 5)});
        es.push_back({numbered("v", j), numbered("p", j)});
    }
    return parhom::Graph::make(vs, es);
}

// rigid9 with a pendant on each of its five even-degree vertices: an
// involution-free square-free host where every degree is odd.
inline parhom::Graph rigid9_allodd() {
    return parhom::Graph::make(
        {"a", "b", "c", "d", "e", "f", "g", "h", "i", "pd", "pe", "pg", "ph", "pi"},
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {"a", "i"}, {"i", "h"},
         {"h", "g"}, {"g", "f"}, {"f", "b"}, {"c", "f"},
         {"d", "pd"}, {"e", "pe"}, {"g", "pg"}, {"h", "ph"}, {"i", "pi"}});
}

// Nineteen-vertex host with exactly one positive even-degree vertex (r2,
// on the seven-cycle): a six-cycle and a seven-cycle joined by three
// bridges whose uneven spacing kills all symmetry, pendants bringing every
// other degree to three.
inline parhom::Graph one_even_19() {
    return parhom::Graph::make(
        {"l1", "l2", "l3", "l4", "l5", "l6", "r1", "r2", "r3", "r4", "r5", "r6", "r7",
         "pl3", "pl5", "pl6", "pr4", "pr5", "pr7"},
        {{"l1", "l2"}, {"l2", "l3"}, {"l3", "l4"}, {"l4", "l5"}, {"l5", "l6"}, {"l6", "l1"},
         {"r1", "r2"}, {"r2", "r3"}, {"r3", "r4"}, {"r4", "r5"}, {"r5", "r6"}, {"r6", "r7"},
         {"r7", "r1"},
         {"l1", "r1"}, {"l2", "r3"}, {"l4", "r6"},
         {"l3", "pl3"}, {"l5", "pl5"}, {"l6", "pl6"},
         {"r4", "pr4"}, {"r5", "pr5"}, {"r7", "pr7"}});
}

// Twenty-two-vertex bipartite host with every degree odd: a six-cycle and
// an eight-cycle joined by three unevenly spaced bridges, pendants on the
// remaining cycle vertices.
inline parhom::Graph bipartite_odd22() {
    return parhom::Graph::make(
        {"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8",
         "pa3", "pa5", "pa6", "pb1", "pb3", "pb4", "pb6", "pb8"},
        {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a6"}, {"a6", "a1"},
         {"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b4", "b5"}, {"b5", "b6"}, {"b6", "b7"},
         {"b7", "b8"}, {"b8", "b1"},
         {"a1", "b2"}, {"a2", "b5"}, {"a4", "b7"},
         {"a3", "pa3"}, {"a5", "pa5"}, {"a6", "pa6"},
         {"b1", "pb1"}, {"b3", "pb3"}, {"b4", "pb4"}, {"b6", "pb6"}, {"b8", "pb8"}});
}

// Twelve-vertex host with cyclic symmetry of order three: three triangles
// a_j b_j c_j, chords a_{j+1}-c_j, and a six-cycle through the a_j with the
// subdivision vertices d_j.
inline parhom::Graph rotor12() {
    return parhom::Graph::make(
        {"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3"},
        {{"a1", "b1"}, {"b1", "c1"}, {"c1", "a1"}, {"a2", "b2"}, {"b2", "c2"}, {"c2", "a2"},
         {"a3", "b3"}, {"b3", "c3"}, {"c3", "a3"}, {"a2", "c1"}, {"a3", "c2"}, {"a1", "c3"},
         {"a1", "d1"}, {"d1", "a2"}, {"a2", "d2"}, {"d2", "a3"}, {"a3", "d3"}, {"d3", "a1"}});
}

// The hardness gadget for the pendant ladder: two length-two paths pinned
// at both ends plus a bare edge.
inline parhom::HardnessGadget ladder_gadget(const parhom::Graph& h) {
    using parhom::PartiallyLabelledGraph;
    parhom::HardnessGadget g;
    g.i = "w01";
    g.s = "v01";
    g.j1 = {PartiallyLabelledGraph::make(path_graph({"p1", "y", "p2"}),
                                         {{"p1", "w00"}, {"p2", "v01"}}),
            "y"};
    g.j2 = {PartiallyLabelledGraph::make(path_graph({"p3", "z", "p4"}),
                                         {{"p3", "w01"}, {"p4", "v02"}}),
            "z"};
    g.j3 = {PartiallyLabelledGraph::make(parhom::Graph::make({"y", "z"}, {{"y", "z"}}), {}),
            "y", "z"};
    g.omega_y = parhom::compute_omega(g.j1.j, g.j1.x, h);
    g.omega_z = parhom::compute_omega(g.j2.j, g.j2.x, h);
    g.sigma = parhom::compute_sigma_table(g.j3.j, g.j3.y, g.j3.z, h, g.omega_y, g.omega_z, {},
                                          true);
    return g;
}

}  // namespace support
