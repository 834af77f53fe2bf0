// Gadget species for the hardness machinery: caterpillar, neighbourhood,
// cycle, path-extended and even gadgets, a recomputing verifier for the
// four defining properties, and the degree-profile search that produces a
// verified hardness gadget for any connected square-free involution-free
// host.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parhom/graph.hpp"
#include "parhom/hom.hpp"
#include "parhom/structure.hpp"
#include "parhom/symmetry.hpp"

namespace parhom {

struct GadgetBudget {
    SymmetryBudget symmetry;
    CountBudget count;
    int max_even_gadget_vertices = 6;
};

// Partially labelled piece with one distinguished free vertex.
struct RootedPiece {
    PartiallyLabelledGraph j;
    std::string x;
};

// Piece with two distinct distinguished free vertices.
struct DoublyRootedPiece {
    PartiallyLabelledGraph j;
    std::string y;
    std::string z;
};

struct SigmaTable {
    std::map<std::pair<std::string, std::string>, bool> parity;
    std::map<std::pair<std::string, std::string>, bigint> exact;  // filled on request
};

// Hardness gadget (i, s, (J1,y), (J2,z), (J3,y,z)) with the derived sets
// the four properties quantify over: omega_y holds the host vertices where
// (J1, j1.x) has an odd hom count, omega_z likewise for J2, sigma the
// parities of Homs((J3,y,z),(H,a,b)) over omega_y x omega_z. Stored sets
// must survive recomputation.
struct HardnessGadget {
    std::string i;
    std::string s;
    RootedPiece j1;  // j1.x plays y
    RootedPiece j2;  // j2.x plays z
    DoublyRootedPiece j3;
    std::vector<std::string> omega_y;  // sorted
    std::vector<std::string> omega_z;  // sorted
    SigmaTable sigma;
};

// Connected bipartite (g,w,x) whose hom count into the host rooted at the
// edge (a,b) is even; the count is positive regardless, since g maps onto
// the edge.
struct EvenGadget {
    std::string a;
    std::string b;
    Graph g;
    std::string w;
    std::string x;
};

struct GadgetVerdict {
    bool accepted;
    std::string reason;  // first violated property with its witness
};

namespace detail {

inline bool adjacent(const Graph& g, const std::string& u, const std::string& v) {
    const auto& nb = g.neighbours(g.require_index(u));
    return std::binary_search(nb.begin(), nb.end(), g.require_index(v));
}

inline void require_host_path(const Graph& h, const std::vector<std::string>& path) {
    if (path.empty()) fail(errc::precondition, "empty path");
    std::set<std::string> seen;
    for (const auto& v : path) {
        h.require_index(v);
        if (!seen.insert(v).second) fail(errc::precondition, "path repeats vertex '" + v + "'");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!adjacent(h, path[i], path[i + 1]))
            fail(errc::precondition,
                 "'" + path[i] + "' and '" + path[i + 1] + "' are not adjacent");
}

}  // namespace detail

// Caterpillar of a host path v0...vk: spine y u1 ... u{k-1} z with a leg
// (uj,wj) pinned wj -> vj at every interior spine vertex; for k=1 the bare
// edge (y,z) with no pins.
inline DoublyRootedPiece make_caterpillar(const Graph& h, const std::vector<std::string>& path) {
    detail::require_host_path(h, path);
    if (path.size() < 2) fail(errc::precondition, "caterpillar path needs at least one edge");
    const int k = static_cast<int>(path.size()) - 1;
    std::vector<std::string> vs{"y", "z"};
    std::vector<std::pair<std::string, std::string>> es;
    std::map<std::string, std::string> pins;
    std::string prev = "y";
    for (int j = 1; j < k; ++j) {
        const auto u = detail::numbered_name("u", j);
        const auto w = detail::numbered_name("w", j);
        vs.push_back(u);
        vs.push_back(w);
        es.push_back({prev, u});
        es.push_back({u, w});
        pins[w] = path[j];
        prev = u;
    }
    es.push_back({prev, "z"});
    return {PartiallyLabelledGraph::make(Graph::make(vs, es), std::move(pins)), "y", "z"};
}

// Neighbourhood gadget of a host vertex v: the edge (x,w) with w pinned to
// v; its omega set is exactly the neighbourhood of v.
inline RootedPiece make_neighbourhood(const Graph& h, const std::string& v) {
    h.require_index(v);
    return {PartiallyLabelledGraph::make(Graph::make({"x", "w"}, {{"x", "w"}}), {{"w", v}}), "x"};
}

// Cycle gadget: an ell-cycle x u1 ... u{ell-1} x with the first k vertices
// after x pinned along the host path v1...vk.
inline RootedPiece make_cycle_gadget(const Graph& h, int ell, const std::vector<std::string>& path) {
    detail::require_host_path(h, path);
    const int k = static_cast<int>(path.size());
    if (ell <= std::max(2, k))
        fail(errc::precondition, "cycle length " + std::to_string(ell) + " too small for " +
                                     std::to_string(k) + " pinned vertices");
    std::vector<std::string> vs{"x"};
    std::vector<std::pair<std::string, std::string>> es;
    std::map<std::string, std::string> pins;
    std::string prev = "x";
    for (int j = 1; j < ell; ++j) {
        const auto u = detail::numbered_name("u", j);
        vs.push_back(u);
        es.push_back({prev, u});
        if (j <= k) pins[u] = path[j - 1];
        prev = u;
    }
    es.push_back({prev, "x"});
    return {PartiallyLabelledGraph::make(Graph::make(vs, es), std::move(pins)), "x"};
}

// Glues a fresh pendant path of length r+1 onto every vertex; pins kept.
inline PartiallyLabelledGraph attach_paths(const PartiallyLabelledGraph& jstar, int r) {
    if (r < 0) fail(errc::precondition, "negative radius");
    std::string prefix = "q";
    auto taken = [&] {
        for (const auto& v : jstar.g.vertex_names())
            if (v.compare(0, prefix.size(), prefix) == 0) return true;
        return false;
    };
    while (taken()) prefix += "q";
    std::vector<std::string> vs = jstar.g.vertex_names();
    auto es = jstar.g.edge_names();
    int counter = 0;
    for (const auto& v : jstar.g.vertex_names()) {
        std::string prev = v;
        for (int step = 0; step <= r; ++step) {
            auto p = detail::numbered_name(prefix, counter++);
            vs.push_back(p);
            es.push_back({prev, p});
            prev = p;
        }
    }
    return PartiallyLabelledGraph::make(Graph::make(vs, es), jstar.pins);
}

// {a : |Homs((J,d),(H,a))| odd}, in sorted vertex order.
inline std::vector<std::string> compute_omega(const PartiallyLabelledGraph& j, const std::string& d,
                                              const Graph& h, const CountBudget& budget = {}) {
    j.g.require_index(d);
    if (j.pins.count(d)) fail(errc::precondition, "distinguished vertex '" + d + "' is pinned");
    std::vector<std::string> out;
    for (const auto& a : h.vertex_names()) {
        auto pins = j.pins;
        pins[d] = a;
        if (count_pinned_parity(PartiallyLabelledGraph::make(j.g, std::move(pins)), h, budget))
            out.push_back(a);
    }
    return out;
}

// Parity table of Homs((J3,y,z),(H,(a,b))) over omega_y x omega_z, with
// exact counts on request.
inline SigmaTable compute_sigma_table(const PartiallyLabelledGraph& j3, const std::string& y,
                                      const std::string& z, const Graph& h,
                                      const std::vector<std::string>& omega_y,
                                      const std::vector<std::string>& omega_z,
                                      const CountBudget& budget = {}, bool exact = false) {
    j3.g.require_index(y);
    j3.g.require_index(z);
    if (y == z) fail(errc::precondition, "distinguished vertices coincide");
    if (j3.pins.count(y) || j3.pins.count(z))
        fail(errc::precondition, "distinguished vertex is pinned");
    SigmaTable table;
    for (const auto& a : omega_y)
        for (const auto& b : omega_z) {
            h.require_index(a);
            h.require_index(b);
            auto pins = j3.pins;
            pins[y] = a;
            pins[z] = b;
            auto plg = PartiallyLabelledGraph::make(j3.g, std::move(pins));
            if (exact) {
                auto c = count_pinned_homs(plg, h, budget);
                table.parity[{a, b}] = c.parity;
                table.exact[{a, b}] = std::move(c.exact);
            } else {
                table.parity[{a, b}] = count_pinned_parity(plg, h, budget);
            }
        }
    return table;
}

namespace detail {

inline bool piece_ok(const PartiallyLabelledGraph& j, const std::vector<std::string>& roots,
                     const Graph& h, std::string& why) {
    if (!j.g.is_connected()) {
        why = "piece is disconnected";
        return false;
    }
    for (const auto& d : roots) {
        if (!j.g.has_vertex(d)) {
            why = "distinguished vertex '" + d + "' missing";
            return false;
        }
        if (j.pins.count(d)) {
            why = "distinguished vertex '" + d + "' is pinned";
            return false;
        }
    }
    for (const auto& [v, t] : j.pins)
        if (!h.has_vertex(t)) {
            why = "pin target '" + t + "' not in host";
            return false;
        }
    return true;
}

}  // namespace detail

// Recomputes the omega sets and sigma table and checks the four defining
// properties. Rejection is a value naming the first violation; only budget
// overruns throw.
inline GadgetVerdict verify_hardness_gadget(const HardnessGadget& g, const Graph& h,
                                            const GadgetBudget& budget = {}) {
    std::string why;
    if (!h.has_vertex(g.i)) return {false, "i='" + g.i + "' is not a host vertex"};
    if (!h.has_vertex(g.s)) return {false, "s='" + g.s + "' is not a host vertex"};
    if (!detail::piece_ok(g.j1.j, {g.j1.x}, h, why)) return {false, "J1: " + why};
    if (!detail::piece_ok(g.j2.j, {g.j2.x}, h, why)) return {false, "J2: " + why};
    if (g.j3.y == g.j3.z) return {false, "J3: distinguished vertices coincide"};
    if (!detail::piece_ok(g.j3.j, {g.j3.y, g.j3.z}, h, why)) return {false, "J3: " + why};

    auto oy = compute_omega(g.j1.j, g.j1.x, h, budget.count);
    if (oy != g.omega_y) return {false, "omega_y does not match recomputation"};
    auto oz = compute_omega(g.j2.j, g.j2.x, h, budget.count);
    if (oz != g.omega_z) return {false, "omega_z does not match recomputation"};
    auto sig = compute_sigma_table(g.j3.j, g.j3.y, g.j3.z, h, oy, oz, budget.count);
    if (sig.parity != g.sigma.parity) return {false, "sigma table does not match recomputation"};

    if (oy.size() % 2 != 0) return {false, "property 1: |omega_y| is odd"};
    if (!std::binary_search(oy.begin(), oy.end(), g.i))
        return {false, "property 1: i='" + g.i + "' not in omega_y"};
    if (oz.size() % 2 != 0) return {false, "property 2: |omega_z| is odd"};
    if (!std::binary_search(oz.begin(), oz.end(), g.s))
        return {false, "property 2: s='" + g.s + "' not in omega_z"};

    for (const auto& o : oy) {
        if (o == g.i) continue;
        for (const auto& x : oz) {
            if (x == g.s) continue;
            if (sig.parity.at({o, x}))
                return {false, "property 3: sigma(" + o + "," + x + ") is odd"};
        }
    }
    if (!sig.parity.at({g.i, g.s})) return {false, "property 4: sigma(i,s) is even"};
    for (const auto& o : oy)
        if (o != g.i && !sig.parity.at({o, g.s}))
            return {false, "property 4: sigma(" + o + "," + g.s + ") is even"};
    for (const auto& x : oz)
        if (x != g.s && !sig.parity.at({g.i, x}))
            return {false, "property 4: sigma(" + g.i + "," + x + ") is even"};
    return {true, ""};
}

namespace detail {

// Computes the derived sets, verifies, and returns; a rejection here means
// a construction bug, not bad input.
inline HardnessGadget finish_gadget(std::string i, std::string s, RootedPiece j1, RootedPiece j2,
                                    DoublyRootedPiece j3, const Graph& h,
                                    const GadgetBudget& budget) {
    HardnessGadget g{std::move(i), std::move(s), std::move(j1), std::move(j2),
                     std::move(j3), {},           {},           {}};
    g.omega_y = compute_omega(g.j1.j, g.j1.x, h, budget.count);
    g.omega_z = compute_omega(g.j2.j, g.j2.x, h, budget.count);
    g.sigma = compute_sigma_table(g.j3.j, g.j3.y, g.j3.z, h, g.omega_y, g.omega_z, budget.count,
                                  true);
    auto v = verify_hardness_gadget(g, h, budget);
    if (!v.accepted) fail(errc::contract, "constructed gadget rejected: " + v.reason);
    return g;
}

// Lexicographically least shortest path, found by walking distances back
// from the target.
inline std::vector<std::string> least_shortest_path(const Graph& h, const std::string& from,
                                                    const std::string& to) {
    const int src = h.require_index(to);
    std::vector<int> dist(h.n(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : h.neighbours(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    int cur = h.require_index(from);
    if (dist[cur] == -1)
        fail(errc::precondition, "'" + from + "' and '" + to + "' are disconnected");
    std::vector<std::string> path{h.name(cur)};
    while (dist[cur] > 0) {
        for (int w : h.neighbours(cur))
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(h.name(cur));
    }
    return path;
}

// Lex-least k-edge path from q.back() to q.front() avoiding the rest of q;
// together with q it closes a cycle.
inline std::vector<std::string> least_completion_path(const Graph& h,
                                                      const std::vector<std::string>& q, int k) {
    std::vector<char> blocked(h.n(), 0);
    for (const auto& v : q) blocked[h.require_index(v)] = 1;
    const int start = h.require_index(q.back());
    const int goal = h.require_index(q.front());
    std::vector<int> walk{start};
    auto dfs = [&](auto&& self, int v, int left) -> bool {
        if (left == 1) {
            const auto& nb = h.neighbours(v);
            if (!std::binary_search(nb.begin(), nb.end(), goal)) return false;
            walk.push_back(goal);
            return true;
        }
        for (int w : h.neighbours(v)) {
            if (blocked[w]) continue;
            blocked[w] = 1;
            walk.push_back(w);
            if (self(self, w, left - 1)) return true;
            walk.pop_back();
            blocked[w] = 0;
        }
        return false;
    };
    if (!dfs(dfs, start, k)) return {};
    std::vector<std::string> out;
    out.reserve(walk.size());
    for (int v : walk) out.push_back(h.name(v));
    return out;
}

// True when the host has a non-identity involution fixing every listed
// vertex.
inline bool has_involution_fixing(const Graph& h, const std::vector<std::string>& fixed,
                                  const SymmetryBudget& budget = {}) {
    const int n = h.n();
    if (n > budget.max_involution_vertices)
        fail(errc::cap_exceeded, "involution search capped at " +
                                     std::to_string(budget.max_involution_vertices) + " vertices");
    if (n < 2) return false;
    const auto mat = adjacency_matrix(h);
    std::vector<int> image(n, -1);
    for (const auto& v : fixed) {
        int i = h.require_index(v);
        image[i] = i;
    }
    auto consistent = [&](int v, int w) {
        if (h.degree(v) != h.degree(w)) return false;
        for (int u = 0; u < n; ++u)
            if (image[u] != -1 &&
                (mat[v * n + u] != mat[w * n + image[u]] || mat[w * n + u] != mat[v * n + image[u]]))
                return false;
        return true;
    };
    auto dfs = [&](auto&& self) -> bool {
        int v = 0;
        while (v < n && image[v] != -1) ++v;
        if (v == n) {
            for (int u = 0; u < n; ++u)
                if (image[u] != u) return true;
            return false;  // identity only
        }
        for (int w = v; w < n; ++w) {
            if (image[w] != -1 && w != v) continue;
            if (w == v) {
                if (!consistent(v, v)) continue;
                image[v] = v;
                if (self(self)) return true;
                image[v] = -1;
            } else {
                if (!consistent(v, w)) continue;
                image[v] = w;
                image[w] = v;
                if (self(self)) return true;
                image[v] = -1;
                image[w] = -1;
            }
        }
        return false;
    };
    return dfs(dfs);
}

}  // namespace detail

// Walks a shortest path between the two least even-degree vertices,
// truncated at the first even-degree vertex along it, and pairs the
// endpoint neighbourhood gadgets with the caterpillar of the walked path.
inline HardnessGadget find_gadget_two_even(const Graph& h, const GadgetBudget& budget = {}) {
    if (!h.is_connected()) fail(errc::precondition, "host is disconnected");
    if (!is_square_free(h)) fail(errc::precondition, "host has a square");
    auto prof = degree_profile(h);
    if (prof.even.size() < 2)
        fail(errc::precondition, "host has fewer than two even-degree vertices");
    auto path = detail::least_shortest_path(h, prof.even[0], prof.even[1]);
    std::size_t k = 0;
    for (std::size_t idx = 1; idx < path.size(); ++idx)
        if (prof.degree.at(path[idx]) % 2 == 0) {
            k = idx;
            break;
        }
    path.resize(k + 1);
    auto j1 = make_neighbourhood(h, path.front());
    auto j2 = make_neighbourhood(h, path.back());
    auto j3 = make_caterpillar(h, path);
    if (k == 1) {
        // the bare-edge caterpillar gains a neighbour pinned to v0 so that
        // every piece carries a pin
        auto vs = j3.j.g.vertex_names();
        auto es = j3.j.g.edge_names();
        vs.push_back("w00");
        es.push_back({"w00", "y"});
        auto pins = j3.j.pins;
        pins["w00"] = path.front();
        j3.j = PartiallyLabelledGraph::make(Graph::make(vs, es), std::move(pins));
    }
    return detail::finish_gadget(path[1], path[k - 1], std::move(j1), std::move(j2), std::move(j3),
                                 h, budget);
}

// Cuts the host along the distance-r sphere around its unique even-degree
// vertex, builds the two-even gadget of a surviving involution-free
// component, and lifts it back with pendant paths of length r+1.
inline HardnessGadget find_gadget_one_even(const Graph& h, const GadgetBudget& budget = {}) {
    if (!h.is_connected()) fail(errc::precondition, "host is disconnected");
    if (!is_square_free(h)) fail(errc::precondition, "host has a square");
    auto prof = degree_profile(h);
    auto evens = prof.positive_even();
    if (evens.size() != 1)
        fail(errc::precondition, "host must have exactly one positive even-degree vertex");
    if (find_involution(h, InvolutionPolicy::least, budget.symmetry))
        fail(errc::precondition, "host has an involution");
    const auto& v = evens[0];
    auto r = min_distance_to_cycle(h, v);
    if (!r) fail(errc::contract, "involution-free host with one even vertex must contain a cycle");
    auto sphere = ball_at_distance(h, v, *r);
    std::set<std::string> cut(sphere.begin(), sphere.end());
    std::vector<std::string> keep;
    for (const auto& u : h.vertex_names())
        if (!cut.count(u)) keep.push_back(u);
    for (const auto& comp : h.induced_names(keep).connected_components()) {
        if (comp.has_vertex(v)) continue;
        if (degree_profile(comp).even.size() < 2) continue;
        if (find_involution(comp, InvolutionPolicy::least, budget.symmetry)) continue;
        auto inner = find_gadget_two_even(comp, budget);
        return detail::finish_gadget(
            inner.i, inner.s, RootedPiece{attach_paths(inner.j1.j, *r), inner.j1.x},
            RootedPiece{attach_paths(inner.j2.j, *r), inner.j2.x},
            DoublyRootedPiece{attach_paths(inner.j3.j, *r), inner.j3.y, inner.j3.z}, h, budget);
    }
    fail(errc::contract, "no involution-free component with two even-degree vertices survives");
}

// Shortest-odd-cycle routes: an edge on an odd number of shortest odd
// cycles yields two cycle gadgets joined by a bare edge; otherwise a
// longest path on a positive even number of them is completed to a cycle
// and the complement caterpillar joins the two cycle gadgets of the path's
// orientations.
inline HardnessGadget find_gadget_odd_cycle(const Graph& h, const GadgetBudget& budget = {}) {
    if (!is_square_free(h)) fail(errc::precondition, "host has a square");
    auto prof = degree_profile(h);
    if (!prof.even.empty()) fail(errc::precondition, "host has an even-degree vertex");
    auto ell = odd_girth(h);
    if (!ell) fail(errc::precondition, "host is bipartite");
    auto census = cycle_census(h, *ell);
    for (const auto& [e, cnt] : census.edge_counts) {
        if (cnt % 2 == 0) continue;
        auto j1 = make_cycle_gadget(h, *ell, {e.second});
        auto j2 = make_cycle_gadget(h, *ell, {e.first});
        auto j3 = DoublyRootedPiece{
            PartiallyLabelledGraph::make(Graph::make({"y", "z"}, {{"y", "z"}}), {}), "y", "z"};
        return detail::finish_gadget(e.first, e.second, std::move(j1), std::move(j2),
                                     std::move(j3), h, budget);
    }
    auto q = longest_path_in_even_cycles(h, *ell);
    if (!q) fail(errc::contract, "no edge lies on a positive number of shortest odd cycles");
    const int k = *ell - (static_cast<int>(q->size()) - 1);
    auto comp = detail::least_completion_path(h, *q, k);
    if (comp.empty()) fail(errc::contract, "no cycle completes the selected path");
    auto rev = *q;
    std::reverse(rev.begin(), rev.end());
    auto j1 = make_cycle_gadget(h, *ell, rev);
    auto j2 = make_cycle_gadget(h, *ell, *q);
    auto j3 = make_caterpillar(h, comp);
    return detail::finish_gadget(comp[1], comp[k - 1], std::move(j1), std::move(j2), std::move(j3),
                                 h, budget);
}

namespace detail {

// Size-ordered sweep over connected bipartite candidates (g,w,x), one
// distinguished pair per automorphism orbit, against the given ordered
// host edges; fn says whether to stop on an even-count candidate. Returns
// true when stopped.
inline bool for_each_even_gadget(const Graph& h,
                                 const std::vector<std::pair<std::string, std::string>>& edges,
                                 const GadgetBudget& budget,
                                 const std::function<bool(const EvenGadget&)>& fn) {
    for (int n = 2; n <= budget.max_even_gadget_vertices; ++n) {
        const auto names = numbered_names("c", n);
        const auto pairs = vertex_pairs(n);
        auto try_mask = [&](std::uint64_t mask) -> bool {
            Graph g = graph_from_mask(names, pairs, mask);
            if (!g.is_connected() || odd_girth(g)) return false;
            for (const auto& [u, v] : g.edge_names())
                for (const auto& pick : {std::pair{u, v}, std::pair{v, u}}) {
                    std::vector<std::string> tup{pick.first, pick.second};
                    auto orb = orbit_of_tuple(g, tup, budget.symmetry);
                    if (orb.front() != tup) continue;
                    for (const auto& [a, b] : edges) {
                        if (count_distinguished_parity({g, tup}, {h, {a, b}}, budget.count))
                            continue;
                        if (fn(EvenGadget{a, b, g, pick.first, pick.second})) return true;
                    }
                }
            return false;
        };
        if (n <= 6) {
            for (std::uint64_t mask : nonisomorphic_masks(n))
                if (try_mask(mask)) return true;
        } else {
            if (pairs.size() > 63) fail(errc::cap_exceeded, "candidate sweep too large");
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask)
                if (try_mask(mask)) return true;
        }
    }
    return false;
}

}  // namespace detail

// Smallest connected bipartite (g,w,x) with an even hom count into the
// host rooted at (a,b); absent when the size budget runs out first.
inline std::optional<EvenGadget> find_even_gadget(const Graph& h, const std::string& a,
                                                  const std::string& b,
                                                  const GadgetBudget& budget = {}) {
    h.require_index(a);
    h.require_index(b);
    if (!h.is_connected()) fail(errc::precondition, "host is disconnected");
    if (odd_girth(h)) fail(errc::precondition, "host is not bipartite");
    if (h.edge_pairs().size() < 2) fail(errc::precondition, "host needs more than one edge");
    if (!detail::adjacent(h, a, b))
        fail(errc::precondition, "(" + a + "," + b + ") is not a host edge");
    if (detail::has_involution_fixing(h, {a, b}, budget.symmetry))
        fail(errc::precondition, "host has an involution fixing the rooted edge");
    std::optional<EvenGadget> out;
    detail::for_each_even_gadget(h, {{a, b}}, budget, [&](const EvenGadget& eg) {
        out = eg;
        return true;
    });
    return out;
}

// Lifts a minimal even gadget to a hardness gadget for an all-odd
// bipartite host. Failed minimality-derived steps raise errc::minimality
// so a caller can resume the search with other candidates; arithmetic that
// holds regardless of minimality raises errc::contract when it breaks.
inline HardnessGadget gadget_from_even_gadget(const Graph& h, const EvenGadget& eg,
                                              const GadgetBudget& budget = {}) {
    if (!h.is_connected()) fail(errc::precondition, "host is disconnected");
    if (odd_girth(h)) fail(errc::precondition, "host is not bipartite");
    if (!is_square_free(h)) fail(errc::precondition, "host has a square");
    if (!degree_profile(h).even.empty())
        fail(errc::precondition, "host has an even-degree vertex");
    if (!eg.g.is_connected() || odd_girth(eg.g))
        fail(errc::precondition, "gadget graph must be connected and bipartite");
    if (!detail::adjacent(eg.g, eg.w, eg.x))
        fail(errc::precondition, "(w,x) is not an edge of the gadget graph");
    if (!detail::adjacent(h, eg.a, eg.b)) fail(errc::precondition, "(a,b) is not a host edge");
    if (count_distinguished_parity({eg.g, {eg.w, eg.x}}, {h, {eg.a, eg.b}}, budget.count))
        fail(errc::precondition, "hom count at the rooted edge is odd");

    const auto& i = eg.a;
    const auto& s = eg.b;
    if (eg.g.degree(eg.g.require_index(eg.w)) < 2 || eg.g.degree(eg.g.require_index(eg.x)) < 2)
        fail(errc::minimality, "a distinguished endpoint has degree one");
    auto least_other = [&](const std::string& centre, const std::string& skip) {
        for (int u : eg.g.neighbours(eg.g.require_index(centre)))
            if (eg.g.name(u) != skip) return eg.g.name(u);
        fail(errc::contract, "degree-checked endpoint lost its neighbours");
    };
    const auto y = least_other(eg.x, eg.w);
    const auto z = least_other(eg.w, eg.x);
    auto cset = [&](const std::string& free_v) {
        std::vector<std::string> out;
        for (const auto& c : h.vertex_names())
            if (count_distinguished_parity({eg.g, {eg.w, eg.x, free_v}}, {h, {i, s, c}},
                                           budget.count))
                out.push_back(c);
        return out;
    };
    auto cy = cset(y);
    if (cy.size() % 2 != 0) fail(errc::contract, "odd candidate set under an even total");
    if (!std::binary_search(cy.begin(), cy.end(), i))
        fail(errc::minimality, "i is missing from the candidate set at y");
    auto cz = cset(z);
    if (cz.size() % 2 != 0) fail(errc::contract, "odd candidate set under an even total");
    if (!std::binary_search(cz.begin(), cz.end(), s))
        fail(errc::minimality, "s is missing from the candidate set at z");

    auto j = PartiallyLabelledGraph::make(eg.g, {{eg.w, i}, {eg.x, s}});
    auto j3 = DoublyRootedPiece{
        PartiallyLabelledGraph::make(Graph::make({"y", "z"}, {{"y", "z"}}), {}), "y", "z"};
    return detail::finish_gadget(i, s, RootedPiece{j, y}, RootedPiece{j, z}, std::move(j3), h,
                                 budget);
}

// Degree-profile dispatch over the hardness routes. Every returned gadget
// has been re-verified against the definition.
inline HardnessGadget find_hardness_gadget(const Graph& h, const GadgetBudget& budget = {}) {
    if (!h.is_connected()) fail(errc::precondition, "host is disconnected");
    if (h.n() < 2) fail(errc::precondition, "host needs at least two vertices");
    if (!is_square_free(h)) fail(errc::precondition, "host has a square");
    if (find_involution(h, InvolutionPolicy::least, budget.symmetry))
        fail(errc::precondition, "host has an involution");
    auto prof = degree_profile(h);
    if (prof.even.size() >= 2) return find_gadget_two_even(h, budget);
    if (prof.even.size() == 1) return find_gadget_one_even(h, budget);
    if (odd_girth(h)) return find_gadget_odd_cycle(h, budget);
    // all degrees odd and bipartite: hunt a minimum-size even gadget over
    // every ordered host edge; an involution fixing a rooted edge would be
    // an involution of the host, so every edge is eligible
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : h.edge_names()) {
        edges.push_back({u, v});
        edges.push_back({v, u});
    }
    std::sort(edges.begin(), edges.end());
    std::optional<HardnessGadget> out;
    detail::for_each_even_gadget(h, edges, budget, [&](const EvenGadget& eg) {
        try {
            out = gadget_from_even_gadget(h, eg, budget);
            return true;
        } catch (const error& e) {
            if (e.code == errc::minimality) return false;
            throw;
        }
    });
    if (!out)
        fail(errc::cap_exceeded, "even-gadget search exhausted at " +
                                     std::to_string(budget.max_even_gadget_vertices) + " vertices");
    return *out;
}

}  // namespace parhom
