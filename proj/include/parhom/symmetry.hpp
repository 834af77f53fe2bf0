#pragma once

// Automorphism search, the involution-free reduction H => H*, orbits of
// vertex tuples, and the mod-2 linear algebra on hom-vectors that turns
// pinned counting instances into plain ones.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "hom.hpp"

namespace parhom {

// Caps for the search routines. Every search here is exhaustive at desk
// scale; the caps turn runaway inputs into errors instead of hangs.
struct SymmetryBudget {
    int max_aut_vertices = 16;
    std::size_t max_automorphisms = 100000;
    int max_involution_vertices = 32;
    std::size_t max_raw_tuples = 100000;  // cap on |V(H)|^r during tuple enumeration
    int max_candidate_vertices = 7;       // distinguisher search; values above 7 act as 7
    std::size_t max_family = 200000;      // candidate graphs examined by implement_vector
    int max_pin_arity = 2;                // pinned positions handled by reduce_partlab_instance
};

struct Automorphism {
    std::vector<int> image;  // image[v] = index of the image of vertex v

    bool is_identity() const {
        for (std::size_t i = 0; i < image.size(); ++i)
            if (image[i] != static_cast<int>(i)) return false;
        return true;
    }

    // Order exactly two: a non-identity self-inverse permutation.
    bool is_involution() const {
        if (is_identity()) return false;
        for (std::size_t i = 0; i < image.size(); ++i)
            if (image[image[i]] != static_cast<int>(i)) return false;
        return true;
    }

    std::vector<std::string> fixed_point_names(const Graph& g) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < image.size(); ++i)
            if (image[i] == static_cast<int>(i)) out.push_back(g.name(static_cast<int>(i)));
        return out;
    }

    std::map<std::string, std::string> as_name_map(const Graph& g) const {
        std::map<std::string, std::string> out;
        for (std::size_t i = 0; i < image.size(); ++i)
            out[g.name(static_cast<int>(i))] = g.name(image[i]);
        return out;
    }

    bool operator==(const Automorphism&) const = default;
};

enum class InvolutionPolicy { least, greatest };

namespace detail {

inline std::vector<char> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<char> m(n * n, 0);
    for (auto [u, v] : g.edge_pairs()) {
        m[u * n + v] = 1;
        m[v * n + u] = 1;
    }
    return m;
}

inline std::string numbered_name(const std::string& prefix, int i) {
    std::string d = std::to_string(i);
    if (d.size() < 2) d.insert(d.begin(), '0');
    return prefix + d;
}

// prefix + zero-padded counter; padding keeps name order equal to index order
inline std::vector<std::string> numbered_names(const std::string& prefix, int count) {
    if (count > 100) fail(errc::cap_exceeded, "more than 100 generated vertex names");
    std::vector<std::string> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(numbered_name(prefix, i));
    return out;
}

}  // namespace detail

inline std::vector<Automorphism> enumerate_automorphisms(const DistinguishedGraph& hx,
                                                         const SymmetryBudget& budget = {}) {
    const Graph& h = hx.g;
    const int n = h.n();
    if (n > budget.max_aut_vertices)
        fail(errc::cap_exceeded,
             "automorphism search capped at " + std::to_string(budget.max_aut_vertices) + " vertices");
    const auto mat = detail::adjacency_matrix(h);
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    for (const auto& x : hx.xs) {
        int v = h.require_index(x);
        image[v] = v;  // distinguished vertices are fixed pointwise
        used[v] = 1;
    }
    std::vector<Automorphism> out;
    // Candidate images are tried in increasing order at the least unassigned
    // vertex, so the output is sorted by image sequence with the identity first.
    auto dfs = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < n && image[v] != -1) ++v;
        if (v == n) {
            out.push_back({image});
            if (out.size() > budget.max_automorphisms)
                fail(errc::cap_exceeded, "more than " + std::to_string(budget.max_automorphisms) +
                                             " automorphisms");
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || h.degree(w) != h.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (image[u] != -1 && mat[v * n + u] != mat[w * n + image[u]]) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            self(self, v + 1);
            image[v] = -1;
            used[w] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

inline std::vector<Automorphism> enumerate_automorphisms(const Graph& h,
                                                         const SymmetryBudget& budget = {}) {
    return enumerate_automorphisms(DistinguishedGraph{h, {}}, budget);
}

// Least (or greatest) involution by image sequence, absent when the graph
// has none. The search walks pairings directly instead of enumerating the
// whole automorphism group, so hosts with huge groups stay cheap.
inline std::optional<Automorphism> find_involution(const Graph& h,
                                                   InvolutionPolicy policy = InvolutionPolicy::least,
                                                   const SymmetryBudget& budget = {}) {
    const int n = h.n();
    if (n > budget.max_involution_vertices)
        fail(errc::cap_exceeded,
             "involution search capped at " + std::to_string(budget.max_involution_vertices) +
                 " vertices");
    if (n < 2) return std::nullopt;
    const auto mat = detail::adjacency_matrix(h);
    std::vector<int> image(n, -1);
    std::optional<Automorphism> found;

    auto consistent = [&](int v, int w) {
        if (h.degree(v) != h.degree(w)) return false;
        for (int u = 0; u < n; ++u)
            if (image[u] != -1 &&
                (mat[v * n + u] != mat[w * n + image[u]] || mat[w * n + u] != mat[v * n + image[u]]))
                return false;
        return true;
    };

    // Completions appear in image-sequence order (ascending for the least
    // policy, descending for the greatest); the identity completion is skipped.
    auto dfs = [&](auto&& self) -> bool {
        int v = 0;
        while (v < n && image[v] != -1) ++v;
        if (v == n) {
            Automorphism a{image};
            if (a.is_identity()) return false;
            found = std::move(a);
            return true;
        }
        std::vector<int> cands;
        if (policy == InvolutionPolicy::least) {
            cands.push_back(v);
            for (int w = v + 1; w < n; ++w)
                if (image[w] == -1) cands.push_back(w);
        } else {
            for (int w = n - 1; w > v; --w)
                if (image[w] == -1) cands.push_back(w);
            cands.push_back(v);
        }
        for (int w : cands) {
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
    dfs(dfs);
    return found;
}

struct ReductionStep {
    Graph graph;             // graph the involution was found on
    Automorphism involution;
};

// H = steps[0].graph, each next graph is the fixed-point subgraph of the
// recorded involution, and result admits no involution at all.
struct ReductionChain {
    std::vector<ReductionStep> steps;
    Graph result;
};

inline ReductionChain involution_free_reduction(const Graph& h,
                                                InvolutionPolicy policy = InvolutionPolicy::least,
                                                const SymmetryBudget& budget = {}) {
    ReductionChain chain;
    Graph cur = h;
    while (auto inv = find_involution(cur, policy, budget)) {
        auto fixed = inv->fixed_point_names(cur);
        chain.steps.push_back({cur, *inv});
        cur = cur.induced_names(fixed);
    }
    chain.result = std::move(cur);
    return chain;
}

inline std::vector<std::vector<std::string>> orbit_of_tuple(const Graph& h,
                                                            const std::vector<std::string>& tuple,
                                                            const SymmetryBudget& budget = {}) {
    std::vector<int> idx;
    idx.reserve(tuple.size());
    for (const auto& v : tuple) idx.push_back(h.require_index(v));
    const auto auts = enumerate_automorphisms(h, budget);
    std::set<std::vector<std::string>> orb;
    for (const auto& a : auts) {
        std::vector<std::string> t;
        t.reserve(idx.size());
        for (int i : idx) t.push_back(h.name(a.image[i]));
        orb.insert(std::move(t));
    }
    return {orb.begin(), orb.end()};
}

// One lexicographically least representative per orbit of V(H)^r under the
// automorphism group, in lexicographic order of representatives.
inline std::vector<std::vector<std::string>> enumerate_tuples_up_to_iso(
    const Graph& h, int r, const SymmetryBudget& budget = {}) {
    if (r < 0) fail(errc::precondition, "negative tuple arity");
    if (r == 0) return {{}};
    const std::size_t n = h.n();
    if (n == 0) return {};
    std::size_t total = 1;
    for (int i = 0; i < r; ++i) {
        if (total > budget.max_raw_tuples / n)
            fail(errc::cap_exceeded, "|V|^r exceeds the tuple budget");
        total *= n;
    }
    const auto auts = enumerate_automorphisms(h, budget);

    auto decode = [&](std::size_t code) {
        std::vector<int> idx(r);
        for (int i = r - 1; i >= 0; --i) {
            idx[i] = static_cast<int>(code % n);
            code /= n;
        }
        return idx;
    };
    auto encode = [&](const std::vector<int>& idx) {
        std::size_t code = 0;
        for (int i : idx) code = code * n + i;
        return code;
    };

    std::vector<char> seen(total, 0);
    std::vector<std::vector<std::string>> out;
    for (std::size_t code = 0; code < total; ++code) {
        if (seen[code]) continue;
        const auto idx = decode(code);
        std::vector<std::string> rep;
        rep.reserve(r);
        for (int i : idx) rep.push_back(h.name(i));
        out.push_back(std::move(rep));
        for (const auto& a : auts) {
            std::vector<int> im(r);
            for (int i = 0; i < r; ++i) im[i] = a.image[idx[i]];
            seen[encode(im)] = 1;
        }
    }
    return out;
}

// Bit-vector of a distinguished graph against one representative per tuple
// class of the host: component i is the mod-2 hom count into (H, class i).
struct HomVector {
    std::vector<std::vector<std::string>> classes;
    std::vector<unsigned char> bits;

    std::size_t size() const { return bits.size(); }
    bool operator==(const HomVector&) const = default;
};

namespace detail {

inline std::vector<unsigned char> hom_bits(const DistinguishedGraph& g, const Graph& h,
                                           const std::vector<std::vector<std::string>>& reps,
                                           const CountBudget& cb) {
    std::vector<unsigned char> out(reps.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i)
        out[i] = count_distinguished_parity(g, DistinguishedGraph{h, reps[i]}, cb) ? 1 : 0;
    return out;
}

}  // namespace detail

inline HomVector hom_vector(const DistinguishedGraph& g, const Graph& h,
                            const SymmetryBudget& budget = {}, const CountBudget& cb = {}) {
    auto reps = enumerate_tuples_up_to_iso(h, g.arity(), budget);
    auto bits = detail::hom_bits(g, h, reps, cb);
    return {std::move(reps), std::move(bits)};
}

namespace detail {

// Backtracking isomorphism test with optional pre-assigned index pairs.
inline bool isomorphic_impl(const Graph& a, const Graph& b,
                            const std::vector<std::pair<int, int>>& pre) {
    const int n = a.n();
    if (n != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int i = 0; i < n; ++i) {
        da.push_back(a.degree(i));
        db.push_back(b.degree(i));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto consistent = [&](int v, int w) {
        if (a.degree(v) != b.degree(w)) return false;
        for (int u = 0; u < n; ++u)
            if (image[u] != -1 && a.adjacent(v, u) != b.adjacent(w, image[u])) return false;
        return true;
    };
    for (auto [v, w] : pre) {
        if (image[v] != -1) {
            if (image[v] != w) return false;
            continue;
        }
        if (used[w] || !consistent(v, w)) return false;
        image[v] = w;
        used[w] = 1;
    }
    auto dfs = [&](auto&& self) -> bool {
        int v = 0;
        while (v < n && image[v] != -1) ++v;
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || !consistent(v, w)) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return dfs(dfs);
}

}  // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    return detail::isomorphic_impl(a, b, {});
}

// Isomorphism respecting the tuples position-wise.
inline bool are_isomorphic(const DistinguishedGraph& a, const DistinguishedGraph& b) {
    if (a.arity() != b.arity()) fail(errc::arity, "tuple lengths differ");
    std::vector<std::pair<int, int>> pre;
    for (int i = 0; i < a.arity(); ++i)
        pre.push_back({a.g.require_index(a.xs[i]), b.g.require_index(b.xs[i])});
    return detail::isomorphic_impl(a.g, b.g, pre);
}

namespace detail {

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
}

inline Graph graph_from_mask(const std::vector<std::string>& names,
                             const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1) es.push_back({names[pairs[k].first], names[pairs[k].second]});
    return Graph::make(names, es);
}

// Edge masks of the graphs on n labelled vertices that are least in their
// isomorphism class, ascending. A mask is kept iff it equals the minimum of
// its images under all vertex permutations.
inline std::vector<std::uint64_t> build_nonisomorphic_masks(int n) {
    const auto pairs = vertex_pairs(n);
    const int m = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> at(n, std::vector<int>(n, -1));
    for (int k = 0; k < m; ++k) {
        at[pairs[k].first][pairs[k].second] = k;
        at[pairs[k].second][pairs[k].first] = k;
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::uint64_t canon = mask;
        for (const auto& p : perms) {
            std::uint64_t im = 0;
            for (int k = 0; k < m; ++k)
                if ((mask >> k) & 1) im |= std::uint64_t{1} << at[p[pairs[k].first]][p[pairs[k].second]];
            canon = std::min(canon, im);
        }
        if (canon == mask) out.push_back(mask);
    }
    return out;
}

inline const std::vector<std::uint64_t>& nonisomorphic_masks(int n) {
    switch (n) {
        case 0: {
            static const auto v = build_nonisomorphic_masks(0);
            return v;
        }
        case 1: {
            static const auto v = build_nonisomorphic_masks(1);
            return v;
        }
        case 2: {
            static const auto v = build_nonisomorphic_masks(2);
            return v;
        }
        case 3: {
            static const auto v = build_nonisomorphic_masks(3);
            return v;
        }
        case 4: {
            static const auto v = build_nonisomorphic_masks(4);
            return v;
        }
        case 5: {
            static const auto v = build_nonisomorphic_masks(5);
            return v;
        }
        case 6: {
            static const auto v = build_nonisomorphic_masks(6);
            return v;
        }
        default:
            fail(errc::cap_exceeded, "mask catalogue covers at most 6 vertices");
    }
}

}  // namespace detail

enum class DistinguishOutcome { found, isomorphic, budget_exhausted };

struct DistinguishResult {
    DistinguishOutcome outcome;
    std::optional<DistinguishedGraph> witness;  // present iff outcome == found
};

// Search for (G, x) whose mod-2 hom counts into the two hosts differ.
// Candidates are enumerated smallest first, deduplicated up to isomorphism
// through six vertices and swept raw at seven; tuples run in lexicographic
// order. Isomorphic hosts are detected exactly, never via parity agreement.
inline DistinguishResult find_distinguisher(const DistinguishedGraph& h1,
                                            const DistinguishedGraph& h2,
                                            const SymmetryBudget& budget = {},
                                            bool connected = false, const CountBudget& cb = {}) {
    if (h1.arity() != h2.arity()) fail(errc::arity, "host tuples have different lengths");
    if (are_isomorphic(h1, h2)) return {DistinguishOutcome::isomorphic, std::nullopt};
    const int r = h1.arity();
    const int top = std::min(budget.max_candidate_vertices, 7);
    for (int nv = r; nv <= top; ++nv) {
        const auto names = detail::numbered_names("c", nv);
        const auto pairs = detail::vertex_pairs(nv);

        std::size_t tuples = 1;
        for (int i = 0; i < r; ++i) {
            if (nv == 0) break;
            if (tuples > 10000000 / static_cast<std::size_t>(nv))
                fail(errc::cap_exceeded, "candidate tuple space too large");
            tuples *= nv;
        }

        auto try_mask = [&](std::uint64_t mask) -> std::optional<DistinguishedGraph> {
            Graph g = detail::graph_from_mask(names, pairs, mask);
            if (connected && !g.is_connected()) return std::nullopt;
            for (std::size_t code = 0; code < tuples; ++code) {
                std::size_t c = code;
                std::vector<std::string> tup(r);
                for (int i = r - 1; i >= 0; --i) {
                    tup[i] = names[c % nv];
                    c /= nv;
                }
                if (connected) {
                    std::vector<std::string> distinct(tup.begin(), tup.end());
                    std::sort(distinct.begin(), distinct.end());
                    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                    if (!g.induced_names(distinct).is_connected()) continue;
                }
                DistinguishedGraph cand{g, tup};
                if (count_distinguished_parity(cand, h1, cb) !=
                    count_distinguished_parity(cand, h2, cb))
                    return cand;
            }
            return std::nullopt;
        };

        if (nv <= 6) {
            for (std::uint64_t mask : detail::nonisomorphic_masks(nv))
                if (auto w = try_mask(mask)) return {DistinguishOutcome::found, std::move(w)};
        } else {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask)
                if (auto w = try_mask(mask)) return {DistinguishOutcome::found, std::move(w)};
        }
    }
    return {DistinguishOutcome::budget_exhausted, std::nullopt};
}

namespace detail {

// Set partitions of {0..n-1} as restricted growth strings in lexicographic
// order, from the single-class partition down to the discrete one.
struct RgsEnumerator {
    std::vector<int> a, mx;
    bool first = true;
    int n;

    explicit RgsEnumerator(int size) : a(size, 0), mx(size, 0), n(size) {}

    bool next(std::vector<int>& out) {
        if (first) {
            first = false;
            out = a;
            return true;
        }
        for (int i = n - 1; i >= 1; --i) {
            if (a[i] <= mx[i - 1]) {
                ++a[i];
                mx[i] = std::max(mx[i - 1], a[i]);
                for (int j = i + 1; j < n; ++j) {
                    a[j] = 0;
                    mx[j] = mx[j - 1];
                }
                out = a;
                return true;
            }
        }
        return false;
    }
};

// Quotient by a vertex partition, absent when an edge lies inside a class.
// Classes are named by their least member.
inline std::optional<DistinguishedGraph> quotient_by_partition(const Graph& g,
                                                               const std::vector<std::string>& tuple,
                                                               const std::vector<int>& cls) {
    const int n = g.n();
    for (auto [u, v] : g.edge_pairs())
        if (cls[u] == cls[v]) return std::nullopt;
    int k = 0;
    for (int c : cls) k = std::max(k, c + 1);
    std::vector<std::string> names(k);
    std::vector<char> have(k, 0);
    for (int i = 0; i < n; ++i)
        if (!have[cls[i]]) {
            have[cls[i]] = 1;
            names[cls[i]] = g.name(i);
        }
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edge_pairs()) es.push_back({names[cls[u]], names[cls[v]]});
    std::vector<std::string> tup;
    tup.reserve(tuple.size());
    for (const auto& y : tuple) tup.push_back(names[cls[g.require_index(y)]]);
    return DistinguishedGraph{Graph::make_collapsing(names, es), std::move(tup)};
}

inline std::vector<std::size_t> sym_diff(const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// Formal sum of distinguished graphs whose hom-vectors XOR to v. The
// candidate family is the edgeless tuple graph followed by the loopless
// quotients of the host distinguished at each tuple class; over an
// involution-free host the injective-count matrix between tuple classes is
// odd-diagonal, which makes the family span the whole space, so a spanning
// failure after a full sweep is a bug rather than a search miss.
inline std::optional<std::vector<DistinguishedGraph>> implement_vector(
    const Graph& h, int r, const std::vector<unsigned char>& v, const SymmetryBudget& budget = {},
    const CountBudget& cb = {}) {
    if (r < 0) fail(errc::precondition, "negative tuple arity");
    if (find_involution(h, InvolutionPolicy::least, budget))
        fail(errc::precondition, "host has an involution");
    const auto reps = enumerate_tuples_up_to_iso(h, r, budget);
    const std::size_t lambda = reps.size();
    if (v.size() != lambda)
        fail(errc::precondition, "vector length " + std::to_string(v.size()) +
                                     " differs from the tuple class count " + std::to_string(lambda));

    const auto enames = detail::numbered_names("p", r);
    DistinguishedGraph edgeless{Graph::make(enames, {}), enames};
    if (std::all_of(v.begin(), v.end(), [](unsigned char b) { return b == 0; }))
        return std::vector<DistinguishedGraph>{edgeless, edgeless};  // x + x = 0

    struct Row {
        std::vector<unsigned char> bits;
        std::vector<std::size_t> comb;  // candidate indices this row sums
    };
    std::vector<std::optional<Row>> by_pivot(lambda);
    std::map<std::size_t, DistinguishedGraph> kept;
    std::vector<unsigned char> residual(v.begin(), v.end());
    std::vector<std::size_t> residual_comb;

    auto reduce = [&](std::vector<unsigned char>& bits, std::vector<std::size_t>& comb) {
        for (std::size_t i = 0; i < lambda; ++i)
            if (bits[i] && by_pivot[i]) {
                const Row& row = *by_pivot[i];
                for (std::size_t k = 0; k < lambda; ++k) bits[k] ^= row.bits[k];
                comb = detail::sym_diff(comb, row.comb);
            }
    };
    auto solved = [&] {
        return std::all_of(residual.begin(), residual.end(),
                           [](unsigned char b) { return b == 0; });
    };

    std::size_t examined = 0;
    bool done = false;
    auto push = [&](const DistinguishedGraph& cand) {
        if (++examined > budget.max_family) return;  // caller reports exhaustion
        auto bits = detail::hom_bits(cand, h, reps, cb);
        std::vector<std::size_t> comb{examined - 1};
        reduce(bits, comb);
        std::size_t p = lambda;
        for (std::size_t i = 0; i < lambda; ++i)
            if (bits[i]) {
                p = i;
                break;
            }
        if (p == lambda) return;  // dependent, discard
        kept.emplace(examined - 1, cand);
        by_pivot[p] = Row{std::move(bits), std::move(comb)};
        reduce(residual, residual_comb);
        if (solved()) done = true;
    };

    push(edgeless);
    const int n = h.n();
    for (std::size_t q = 0; q < lambda && !done && examined <= budget.max_family; ++q) {
        detail::RgsEnumerator rgs(n);
        std::vector<int> cls;
        while (!done && examined <= budget.max_family && rgs.next(cls)) {
            if (auto quot = detail::quotient_by_partition(h, reps[q], cls)) push(*quot);
        }
    }
    if (examined > budget.max_family && !done) return std::nullopt;
    if (!done && !solved())
        fail(errc::contract, "quotient family failed to span the hom-vector space");

    std::vector<DistinguishedGraph> out;
    out.reserve(residual_comb.size());
    for (std::size_t idx : residual_comb) out.push_back(kept.at(idx));
    return out;
}

// Glue two distinguished graphs position-wise along their tuples; the glued
// positions become the tuple of the result. Absent when some identification
// class contains an edge, in which case the glued graph would need a loop
// and admits no homomorphism into any simple host.
inline std::optional<DistinguishedGraph> try_glue_at_tuple(const DistinguishedGraph& a,
                                                           const DistinguishedGraph& b) {
    if (a.arity() != b.arity()) fail(errc::arity, "tuple lengths differ");
    const int r = a.arity();
    auto u = disjoint_union_with_tags({{{a.g, {}}, "1"}, {{b.g, {}}, "2"}});

    std::map<std::string, std::string> parent;
    auto find = [&](std::string v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    std::vector<std::string> left(r), right(r);
    for (int i = 0; i < r; ++i) {
        left[i] = tag_name(a.xs[i], "1");
        right[i] = tag_name(b.xs[i], "2");
        parent.emplace(left[i], left[i]);
        parent.emplace(right[i], right[i]);
    }
    for (int i = 0; i < r; ++i) {
        auto ra = find(left[i]), rb = find(right[i]);
        if (ra != rb) parent[ra] = rb;
    }
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& [v, p] : parent) {
        (void)p;
        groups[find(v)].insert(v);
    }
    std::vector<std::vector<std::string>> classes;
    for (const auto& [root, members] : groups) {
        (void)root;
        classes.push_back({members.begin(), members.end()});
    }
    std::sort(classes.begin(), classes.end());

    for (const auto& c : classes)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (u.g.adjacent(u.g.require_index(c[i]), u.g.require_index(c[j])))
                    return std::nullopt;

    const auto names = detail::numbered_names("w", static_cast<int>(classes.size()));
    auto merged = identify_vertices(u, classes, names);
    std::map<std::string, std::string> class_of;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& m : classes[c]) class_of[m] = names[c];
    std::vector<std::string> tuple;
    tuple.reserve(r);
    for (int i = 0; i < r; ++i) tuple.push_back(class_of.at(left[i]));
    return DistinguishedGraph{std::move(merged.g), std::move(tuple)};
}

inline DistinguishedGraph glue_at_tuple(const DistinguishedGraph& a, const DistinguishedGraph& b) {
    auto g = try_glue_at_tuple(a, b);
    if (!g) fail(errc::loop, "gluing identifies adjacent vertices");
    return std::move(*g);
}

// Replace the pinning of J by glued gadgets: the output graphs are plain,
// and the sum of their hom counts into H agrees with the pinned count of J
// mod 2. Works by implementing the unit vector at the tuple class of the
// pinned images and gluing each summand onto J at the pinned vertices.
inline std::vector<Graph> reduce_partlab_instance(const PartiallyLabelledGraph& j, const Graph& h,
                                                  const SymmetryBudget& budget = {},
                                                  const CountBudget& cb = {}) {
    if (j.pins.empty()) return {j.g};
    if (find_involution(h, InvolutionPolicy::least, budget))
        fail(errc::precondition, "host has an involution");
    const int r = static_cast<int>(j.pins.size());
    if (r > budget.max_pin_arity)
        fail(errc::precondition, "more than " + std::to_string(budget.max_pin_arity) +
                                     " pinned vertices");
    std::vector<std::string> xs, ys;
    for (const auto& [x, y] : j.pins) {
        h.require_index(y);
        xs.push_back(x);
        ys.push_back(y);
    }

    const auto reps = enumerate_tuples_up_to_iso(h, r, budget);
    const auto orb = orbit_of_tuple(h, ys, budget);
    const auto& least = orb.front();
    std::size_t p = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (reps[i] == least) {
            p = i;
            break;
        }
    if (p == reps.size()) fail(errc::contract, "pinned tuple class missing from the enumeration");

    std::vector<unsigned char> unit(reps.size(), 0);
    unit[p] = 1;
    auto impl = implement_vector(h, r, unit, budget, cb);
    if (!impl) fail(errc::cap_exceeded, "implementing the unit vector exhausted the search budget");

    std::vector<Graph> out;
    for (const auto& theta : *impl) {
        // A summand whose gluing needs a loop admits no homomorphisms and
        // contributes nothing to the sum, so it is dropped.
        if (auto glued = try_glue_at_tuple({j.g, xs}, theta)) out.push_back(std::move(glued->g));
    }
    return out;
}

}  // namespace parhom
