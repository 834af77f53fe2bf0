#pragma once

// Structural predicates and censuses feeding the gadget search:
// square-freeness, odd girth, distance spheres, distance to the nearest
// cycle, and exact counts of fixed-length cycles through paths.

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace parhom {

inline bool is_square_free(const Graph& h) {
    // no 4-cycle, equivalently no two vertices with two common neighbours
    const int n = h.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = h.neighbours(u);
            const auto& b = h.neighbours(v);
            std::size_t i = 0, j = 0;
            int common = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j])
                    ++i;
                else if (a[i] > b[j])
                    ++j;
                else {
                    if (++common == 2) return false;
                    ++i;
                    ++j;
                }
            }
        }
    return true;
}

// Length of the shortest odd cycle, absent for bipartite graphs. The
// shortest odd closed walk through any vertex is a cycle, so a parity-
// layered search from every start suffices.
inline std::optional<int> odd_girth(const Graph& h) {
    const int n = h.n();
    int best = INT_MAX;
    std::vector<int> dist(2 * n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[2 * s] = 0;
        queue.assign(1, 2 * s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head] / 2, p = queue[head] % 2;
            for (int w : h.neighbours(v)) {
                int code = 2 * w + (1 - p);
                if (dist[code] == -1) {
                    dist[code] = dist[2 * v + p] + 1;
                    queue.push_back(code);
                }
            }
        }
        if (dist[2 * s + 1] != -1) best = std::min(best, dist[2 * s + 1]);
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

// Vertices at distance exactly r (a sphere, not a filled ball).
inline std::vector<std::string> ball_at_distance(const Graph& h, const std::string& v, int r) {
    if (r < 0) fail(errc::precondition, "negative radius");
    const int s = h.require_index(v);
    std::vector<int> dist(h.n(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : h.neighbours(u))
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    std::vector<std::string> out;
    for (int i = 0; i < h.n(); ++i)
        if (dist[i] == r) out.push_back(h.name(i));
    return out;
}

namespace detail {

// An edge lies on a cycle iff its endpoints stay connected without it.
inline bool edge_on_cycle(const Graph& h, int eu, int ev) {
    std::vector<char> seen(h.n(), 0);
    std::vector<int> stack{eu};
    seen[eu] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : h.neighbours(u)) {
            if ((u == eu && w == ev) || (u == ev && w == eu)) continue;
            if (!seen[w]) {
                if (w == ev) return true;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace detail

inline std::optional<int> min_distance_to_cycle(const Graph& h, const std::string& v) {
    const int src = h.require_index(v);
    const int n = h.n();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    for (auto [a, b] : h.edge_pairs())
        if (dist[a] == -1 || dist[b] == -1) {
            if (detail::edge_on_cycle(h, a, b)) {
                for (int x : {a, b})
                    if (dist[x] == -1) {
                        dist[x] = 0;
                        queue.push_back(x);
                    }
            }
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : h.neighbours(u))
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    if (dist[src] == -1) return std::nullopt;
    return dist[src];
}

// Exact number of simple ell-cycles containing the given path. The length
// must be the odd girth: only there does every cycle count carry the
// structural meaning the gadget constructions rely on. A single-vertex
// path counts cycles through that vertex.
inline long long count_cycles_through_path(const Graph& h, int ell,
                                           const std::vector<std::string>& path) {
    auto og = odd_girth(h);
    if (!og || *og != ell)
        fail(errc::contract,
             "cycle length " + std::to_string(ell) + " is not the odd girth of the host");
    if (path.empty()) fail(errc::precondition, "empty path");
    if (static_cast<int>(path.size()) >= ell)
        fail(errc::precondition, "path must have fewer vertices than the cycle length");
    std::vector<int> p;
    p.reserve(path.size());
    for (const auto& v : path) p.push_back(h.require_index(v));
    std::set<int> distinct(p.begin(), p.end());
    if (distinct.size() != p.size()) fail(errc::precondition, "path repeats a vertex");
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!h.adjacent(p[i - 1], p[i]))
            fail(errc::precondition,
                 "'" + path[i - 1] + "' and '" + path[i] + "' are not adjacent");

    std::vector<char> used(h.n(), 0);
    for (int v : p) used[v] = 1;
    const int start = p.front();
    long long total = 0;
    auto dfs = [&](auto&& self, int v, int left) -> void {
        if (left == 1) {
            total += h.adjacent(v, start) ? 1 : 0;
            return;
        }
        for (int w : h.neighbours(v)) {
            if (used[w]) continue;
            used[w] = 1;
            self(self, w, left - 1);
            used[w] = 0;
        }
    };
    dfs(dfs, p.back(), ell - static_cast<int>(p.size()) + 1);
    if (p.size() == 1) total /= 2;  // a lone anchor sees each cycle in both directions
    return total;
}

struct CycleCensus {
    int length = 0;
    std::map<std::pair<std::string, std::string>, long long> edge_counts;

    // zero for pairs that are not edges or edges on no cycle of this length
    long long for_edge(const std::string& u, const std::string& v) const {
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        auto it = edge_counts.find(key);
        return it == edge_counts.end() ? 0 : it->second;
    }
};

inline CycleCensus cycle_census(const Graph& h, int ell) {
    CycleCensus c;
    c.length = ell;
    for (const auto& [a, b] : h.edge_names())
        c.edge_counts[{std::min(a, b), std::max(a, b)}] = count_cycles_through_path(h, ell, {a, b});
    return c;
}

// Longest path lying in a positive even number of ell-cycles, for hosts
// where every edge has an even count. Ties go to the lexicographically
// least vertex sequence, taking the smaller of the two orientations.
inline std::optional<std::vector<std::string>> longest_path_in_even_cycles(const Graph& h,
                                                                           int ell) {
    auto census = cycle_census(h, ell);
    bool any_positive = false;
    for (const auto& [e, c] : census.edge_counts) {
        if (c % 2 != 0)
            fail(errc::precondition, "edge " + e.first + " " + e.second + " lies in an odd number of " +
                                         std::to_string(ell) + "-cycles");
        if (c > 0) any_positive = true;
    }
    if (!any_positive) return std::nullopt;

    const int n = h.n();
    for (int len = ell - 2; len >= 1; --len) {
        std::optional<std::vector<std::string>> hit;
        std::vector<int> seq;
        std::vector<char> used(n, 0);
        auto dfs = [&](auto&& self) -> bool {
            if (static_cast<int>(seq.size()) == len + 1) {
                std::vector<int> rev(seq.rbegin(), seq.rend());
                if (rev < seq) return false;  // the reversed orientation was or will be visited
                std::vector<std::string> names;
                names.reserve(seq.size());
                for (int i : seq) names.push_back(h.name(i));
                auto cnt = count_cycles_through_path(h, ell, names);
                if (cnt > 0 && cnt % 2 == 0) {
                    hit = std::move(names);
                    return true;
                }
                return false;
            }
            for (int w : h.neighbours(seq.back())) {
                if (used[w]) continue;
                seq.push_back(w);
                used[w] = 1;
                if (self(self)) return true;
                seq.pop_back();
                used[w] = 0;
            }
            return false;
        };
        for (int s = 0; s < n && !hit; ++s) {
            seq.assign(1, s);
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            dfs(dfs);
        }
        if (hit) return hit;
    }
    return std::nullopt;
}

struct DegreeProfile {
    std::map<std::string, int> degree;
    std::vector<std::string> even;  // isolated vertices included
    std::vector<std::string> odd;

    std::vector<std::string> positive_even() const {
        std::vector<std::string> out;
        for (const auto& v : even)
            if (degree.at(v) > 0) out.push_back(v);
        return out;
    }
};

inline DegreeProfile degree_profile(const Graph& h) {
    DegreeProfile p;
    for (int i = 0; i < h.n(); ++i) {
        p.degree[h.name(i)] = h.degree(i);
        (h.degree(i) % 2 == 0 ? p.even : p.odd).push_back(h.name(i));
    }
    return p;
}

}  // namespace parhom
