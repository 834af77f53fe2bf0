#pragma once

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "parhom/graph.hpp"

namespace parhom {

using bigint = boost::multiprecision::cpp_int;

struct HomCount {
    bigint exact;
    bool parity;  // invariant: parity == exact mod 2
};

inline HomCount hom_count(bigint v) {
    bool p = (v & 1) != 0;
    return {std::move(v), p};
}

using Assignment = std::map<std::string, std::string>;

struct HomList {
    std::vector<Assignment> homs;
    bool truncated = false;
};

struct CountBudget {
    // Largest intermediate table the elimination engine may allocate.
    std::size_t max_table_cells = std::size_t{1} << 24;
};

namespace detail {

// GF(2) scalar with the arithmetic interface the engine expects.
struct P2 {
    std::uint8_t v = 0;
    P2() = default;
    explicit P2(bigint b) : v(static_cast<std::uint8_t>(b & 1)) {}
    explicit P2(std::size_t n) : v(n & 1) {}
    P2 operator*(P2 o) const { return P2(std::size_t(v & o.v)); }
    P2& operator+=(P2 o) {
        v ^= o.v;
        return *this;
    }
};

template <class T>
T scalar_of_size(std::size_t n) {
    return T(n);
}

// Domains per source vertex, as host-index lists.
inline std::vector<std::vector<int>> pin_domains(const PartiallyLabelledGraph& j, const Graph& h) {
    std::vector<std::vector<int>> dom(j.g.n());
    std::vector<int> full(h.n());
    for (int i = 0; i < h.n(); ++i) full[i] = i;
    for (int i = 0; i < j.g.n(); ++i) dom[i] = full;
    for (const auto& [v, t] : j.pins) {
        int gi = j.g.require_index(v);
        auto hi = h.index(t);
        if (!hi) fail(errc::domain, "pin target '" + t + "' not in host");
        dom[gi] = {*hi};
    }
    return dom;
}

template <class T>
struct Factor {
    std::vector<int> scope;  // source-vertex ids, ascending
    std::vector<T> table;    // mixed-radix over the scope's domains
};

// Bucket elimination over one set of source vertices. Factors are the edge
// indicator tables; vertices with no factor contribute |domain|.
template <class T>
T eliminate_count(const Graph& g, const std::vector<int>& vars,
                  const std::vector<std::vector<int>>& dom, const Graph& h,
                  std::size_t max_cells) {
    std::vector<Factor<T>> facs;
    std::vector<char> in_vars(g.n(), 0);
    for (int v : vars) in_vars[v] = 1;
    for (int u : vars)
        for (int w : g.neighbours(u)) {
            if (w <= u || !in_vars[w]) continue;
            Factor<T> f;
            f.scope = {u, w};
            f.table.resize(dom[u].size() * dom[w].size());
            std::size_t idx = 0;
            for (int a : dom[u])
                for (int b : dom[w]) f.table[idx++] = T(std::size_t(h.adjacent(a, b) ? 1 : 0));
            facs.push_back(std::move(f));
        }

    // interaction graph, updated with fill-ins as vertices are eliminated
    std::map<int, std::set<int>> live;
    for (int v : vars) live[v] = {};
    for (const auto& f : facs)
        for (int a : f.scope)
            for (int b : f.scope)
                if (a != b) live[a].insert(b);

    T result(std::size_t{1});
    while (!live.empty()) {
        int best = -1;
        std::size_t best_deg = 0;
        for (const auto& [v, nb] : live)
            if (best == -1 || nb.size() < best_deg) {
                best = v;
                best_deg = nb.size();
            }
        int v = best;

        std::vector<Factor<T>> touching;
        for (std::size_t i = 0; i < facs.size();) {
            if (std::binary_search(facs[i].scope.begin(), facs[i].scope.end(), v)) {
                touching.push_back(std::move(facs[i]));
                facs[i] = std::move(facs.back());
                facs.pop_back();
            } else {
                ++i;
            }
        }

        std::set<int> scope_set;
        for (const auto& f : touching)
            for (int a : f.scope) scope_set.insert(a);
        scope_set.erase(v);
        std::vector<int> ns(scope_set.begin(), scope_set.end());

        std::size_t cells = 1;
        for (int a : ns) {
            cells *= dom[a].size();
            if (cells > max_cells) fail(errc::cap_exceeded, "elimination table too large");
        }

        // per-factor strides relative to ns + v (v treated as the innermost axis)
        struct Map {
            const Factor<T>* f;
            std::vector<std::size_t> stride_in_ns;  // per ns position
            std::size_t stride_v = 0;
        };
        std::vector<Map> maps;
        for (const auto& f : touching) {
            Map m;
            m.f = &f;
            std::vector<std::size_t> strides(f.scope.size());
            std::size_t s = 1;
            for (int k = static_cast<int>(f.scope.size()) - 1; k >= 0; --k) {
                strides[k] = s;
                s *= dom[f.scope[k]].size();
            }
            m.stride_in_ns.assign(ns.size(), 0);
            for (std::size_t k = 0; k < f.scope.size(); ++k) {
                if (f.scope[k] == v) {
                    m.stride_v = strides[k];
                } else {
                    auto it = std::lower_bound(ns.begin(), ns.end(), f.scope[k]);
                    m.stride_in_ns[it - ns.begin()] = strides[k];
                }
            }
            maps.push_back(std::move(m));
        }

        Factor<T> out;
        out.scope = ns;
        out.table.assign(cells, T(std::size_t{0}));
        std::vector<std::size_t> pos(ns.size(), 0);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            T acc(std::size_t{0});
            for (std::size_t dv = 0; dv < dom[v].size(); ++dv) {
                T prod(std::size_t{1});
                for (const auto& m : maps) {
                    std::size_t off = m.stride_v * dv;
                    for (std::size_t k = 0; k < ns.size(); ++k) off += m.stride_in_ns[k] * pos[k];
                    prod = prod * m.f->table[off];
                }
                acc += prod;
            }
            out.table[cell] = std::move(acc);
            for (int k = static_cast<int>(ns.size()) - 1; k >= 0; --k) {
                if (++pos[k] < dom[ns[k]].size()) break;
                pos[k] = 0;
            }
        }

        for (int a : ns) {
            live[a].erase(v);
            for (int b : ns)
                if (a != b) live[a].insert(b);
        }
        live.erase(v);

        if (out.scope.empty()) {
            result = result * out.table[0];
        } else {
            facs.push_back(std::move(out));
        }
    }
    return result;
}

template <class T>
T count_pinned_as(const PartiallyLabelledGraph& j, const Graph& h, std::size_t max_cells) {
    auto dom = pin_domains(j, h);
    if (j.g.n() == 0) return T(std::size_t{1});
    T total(std::size_t{1});
    for (const auto& comp : j.g.component_sets())
        total = total * eliminate_count<T>(j.g, comp, dom, h, max_cells);
    return total;
}

}  // namespace detail

inline HomCount count_pinned_homs(const PartiallyLabelledGraph& j, const Graph& h,
                                  const CountBudget& budget = {}) {
    return hom_count(detail::count_pinned_as<bigint>(j, h, budget.max_table_cells));
}

inline bool count_pinned_parity(const PartiallyLabelledGraph& j, const Graph& h,
                                const CountBudget& budget = {}) {
    return detail::count_pinned_as<detail::P2>(j, h, budget.max_table_cells).v != 0;
}

inline HomCount count_homs(const Graph& g, const Graph& h, const CountBudget& budget = {}) {
    return count_pinned_homs(PartiallyLabelledGraph{g, {}}, h, budget);
}

namespace detail {

// Distinguished-tuple counting reduces to pinning x_i -> y_i; a repeated
// source vertex sent to two targets kills every homomorphism.
inline std::optional<PartiallyLabelledGraph> distinguished_as_pinned(const DistinguishedGraph& g,
                                                                     const DistinguishedGraph& h) {
    if (g.arity() != h.arity()) fail(errc::arity, "distinguished tuples differ in length");
    std::map<std::string, std::string> pins;
    for (int i = 0; i < g.arity(); ++i) {
        auto it = pins.find(g.xs[i]);
        if (it != pins.end() && it->second != h.xs[i]) return std::nullopt;
        pins[g.xs[i]] = h.xs[i];
    }
    return PartiallyLabelledGraph::make(g.g, std::move(pins));
}

}  // namespace detail

inline HomCount count_distinguished_homs(const DistinguishedGraph& g, const DistinguishedGraph& h,
                                         const CountBudget& budget = {}) {
    auto j = detail::distinguished_as_pinned(g, h);
    if (!j) return hom_count(0);
    return count_pinned_homs(*j, h.g, budget);
}

inline bool count_distinguished_parity(const DistinguishedGraph& g, const DistinguishedGraph& h,
                                       const CountBudget& budget = {}) {
    auto j = detail::distinguished_as_pinned(g, h);
    if (!j) return false;
    return count_pinned_parity(*j, h.g, budget);
}

inline HomCount count_injective_homs(const DistinguishedGraph& g, const DistinguishedGraph& h) {
    if (g.arity() != h.arity()) fail(errc::arity, "distinguished tuples differ in length");
    const Graph& G = g.g;
    const Graph& H = h.g;
    if (G.n() > H.n()) return hom_count(0);
    std::vector<int> img(G.n(), -1);
    std::vector<char> used(H.n(), 0);
    for (int i = 0; i < g.arity(); ++i) {
        int a = G.require_index(g.xs[i]);
        int b = H.require_index(h.xs[i]);
        if (img[a] == -1 && !used[b]) {
            img[a] = b;
            used[b] = 1;
        } else if (img[a] != b) {
            return hom_count(0);  // tuple forces a non-injective or clashing map
        }
    }
    bigint total = 0;
    std::vector<int> order;
    for (int i = 0; i < G.n(); ++i)
        if (img[i] == -1) order.push_back(i);
    auto consistent = [&](int a, int b) {
        for (int w : G.neighbours(a))
            if (img[w] != -1 && !H.adjacent(b, img[w])) return false;
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            ++total;
            return;
        }
        int a = order[k];
        for (int b = 0; b < H.n(); ++b) {
            if (used[b] || !consistent(a, b)) continue;
            img[a] = b;
            used[b] = 1;
            rec(k + 1);
            img[a] = -1;
            used[b] = 0;
        }
    };
    for (int i = 0; i < G.n(); ++i)
        if (img[i] != -1 && !consistent(i, img[i])) return hom_count(0);
    rec(0);
    return hom_count(total);
}

inline HomCount count_independent_sets(const Graph& g) {
    if (g.n() > 62) fail(errc::cap_exceeded, "independent-set counting capped at 62 vertices");
    std::vector<std::uint64_t> closed(g.n());
    for (int i = 0; i < g.n(); ++i) {
        std::uint64_t m = std::uint64_t{1} << i;
        for (int w : g.neighbours(i)) m |= std::uint64_t{1} << w;
        closed[i] = m;
    }
    std::unordered_map<std::uint64_t, bigint> memo;
    std::function<bigint(std::uint64_t)> rec = [&](std::uint64_t mask) -> bigint {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int best = -1, best_deg = -1;
        for (int i = 0; i < g.n(); ++i) {
            if (!(mask >> i & 1)) continue;
            int d = static_cast<int>(std::popcount(closed[i] & mask)) - 1;
            if (d > best_deg) {
                best_deg = d;
                best = i;
            }
        }
        bigint r = rec(mask & ~(std::uint64_t{1} << best)) + rec(mask & ~closed[best]);
        memo[mask] = r;
        return r;
    };
    std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    return hom_count(rec(all));
}

// Brute-force oracle: all respecting homomorphisms in lexicographic order
// of image sequences, truncated at limit.
inline HomList enumerate_homs(const PartiallyLabelledGraph& j, const Graph& h, std::size_t limit) {
    auto dom = detail::pin_domains(j, h);
    HomList out;
    if (j.g.n() == 0) {
        if (limit == 0) {
            out.truncated = true;
        } else {
            out.homs.push_back({});
        }
        return out;
    }
    std::vector<int> img(j.g.n(), -1);
    bool done = false;
    std::function<void(int)> rec = [&](int i) {
        if (done) return;
        if (i == j.g.n()) {
            if (out.homs.size() == limit) {
                out.truncated = true;
                done = true;
                return;
            }
            Assignment a;
            for (int k = 0; k < j.g.n(); ++k) a[j.g.name(k)] = h.name(img[k]);
            out.homs.push_back(std::move(a));
            return;
        }
        for (int b : dom[i]) {
            bool ok = true;
            for (int w : j.g.neighbours(i)) {
                if (w < i && !h.adjacent(b, img[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[i] = b;
            rec(i + 1);
            img[i] = -1;
            if (done) return;
        }
    };
    rec(0);
    return out;
}

}  // namespace parhom
