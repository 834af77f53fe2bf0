#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parhom {

enum class errc {
    naming_conflict,
    pin_conflict,
    loop,
    parse,
    domain,
    arity,
    cap_exceeded,
    precondition,
    contract,
    minimality,
};

struct error : std::runtime_error {
    errc code;
    int line;  // 1-based source line for parse errors, -1 otherwise

    error(errc c, const std::string& msg, int ln = -1)
        : std::runtime_error(msg), code(c), line(ln) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg, int line = -1) {
    throw error(c, msg, line);
}

// Finite simple undirected graph. Vertices are opaque strings; internally
// they are indexed in sorted name order, so every enumeration that walks
// indices is automatically lexicographic.
class Graph {
  public:
    Graph() = default;

    static Graph make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
        Graph g;
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t i = 1; i < vertices.size(); ++i)
            if (vertices[i] == vertices[i - 1])
                fail(errc::precondition, "duplicate vertex '" + vertices[i] + "'");
        g.names_ = std::move(vertices);
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : edges) {
            int u = g.require_index(a);
            int v = g.require_index(b);
            if (u == v) fail(errc::loop, "loop at vertex '" + a + "'");
            auto e = std::minmax(u, v);
            if (!seen.insert({e.first, e.second}).second)
                fail(errc::precondition, "duplicate edge " + a + " " + b);
        }
        g.edges_.assign(seen.begin(), seen.end());
        g.build_adjacency();
        return g;
    }

    // Same as make but tolerates repeated edges; used by constructions that
    // merge vertices, where parallel edges legitimately collapse.
    static Graph make_collapsing(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
        Graph g;
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        g.names_ = std::move(vertices);
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : edges) {
            int u = g.require_index(a);
            int v = g.require_index(b);
            if (u == v) fail(errc::loop, "loop at vertex '" + a + "'");
            seen.insert({std::min(u, v), std::max(u, v)});
        }
        g.edges_.assign(seen.begin(), seen.end());
        g.build_adjacency();
        return g;
    }

    int n() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<std::pair<int, int>>& edge_pairs() const { return edges_; }

    std::optional<int> index(const std::string& v) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), v);
        if (it == names_.end() || *it != v) return std::nullopt;
        return static_cast<int>(it - names_.begin());
    }

    int require_index(const std::string& v) const {
        auto i = index(v);
        if (!i) fail(errc::domain, "unknown vertex '" + v + "'");
        return *i;
    }

    bool has_vertex(const std::string& v) const { return index(v).has_value(); }

    const std::vector<int>& neighbours(int i) const { return adj_[i]; }
    int degree(int i) const { return static_cast<int>(adj_[i].size()); }

    bool adjacent(int u, int v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    std::vector<std::pair<std::string, std::string>> edge_names() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(edges_.size());
        for (auto [u, v] : edges_) out.push_back({names_[u], names_[v]});
        return out;
    }

    Graph induced(const std::vector<int>& keep) const {
        std::vector<std::string> vs;
        vs.reserve(keep.size());
        for (int i : keep) vs.push_back(names_[i]);
        std::vector<char> in(names_.size(), 0);
        for (int i : keep) in[i] = 1;
        std::vector<std::pair<std::string, std::string>> es;
        for (auto [u, v] : edges_)
            if (in[u] && in[v]) es.push_back({names_[u], names_[v]});
        return make(std::move(vs), es);
    }

    Graph induced_names(const std::vector<std::string>& keep) const {
        std::vector<int> idx;
        idx.reserve(keep.size());
        for (const auto& v : keep) idx.push_back(require_index(v));
        return induced(idx);
    }

    // Component vertex sets as sorted index lists, ordered by least vertex.
    std::vector<std::vector<int>> component_sets() const {
        std::vector<int> comp(names_.size(), -1);
        int c = 0;
        for (int s = 0; s < n(); ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj_[u])
                    if (comp[v] == -1) {
                        comp[v] = c;
                        stack.push_back(v);
                    }
            }
            ++c;
        }
        std::vector<std::vector<int>> sets(c);
        for (int i = 0; i < n(); ++i) sets[comp[i]].push_back(i);
        return sets;
    }

    std::vector<Graph> connected_components() const {
        std::vector<Graph> out;
        for (const auto& s : component_sets()) out.push_back(induced(s));
        return out;
    }

    bool is_connected() const { return component_sets().size() <= 1; }

    Graph renamed(const std::map<std::string, std::string>& how) const {
        auto nm = [&](const std::string& v) {
            auto it = how.find(v);
            return it == how.end() ? v : it->second;
        };
        std::vector<std::string> vs;
        vs.reserve(names_.size());
        for (const auto& v : names_) vs.push_back(nm(v));
        std::vector<std::pair<std::string, std::string>> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_) es.push_back({nm(names_[u]), nm(names_[v])});
        return make(std::move(vs), es);
    }

    bool operator==(const Graph& o) const {
        return names_ == o.names_ && edges_ == o.edges_;
    }

  private:
    void build_adjacency() {
        adj_.assign(names_.size(), {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::vector<std::string> names_;           // sorted
    std::vector<std::pair<int, int>> edges_;   // normalized u<v, sorted
    std::vector<std::vector<int>> adj_;        // sorted neighbour lists
};

// Tagged copy name. Tags must be @-free so the last '@' always splits a
// serialized name back into (base, tag).
inline std::string tag_name(const std::string& base, const std::string& tag) {
    if (tag.empty()) fail(errc::naming_conflict, "empty tag");
    if (tag.find('@') != std::string::npos)
        fail(errc::naming_conflict, "tag '" + tag + "' contains '@'");
    if (tag.find_first_of(" \t\r\n") != std::string::npos)
        fail(errc::naming_conflict, "tag '" + tag + "' contains whitespace");
    return base + "@" + tag;
}

inline std::pair<std::string, std::string> split_tag(const std::string& name) {
    auto pos = name.rfind('@');
    if (pos == std::string::npos) return {name, ""};
    return {name.substr(0, pos), name.substr(pos + 1)};
}

// Partially H-labelled graph: underlying graph plus a partial pinning of
// its vertices to host-vertex names. Host validity is checked at use time.
struct PartiallyLabelledGraph {
    Graph g;
    std::map<std::string, std::string> pins;

    static PartiallyLabelledGraph make(Graph graph, std::map<std::string, std::string> pinning) {
        for (const auto& [v, h] : pinning)
            if (!graph.has_vertex(v))
                fail(errc::domain, "pinned vertex '" + v + "' not in graph");
        return {std::move(graph), std::move(pinning)};
    }

    bool operator==(const PartiallyLabelledGraph& o) const {
        return g == o.g && pins == o.pins;
    }
};

// Graph with an ordered tuple of distinguished vertices (repeats allowed).
struct DistinguishedGraph {
    Graph g;
    std::vector<std::string> xs;

    static DistinguishedGraph make(Graph graph, std::vector<std::string> tuple) {
        for (const auto& v : tuple)
            if (!graph.has_vertex(v))
                fail(errc::domain, "distinguished vertex '" + v + "' not in graph");
        return {std::move(graph), std::move(tuple)};
    }

    int arity() const { return static_cast<int>(xs.size()); }

    // Coincidence pattern of the tuple: entry i is the least j with x_j = x_i.
    std::vector<int> equality_type() const {
        std::vector<int> t(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            t[i] = static_cast<int>(i);
            for (std::size_t j = 0; j < i; ++j)
                if (xs[j] == xs[i]) {
                    t[i] = static_cast<int>(j);
                    break;
                }
        }
        return t;
    }
};

inline PartiallyLabelledGraph disjoint_union_with_tags(
    const std::vector<std::pair<PartiallyLabelledGraph, std::string>>& parts) {
    std::set<std::string> tags;
    for (const auto& [part, tag] : parts) {
        (void)part;
        if (!tags.insert(tag).second)
            fail(errc::naming_conflict, "duplicate tag '" + tag + "'");
    }
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::map<std::string, std::string> pins;
    for (const auto& [part, tag] : parts) {
        for (const auto& v : part.g.vertex_names()) vs.push_back(tag_name(v, tag));
        for (const auto& [a, b] : part.g.edge_names())
            es.push_back({tag_name(a, tag), tag_name(b, tag)});
        for (const auto& [v, h] : part.pins) pins[tag_name(v, tag)] = h;
    }
    return PartiallyLabelledGraph::make(Graph::make(std::move(vs), es), std::move(pins));
}

// Merge each class of vertices into one fresh-named vertex. Parallel edges
// collapse; merging adjacent vertices is a caller error.
inline PartiallyLabelledGraph identify_vertices(const PartiallyLabelledGraph& j,
                                                const std::vector<std::vector<std::string>>& classes,
                                                const std::vector<std::string>& names) {
    if (classes.size() != names.size())
        fail(errc::precondition, "one fresh name per class required");
    std::map<std::string, std::size_t> cls;  // member -> class id
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) fail(errc::precondition, "empty identification class");
        for (const auto& v : classes[c]) {
            j.g.require_index(v);
            if (!cls.insert({v, c}).second)
                fail(errc::precondition, "vertex '" + v + "' in two classes");
        }
    }
    std::set<std::string> fresh(names.begin(), names.end());
    if (fresh.size() != names.size()) fail(errc::naming_conflict, "repeated class name");
    for (const auto& v : j.g.vertex_names())
        if (!cls.count(v) && fresh.count(v))
            fail(errc::naming_conflict, "class name '" + v + "' already a vertex");

    auto nm = [&](const std::string& v) -> const std::string& {
        auto it = cls.find(v);
        return it == cls.end() ? v : names[it->second];
    };
    std::vector<std::string> vs;
    for (const auto& v : j.g.vertex_names())
        if (!cls.count(v)) vs.push_back(v);
    vs.insert(vs.end(), names.begin(), names.end());

    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : j.g.edge_names()) {
        const std::string& a2 = nm(a);
        const std::string& b2 = nm(b);
        if (a2 == b2)
            fail(errc::loop, "identifying adjacent vertices '" + a + "', '" + b + "'");
        es.push_back({a2, b2});
    }

    std::map<std::string, std::string> pins;
    for (const auto& [v, h] : j.pins) {
        const std::string& v2 = nm(v);
        auto it = pins.find(v2);
        if (it != pins.end() && it->second != h)
            fail(errc::pin_conflict,
                 "class '" + v2 + "' pinned to both '" + it->second + "' and '" + h + "'");
        pins[v2] = h;
    }
    return PartiallyLabelledGraph::make(Graph::make_collapsing(std::move(vs), es), std::move(pins));
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace detail

// Graph document: optional '#' comment lines, one "vertices: ..." line,
// then one "u v" edge per line.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> vertices;
    bool have_vertices = false;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> seen;
    std::set<std::string> declared;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        auto toks = detail::split_ws(line);
        if (!have_vertices) {
            if (toks.empty() || toks[0] != "vertices:")
                fail(errc::parse, "expected 'vertices:' line", lineno);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (!declared.insert(toks[i]).second)
                    fail(errc::parse, "duplicate vertex '" + toks[i] + "'", lineno);
                vertices.push_back(toks[i]);
            }
            have_vertices = true;
            continue;
        }
        if (toks.size() != 2)
            fail(errc::parse, "expected edge line 'u v'", lineno);
        if (!declared.count(toks[0]))
            fail(errc::parse, "undeclared endpoint '" + toks[0] + "'", lineno);
        if (!declared.count(toks[1]))
            fail(errc::parse, "undeclared endpoint '" + toks[1] + "'", lineno);
        if (toks[0] == toks[1])
            fail(errc::parse, "loop at vertex '" + toks[0] + "'", lineno);
        auto key = std::minmax(toks[0], toks[1]);
        if (!seen.insert(key).second)
            fail(errc::parse, "duplicate edge " + toks[0] + " " + toks[1], lineno);
        edges.push_back({toks[0], toks[1]});
    }
    if (!have_vertices) fail(errc::parse, "missing 'vertices:' line", lineno);
    return Graph::make(std::move(vertices), edges);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : g.vertex_names()) out << ' ' << v;
    out << '\n';
    for (const auto& [u, v] : g.edge_names()) out << u << ' ' << v << '\n';
    return out.str();
}

// Pinning document: one "g_vertex -> h_vertex" line each.
inline std::map<std::string, std::string> parse_pinning(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, std::string> pins;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        auto toks = detail::split_ws(line);
        if (toks.size() != 3 || toks[1] != "->")
            fail(errc::parse, "expected pin line 'u -> h'", lineno);
        if (pins.count(toks[0]))
            fail(errc::parse, "vertex '" + toks[0] + "' pinned twice", lineno);
        pins[toks[0]] = toks[2];
    }
    return pins;
}

inline std::string serialize_pinning(const std::map<std::string, std::string>& pins) {
    std::ostringstream out;
    for (const auto& [v, h] : pins) out << v << " -> " << h << '\n';
    return out.str();
}

}  // namespace parhom
