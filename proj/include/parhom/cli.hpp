#pragma once

// Command-line driver for the pipeline. Subcommands: analyze, reduce,
// distinguish, gadget, compile, verify, classify, count, battery. Every
// command prints its payload as JSON; --json wraps the payload in a report
// envelope carrying input digests, resolved budgets, and wall time (the one
// field exempt from the reproducibility contract). Exit codes: 0 accept or
// definitive result, 1 reject or counterexample, 2 usage or malformed
// input, 3 budget-limited.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "parhom/compile.hpp"
#include "parhom/jsonio.hpp"
#include "parhom/structure.hpp"

namespace parhom {
namespace cli {

namespace detail {

// Preformatted diagnostic, already carrying the file and line it concerns.
struct input_error {
    std::string message;
};

inline std::string where(const std::string& path, const error& e) {
    std::string out = path;
    if (e.line > 0) out += ":" + std::to_string(e.line);
    return out + ": " + e.what();
}

struct Inputs {
    std::vector<std::pair<std::string, std::string>> files;  // path as typed, digest

    void add(const std::string& path, const std::string& content) {
        files.push_back({path, fnv1a64_digest(content)});
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error{"cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph load_graph(const std::string& path, Inputs& inputs) {
    auto text = read_file(path);
    inputs.add(path, text);
    try {
        return parse_graph(text);
    } catch (const error& e) {
        throw input_error{where(path, e)};
    }
}

inline ordered_json load_json(const std::string& path, Inputs& inputs) {
    auto text = read_file(path);
    inputs.add(path, text);
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error{path + ": " + e.what()};
    }
}

struct Budgets {
    std::optional<int> vertices;
    std::optional<long long> candidates;
    std::uint64_t seed = 0;
};

inline GadgetBudget gadget_budget(const Budgets& b) {
    GadgetBudget g;
    if (b.vertices) g.max_even_gadget_vertices = *b.vertices;
    return g;
}

inline SymmetryBudget symmetry_budget(const Budgets& b) {
    SymmetryBudget s;
    if (b.vertices) s.max_candidate_vertices = *b.vertices;
    if (b.candidates) s.max_family = static_cast<std::size_t>(*b.candidates);
    return s;
}

inline CompileBudget compile_budget(const Budgets& b) {
    CompileBudget c;
    if (b.vertices) c.max_instance_vertices = *b.vertices;
    return c;
}

inline std::optional<long long> env_int(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    long long x = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0')
        throw input_error{std::string(name) + ": expected an integer, got '" + v + "'"};
    return x;
}

struct Splitmix {
    std::uint64_t state;

    explicit Splitmix(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int uniform(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

inline Graph mask_graph(int n, std::uint64_t mask) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("b" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) es.push_back({vs[i], vs[j]});
    return Graph::make(vs, es);
}

inline Graph random_instance(Splitmix& rng, int n, int percent) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("r" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next() % 100 < static_cast<std::uint64_t>(percent)) es.push_back({vs[i], vs[j]});
    return Graph::make(vs, es);
}

inline const char* kind_name(DichotomyClass k) {
    switch (k) {
        case DichotomyClass::polynomial: return "polynomial";
        case DichotomyClass::parity_hard: return "parity_hard";
        case DichotomyClass::conjectured_hard: return "conjectured_hard";
        default: return "inconclusive";
    }
}

inline const char* outcome_name(DistinguishOutcome o) {
    switch (o) {
        case DistinguishOutcome::found: return "found";
        case DistinguishOutcome::isomorphic: return "isomorphic";
        default: return "budget_exhausted";
    }
}

struct Result {
    int code = 0;
    ordered_json payload;
};

inline Result run_analyze(const std::string& host_path, Inputs& inputs) {
    auto h = load_graph(host_path, inputs);
    auto prof = degree_profile(h);
    ordered_json p;
    p["schema"] = "parhom-analyze-1";
    p["vertices"] = h.n();
    p["edges"] = h.edge_count();
    p["degrees"] = ordered_json(prof.degree);
    p["even"] = prof.even;
    p["odd"] = prof.odd;
    p["positive_even"] = prof.positive_even();
    p["square_free"] = is_square_free(h);
    auto og = odd_girth(h);
    p["odd_girth"] = og ? ordered_json(*og) : ordered_json(nullptr);
    if (og) {
        auto census = cycle_census(h, *og);
        auto& rows = p["odd_girth_census"] = ordered_json::array();
        for (const auto& [e, c] : census.edge_counts) {
            ordered_json row;
            row["u"] = e.first;
            row["v"] = e.second;
            row["count"] = c;
            rows.push_back(std::move(row));
        }
    }
    return {0, std::move(p)};
}

inline Result run_reduce(const std::string& host_path, Inputs& inputs) {
    auto h = load_graph(host_path, inputs);
    auto chain = involution_free_reduction(h);
    ordered_json p;
    p["schema"] = "parhom-reduce-1";
    p["policy"] = "least";
    auto c = chain_to_json(chain);
    p["steps"] = std::move(c["steps"]);
    p["result"] = std::move(c["result"]);
    return {0, std::move(p)};
}

inline Result run_distinguish(const std::string& path1, const std::string& path2,
                              const Budgets& budgets, Inputs& inputs) {
    auto h1 = load_graph(path1, inputs);
    auto h2 = load_graph(path2, inputs);
    auto d1 = DistinguishedGraph::make(h1, {});
    auto d2 = DistinguishedGraph::make(h2, {});
    auto res = find_distinguisher(d1, d2, symmetry_budget(budgets));
    ordered_json p;
    p["schema"] = "parhom-distinguish-1";
    p["outcome"] = outcome_name(res.outcome);
    if (res.witness) {
        ordered_json w;
        w["graph"] = graph_to_json(res.witness->g);
        w["distinguished"] = res.witness->xs;
        p["witness"] = std::move(w);
        p["parities"] = {count_homs(res.witness->g, h1).parity ? 1 : 0,
                         count_homs(res.witness->g, h2).parity ? 1 : 0};
    } else {
        p["witness"] = nullptr;
    }
    int code = res.outcome == DistinguishOutcome::found        ? 0
               : res.outcome == DistinguishOutcome::isomorphic ? 1
                                                               : 3;
    return {code, std::move(p)};
}

inline Result run_gadget_search(const std::string& host_path, const Budgets& budgets,
                                Inputs& inputs) {
    auto h = load_graph(host_path, inputs);
    auto g = find_hardness_gadget(h, gadget_budget(budgets));
    ordered_json host_info;
    host_info["path"] = host_path;
    host_info["digest"] = inputs.files.back().second;
    return {0, gadget_to_json(g, host_info)};
}

inline Result run_gadget_verify(const std::string& cert_path, const std::string& host_path,
                                const Budgets& budgets, Inputs& inputs) {
    auto doc = load_json(cert_path, inputs);
    HardnessGadget g;
    try {
        g = gadget_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw input_error{cert_path + ": " + e.what()};
    }
    auto h = load_graph(host_path, inputs);
    auto verdict = verify_hardness_gadget(g, h, gadget_budget(budgets));
    ordered_json p;
    p["schema"] = "parhom-gadget-verdict-1";
    p["accepted"] = verdict.accepted;
    p["reason"] = verdict.accepted ? "all four properties hold" : verdict.reason;
    const ordered_json& body = doc.contains("payload") ? doc.at("payload") : doc;
    p["host_digest_match"] =
        body.contains("host") && body.at("host").contains("digest")
            ? ordered_json(body.at("host").at("digest") == inputs.files.back().second)
            : ordered_json(nullptr);
    return {verdict.accepted ? 0 : 1, std::move(p)};
}

inline Result run_compile(const std::string& instance_path, const std::string& cert_path,
                          Inputs& inputs) {
    auto g = load_graph(instance_path, inputs);
    auto doc = load_json(cert_path, inputs);
    HardnessGadget gadget;
    try {
        gadget = gadget_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw input_error{cert_path + ": " + e.what()};
    }
    auto inst = compile_is_instance(g, gadget);
    ordered_json p;
    p["schema"] = "parhom-compiled-1";
    p["instance_vertices"] = g.n();
    p["instance_edges"] = g.edge_count();
    p["graph"] = graph_to_json(inst.j.g);
    p["pins"] = ordered_json(inst.j.pins);
    p["vertex_anchors"] = ordered_json(inst.vertex_anchors);
    auto& ea = p["edge_anchors"] = ordered_json::array();
    for (const auto& [e, anchor] : inst.edge_anchors) {
        ordered_json row;
        row["u"] = e.first;
        row["v"] = e.second;
        row["anchor"] = anchor;
        ea.push_back(std::move(row));
    }
    return {0, std::move(p)};
}

inline Result run_verify(const std::string& cert_path, const std::string& host_path,
                         const std::string& instance_path, const std::string& battery_mode,
                         const Budgets& budgets, Inputs& inputs) {
    auto doc = load_json(cert_path, inputs);
    HardnessGadget gadget;
    try {
        gadget = gadget_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw input_error{cert_path + ": " + e.what()};
    }
    auto h = load_graph(host_path, inputs);
    auto budget = compile_budget(budgets);

    std::vector<std::pair<std::string, Graph>> checks;
    std::string mode;
    if (!instance_path.empty()) {
        mode = "instance";
        checks.push_back({instance_path, load_graph(instance_path, inputs)});
    } else if (battery_mode == "small") {
        mode = "battery-small";
        for (int n = 0; n <= 4; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
                checks.push_back({"n=" + std::to_string(n) + " mask=" + std::to_string(mask),
                                  mask_graph(n, mask)});
        }
    } else {
        mode = "battery-random";
        Splitmix rng(budgets.seed);
        for (int round = 0; round < 20; ++round) {
            auto g = random_instance(rng, rng.uniform(5, 7), 35);
            checks.push_back({"round=" + std::to_string(round) + " n=" + std::to_string(g.n()),
                              std::move(g)});
        }
    }

    int accepted = 0, rejected = 0, inconclusive = 0;
    auto failures = ordered_json::array();
    for (const auto& [desc, g] : checks) {
        auto v = verify_compiled_parity(g, gadget, h, budget);
        if (v.accepted) {
            ++accepted;
            continue;
        }
        (v.inconclusive ? inconclusive : rejected) += 1;
        ordered_json row;
        row["instance"] = desc;
        row["inconclusive"] = v.inconclusive;
        row["reason"] = v.reason;
        failures.push_back(std::move(row));
    }
    ordered_json p;
    p["schema"] = "parhom-verify-1";
    p["mode"] = mode;
    p["total"] = static_cast<int>(checks.size());
    p["accepted"] = accepted;
    p["rejected"] = rejected;
    p["inconclusive"] = inconclusive;
    p["failures"] = std::move(failures);
    return {rejected > 0 ? 1 : inconclusive > 0 ? 3 : 0, std::move(p)};
}

inline Result run_classify(const std::string& host_path, const Budgets& budgets, Inputs& inputs) {
    auto h = load_graph(host_path, inputs);
    auto v = classify(h, gadget_budget(budgets));
    ordered_json p;
    p["schema"] = "parhom-classify-1";
    p["kind"] = kind_name(v.kind);
    p["detail"] = v.detail;
    ordered_json red;
    red["steps"] = static_cast<int>(v.chain.steps.size());
    red["result"] = graph_to_json(v.chain.result);
    p["reduction"] = std::move(red);
    p["hard_component"] =
        v.hard_component ? graph_to_json(*v.hard_component) : ordered_json(nullptr);
    p["gadget"] = v.gadget ? gadget_to_json(*v.gadget) : ordered_json(nullptr);
    return {v.kind == DichotomyClass::inconclusive ? 3 : 0, std::move(p)};
}

inline Result run_count(const std::string& g_path, const std::string& h_path, bool mod2,
                        const std::string& pins_path, Inputs& inputs) {
    auto g = load_graph(g_path, inputs);
    auto h = load_graph(h_path, inputs);
    ordered_json p;
    p["schema"] = "parhom-count-1";
    HomCount count;
    if (!pins_path.empty()) {
        auto text = read_file(pins_path);
        inputs.add(pins_path, text);
        std::map<std::string, std::string> pins;
        try {
            pins = parse_pinning(text);
        } catch (const error& e) {
            throw input_error{where(pins_path, e)};
        }
        count = count_pinned_homs(PartiallyLabelledGraph::make(std::move(g), std::move(pins)), h);
    } else {
        count = count_homs(g, h);
    }
    if (!mod2) p["exact"] = count.exact.str();
    p["parity"] = count.parity ? 1 : 0;
    return {0, std::move(p)};
}

inline Result run_battery(const std::string& dir, bool fail_fast, const Budgets& budgets,
                          Inputs& inputs) {
    namespace fs = std::filesystem;
    std::error_code ec;
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.is_regular_file()) names.push_back(entry.path().filename().string());
    if (ec) throw input_error{"cannot read directory '" + dir + "'"};
    std::sort(names.begin(), names.end());

    auto ends_with = [](const std::string& s, const std::string& suffix) {
        return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    };

    int passed = 0, failed = 0, errors = 0;
    auto entries = ordered_json::array();
    for (const auto& name : names) {
        const std::string path = (fs::path(dir) / name).string();
        ordered_json row;
        row["file"] = name;
        std::string status = "pass", detail;
        try {
            if (ends_with(name, ".cert.json")) {
                row["kind"] = "certificate";
                auto gadget = gadget_from_json(load_json(path, inputs));
                const std::string host_name = name.substr(0, name.size() - 10) + ".graph";
                const std::string host_path = (fs::path(dir) / host_name).string();
                if (!fs::exists(host_path)) {
                    status = "error";
                    detail = "no host named " + host_name;
                } else {
                    auto verdict = verify_hardness_gadget(gadget, load_graph(host_path, inputs),
                                                          gadget_budget(budgets));
                    status = verdict.accepted ? "pass" : "fail";
                    detail = verdict.accepted ? "certificate verified" : verdict.reason;
                }
            } else if (ends_with(name, ".graph")) {
                row["kind"] = "host";
                auto v = classify(load_graph(path, inputs), gadget_budget(budgets));
                status = v.kind == DichotomyClass::inconclusive ? "fail" : "pass";
                detail = std::string(kind_name(v.kind)) + ": " + v.detail;
            } else if (ends_with(name, ".pins")) {
                row["kind"] = "pinning";
                auto text = read_file(path);
                inputs.add(path, text);
                try {
                    parse_pinning(text);
                } catch (const error& e) {
                    throw input_error{where(path, e)};
                }
                detail = "parsed";
            } else {
                continue;
            }
        } catch (const input_error& e) {
            status = "error";
            detail = e.message;
        } catch (const nlohmann::json::exception& e) {
            status = "error";
            detail = path + ": " + e.what();
        } catch (const error& e) {
            status = "error";
            detail = where(path, e);
        }
        row["status"] = status;
        row["detail"] = detail;
        entries.push_back(std::move(row));
        (status == "pass" ? passed : status == "fail" ? failed : errors) += 1;
        if (fail_fast && status != "pass") break;
    }

    ordered_json p;
    p["schema"] = "parhom-battery-1";
    p["directory"] = dir;
    p["entries"] = std::move(entries);
    p["total"] = passed + failed + errors;
    p["passed"] = passed;
    p["failed"] = failed;
    p["errors"] = errors;
    const bool ok = failed == 0 && errors == 0;
    p["aggregate"] = ok ? "pass" : "fail";
    return {ok ? 0 : 1, std::move(p)};
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"parity homomorphism toolkit: dichotomy analysis for square-free hosts"};
    app.require_subcommand(1);

    bool json_wrap = false;
    int budget_vertices = 0;
    long long budget_candidates = 0;
    std::uint64_t seed = 0;
    app.add_flag("--json", json_wrap, "wrap the payload in a report envelope");
    auto* opt_vertices =
        app.add_option("--budget-vertices", budget_vertices,
                       "vertex budget: candidate size (distinguish), even-gadget size "
                       "(gadget, classify, battery), instance size (verify)");
    auto* opt_candidates = app.add_option("--budget-candidates", budget_candidates,
                                          "candidate-family budget for distinguisher search");
    app.add_option("--seed", seed, "seed for random batteries");

    std::string a_host, r_host, d_first, d_second, c_host;
    std::vector<std::string> g_paths;
    bool g_verify = false;
    std::string k_instance, k_cert;
    std::string v_cert, v_host, v_instance, v_battery;
    std::string n_g, n_h, n_pins;
    bool n_mod2 = false, n_exact = false;
    std::string b_dir;
    bool b_fail_fast = false;

    auto* analyze = app.add_subcommand("analyze", "degree profile and odd-girth cycle census");
    analyze->add_option("host", a_host, "host graph file")->required();
    auto* reduce = app.add_subcommand("reduce", "involution-free reduction chain");
    reduce->add_option("host", r_host, "host graph file")->required();
    auto* distinguish =
        app.add_subcommand("distinguish", "search for a graph with differing hom parities");
    distinguish->add_option("first", d_first, "first host graph file")->required();
    distinguish->add_option("second", d_second, "second host graph file")->required();
    auto* gadget = app.add_subcommand("gadget", "find or verify a hardness gadget certificate");
    gadget->add_option("paths", g_paths, "host file, or certificate then host with --verify")
        ->expected(1, 2);
    gadget->add_flag("--verify", g_verify, "verify a certificate instead of searching");
    auto* compile = app.add_subcommand("compile",
                                       "compile an independent-set instance against a certificate");
    compile->add_option("instance", k_instance, "instance graph file")->required();
    compile->add_option("certificate", k_cert, "gadget certificate file")->required();
    auto* verify = app.add_subcommand("verify", "check compiled parity against brute force");
    verify->add_option("--gadget", v_cert, "gadget certificate file")->required();
    verify->add_option("--host", v_host, "host graph file")->required();
    verify->add_option("--instance", v_instance, "single instance graph file");
    verify->add_option("--battery", v_battery, "instance battery: small or random")
        ->check(CLI::IsMember({"small", "random"}));
    auto* classify_cmd = app.add_subcommand("classify", "dichotomy classification of a host");
    classify_cmd->add_option("host", c_host, "host graph file")->required();
    auto* count = app.add_subcommand("count", "homomorphism count from one graph to another");
    count->add_option("from", n_g, "source graph file")->required();
    count->add_option("to", n_h, "host graph file")->required();
    count->add_flag("--mod2", n_mod2, "report the parity only");
    count->add_flag("--exact", n_exact, "report the exact count (default)");
    count->add_option("--pins", n_pins, "pinning file for the source graph");
    auto* battery = app.add_subcommand("battery", "run every fixture in a directory");
    battery->add_option("directory", b_dir, "fixture directory")->required();
    battery->add_flag("--fail-fast", b_fail_fast, "stop at the first failing entry");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string command;
    Inputs inputs;
    Result result;
    try {
        Budgets budgets;
        if (opt_vertices->count() > 0)
            budgets.vertices = budget_vertices;
        else if (auto v = env_int("PARHOM_BUDGET_VERTICES"))
            budgets.vertices = static_cast<int>(*v);
        if (opt_candidates->count() > 0)
            budgets.candidates = budget_candidates;
        else if (auto v = env_int("PARHOM_BUDGET_CANDIDATES"))
            budgets.candidates = *v;
        budgets.seed = seed;

        if (analyze->parsed()) {
            command = "analyze";
            result = run_analyze(a_host, inputs);
        } else if (reduce->parsed()) {
            command = "reduce";
            result = run_reduce(r_host, inputs);
        } else if (distinguish->parsed()) {
            command = "distinguish";
            result = run_distinguish(d_first, d_second, budgets, inputs);
        } else if (gadget->parsed()) {
            command = "gadget";
            if (g_verify) {
                if (g_paths.size() != 2)
                    throw input_error{"gadget --verify needs <certificate> <host>"};
                result = run_gadget_verify(g_paths[0], g_paths[1], budgets, inputs);
            } else {
                if (g_paths.size() != 1) throw input_error{"gadget needs a single host file"};
                result = run_gadget_search(g_paths[0], budgets, inputs);
            }
        } else if (compile->parsed()) {
            command = "compile";
            result = run_compile(k_instance, k_cert, inputs);
        } else if (verify->parsed()) {
            command = "verify";
            if (v_instance.empty() == v_battery.empty())
                throw input_error{"verify needs exactly one of --instance or --battery"};
            result = run_verify(v_cert, v_host, v_instance, v_battery, budgets, inputs);
        } else if (classify_cmd->parsed()) {
            command = "classify";
            result = run_classify(c_host, budgets, inputs);
        } else if (count->parsed()) {
            command = "count";
            if (n_mod2 && n_exact) throw input_error{"--mod2 and --exact are exclusive"};
            result = run_count(n_g, n_h, n_mod2, n_pins, inputs);
        } else {
            command = "battery";
            result = run_battery(b_dir, b_fail_fast, budgets, inputs);
        }

        if (json_wrap) {
            const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            ordered_json report;
            report["schema"] = "parhom-report-1";
            report["command"] = command;
            auto& files = report["inputs"] = ordered_json::array();
            for (const auto& [path, digest] : inputs.files) {
                ordered_json f;
                f["path"] = path;
                f["digest"] = digest;
                files.push_back(std::move(f));
            }
            ordered_json b;
            b["vertices"] =
                budgets.vertices ? ordered_json(*budgets.vertices) : ordered_json(nullptr);
            b["candidates"] =
                budgets.candidates ? ordered_json(*budgets.candidates) : ordered_json(nullptr);
            b["seed"] = budgets.seed;
            report["budgets"] = std::move(b);
            report["payload"] = std::move(result.payload);
            report["wall_ms"] = wall;
            out << report.dump(2) << "\n";
        } else {
            out << result.payload.dump(2) << "\n";
        }
        return result.code;
    } catch (const input_error& e) {
        err << e.message << "\n";
        return 2;
    } catch (const error& e) {
        err << e.what() << "\n";
        return e.code == errc::cap_exceeded ? 3 : 2;
    } catch (const nlohmann::json::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace parhom
