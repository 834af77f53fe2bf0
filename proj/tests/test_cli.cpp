#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "parhom/cli.hpp"
#include "parhom/compile.hpp"
#include "parhom/jsonio.hpp"
#include "support.hpp"

using namespace parhom;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;  // stdout and stderr merged
};

// Shell out to the built binary: env assignments go in front, stderr folds
// into the captured stream.
CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + PARHOM_CLI_PATH + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string text;
    char buf[4096];
    while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) text.append(buf, k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

std::string fx(const std::string& name) { return std::string(PARHOM_FIXTURE_DIR) + "/" + name; }

ordered_json parse_out(const CliResult& r) { return ordered_json::parse(r.out); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Fresh scratch directory per call site.
fs::path scratch(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("parhom_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("file digests follow fnv-1a", "[cli]") {
    CHECK(fnv1a64_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(fnv1a64_digest("abc") == "fnv1a64:e71fa2190541574b");
}

TEST_CASE("graphs survive the json round-trip", "[cli]") {
    for (const auto& g : {support::rigid9(), Graph::make({}, {}), Graph::make({"v"}, {})})
        CHECK(graph_from_json(graph_to_json(g)) == g);

    auto gadget = find_gadget_two_even(support::tree7());
    auto inst = compile_is_instance(Graph::make({"a", "b"}, {{"a", "b"}}), gadget);
    CHECK(graph_from_json(graph_to_json(inst.j.g)) == inst.j.g);
    auto plg = plg_from_json(plg_to_json(inst.j));
    CHECK(plg.g == inst.j.g);
    CHECK(plg.pins == inst.j.pins);
}

TEST_CASE("gadget certificates survive the json round-trip", "[cli]") {
    auto t7 = support::tree7();
    auto g = find_gadget_two_even(t7);
    auto doc = gadget_to_json(g);
    CHECK(doc.at("schema") == "parhom-gadget-1");
    CHECK(doc.dump(2) == gadget_to_json(g).dump(2));

    auto back = gadget_from_json(doc);
    CHECK(back.i == g.i);
    CHECK(back.omega_y == g.omega_y);
    CHECK(back.omega_z == g.omega_z);
    CHECK(back.sigma.parity == g.sigma.parity);
    CHECK(back.sigma.exact == g.sigma.exact);
    CHECK(verify_hardness_gadget(back, t7).accepted);

    // a report envelope holding the certificate is accepted too
    ordered_json envelope;
    envelope["schema"] = "parhom-report-1";
    envelope["payload"] = doc;
    CHECK(verify_hardness_gadget(gadget_from_json(envelope), t7).accepted);
}

TEST_CASE("fixture files match the in-tree builders", "[cli]") {
    CHECK(parse_graph(slurp(fx("rigid9.graph"))) == support::rigid9());
    CHECK(parse_graph(slurp(fx("collapsing9.graph"))) == support::collapsing9());
    CHECK(parse_graph(slurp(fx("rotor12.graph"))) == support::rotor12());
    CHECK(parse_graph(slurp(fx("petersen.graph"))) == support::petersen());
    CHECK(parse_graph(slurp(fx("hk2.graph"))) == support::hk(2));
    CHECK(parse_graph(slurp(fx("tree7.graph"))) == support::tree7());
    CHECK(parse_graph(slurp(fx("c5.graph"))) == support::cycle_graph({"a", "b", "c", "d", "e"}));
    CHECK(parse_graph(slurp(fx("empty.graph"))).n() == 0);
}

TEST_CASE("count reports exact and mod-2 values", "[cli]") {
    auto mod2 = run_cli("count --mod2 " + fx("edge.graph") + " " + fx("k3.graph"));
    CHECK(mod2.code == 0);
    auto p = parse_out(mod2);
    CHECK(p.at("parity") == 0);
    CHECK_FALSE(p.contains("exact"));

    auto exact = run_cli("count " + fx("edge.graph") + " " + fx("k3.graph"));
    CHECK(exact.code == 0);
    CHECK(parse_out(exact).at("exact") == "6");

    auto pinned = run_cli("count --pins " + fx("path3_to_tree7.pins") + " " + fx("path3.graph") +
                          " " + fx("tree7.graph"));
    CHECK(pinned.code == 0);
    CHECK(parse_out(pinned).at("exact") == "5");
    CHECK(parse_out(pinned).at("parity") == 1);

    CHECK(run_cli("count --mod2 --exact " + fx("edge.graph") + " " + fx("k3.graph")).code == 2);
}

TEST_CASE("analyze prints the degree profile and census", "[cli]") {
    auto r = run_cli("analyze " + fx("petersen.graph"));
    CHECK(r.code == 0);
    auto p = parse_out(r);
    CHECK(p.at("vertices") == 10);
    CHECK(p.at("square_free") == true);
    CHECK(p.at("positive_even").empty());
    CHECK(p.at("odd_girth") == 5);
    REQUIRE(p.at("odd_girth_census").size() == 15);
    for (const auto& row : p.at("odd_girth_census")) CHECK(row.at("count") == 4);

    auto sq = parse_out(run_cli("analyze " + fx("square4.graph")));
    CHECK(sq.at("square_free") == false);
    CHECK(sq.at("odd_girth").is_null());
    CHECK_FALSE(sq.contains("odd_girth_census"));
}

TEST_CASE("reduce prints the involution chain", "[cli]") {
    auto r = run_cli("reduce " + fx("collapsing9.graph"));
    CHECK(r.code == 0);
    auto p = parse_out(r);
    REQUIRE(p.at("steps").size() == 2);
    CHECK(p.at("steps")[0].at("vertices") == 9);
    CHECK(p.at("steps")[1].at("vertices") == 3);
    CHECK(p.at("result").at("vertices") == std::vector<std::string>{"i"});
}

TEST_CASE("distinguish separates hosts and recognises isomorphism", "[cli]") {
    auto found = run_cli("distinguish " + fx("single.graph") + " " + fx("empty.graph"));
    CHECK(found.code == 0);
    auto p = parse_out(found);
    CHECK(p.at("outcome") == "found");
    CHECK(p.at("witness").at("graph").at("vertices").size() == 1);
    CHECK(p.at("parities") == std::vector<int>{1, 0});

    auto iso = run_cli("distinguish " + fx("k3.graph") + " " + fx("k3b.graph"));
    CHECK(iso.code == 1);
    CHECK(parse_out(iso).at("outcome") == "isomorphic");

    auto hard = run_cli("distinguish " + fx("rigid9.graph") + " " + fx("collapsing9.graph"));
    CHECK(hard.code == 0);
    auto hp = parse_out(hard);
    auto witness = graph_from_json(hp.at("witness").at("graph"));
    CHECK(count_homs(witness, support::rigid9()).parity !=
          count_homs(witness, support::collapsing9()).parity);

    auto capped = run_cli("distinguish " + fx("rigid9.graph") + " " + fx("collapsing9.graph") +
                          " --budget-vertices 1");
    CHECK(capped.code == 3);
    CHECK(parse_out(capped).at("outcome") == "budget_exhausted");
}

TEST_CASE("gadget search emits a certificate the verifier accepts", "[cli]") {
    auto dir = scratch("gadget");
    auto r = run_cli("gadget " + fx("tree7.graph"));
    REQUIRE(r.code == 0);
    auto cert = parse_out(r);
    CHECK(cert.at("i") == "c");
    CHECK(cert.at("s") == "c");
    CHECK(cert.at("omega_y") == std::vector<std::string>{"b2", "c"});
    CHECK(cert.at("omega_z") == std::vector<std::string>{"c", "d2"});
    CHECK(cert.at("host").at("digest") == fnv1a64_digest(slurp(fx("tree7.graph"))));
    CHECK(verify_hardness_gadget(gadget_from_json(cert), support::tree7()).accepted);

    spit((dir / "tree7.cert.json").string(), r.out);
    auto v = run_cli("gadget --verify " + (dir / "tree7.cert.json").string() + " " +
                     fx("tree7.graph"));
    CHECK(v.code == 0);
    CHECK(parse_out(v).at("accepted") == true);
    CHECK(parse_out(v).at("host_digest_match") == true);

    // the enveloped report form is equally consumable
    auto wrapped = run_cli("gadget --json " + fx("tree7.graph"));
    REQUIRE(wrapped.code == 0);
    CHECK(verify_hardness_gadget(gadget_from_json(parse_out(wrapped)), support::tree7()).accepted);
}

TEST_CASE("gadget verify rejects a tampered certificate", "[cli]") {
    auto dir = scratch("tamper");
    auto cert = parse_out(run_cli("gadget " + fx("tree7.graph")));
    cert["omega_y"] = std::vector<std::string>{"b2", "d3"};
    spit((dir / "bad.cert.json").string(), cert.dump(2));
    auto v = run_cli("gadget --verify " + (dir / "bad.cert.json").string() + " " +
                     fx("tree7.graph"));
    CHECK(v.code == 1);
    auto p = parse_out(v);
    CHECK(p.at("accepted") == false);
    CHECK(p.at("reason") == "omega_y does not match recomputation");

    auto square = run_cli("gadget " + fx("rotor12.graph"));
    CHECK(square.code == 2);
    CHECK(square.out.find("host has a square") != std::string::npos);
    auto involution = run_cli("gadget " + fx("c5.graph"));
    CHECK(involution.code == 2);
    CHECK(involution.out.find("host has an involution") != std::string::npos);
}

TEST_CASE("compile emits the assembled instance", "[cli]") {
    auto dir = scratch("compile");
    spit((dir / "cert.json").string(), run_cli("gadget " + fx("tree7.graph")).out);
    auto r = run_cli("compile " + fx("edge.graph") + " " + (dir / "cert.json").string());
    CHECK(r.code == 0);
    auto p = parse_out(r);
    CHECK(p.at("graph").at("vertices").size() == 10);
    CHECK(p.at("graph").at("edges").size() == 9);
    CHECK(p.at("pins").size() == 5);
    CHECK(p.at("vertex_anchors") ==
          ordered_json{{"a", "y@a"}, {"b", "y@b"}});
    REQUIRE(p.at("edge_anchors").size() == 1);
    CHECK(p.at("edge_anchors")[0].at("anchor") == "z@a~b");

    // the emitted graph is exactly the library's compilation
    auto gadget = gadget_from_json(parse_out(run_cli("gadget " + fx("tree7.graph"))));
    auto inst = compile_is_instance(Graph::make({"a", "b"}, {{"a", "b"}}), gadget);
    CHECK(graph_from_json(p.at("graph")) == inst.j.g);
}

TEST_CASE("verify runs single instances and batteries", "[cli]") {
    auto dir = scratch("verify");
    spit((dir / "cert.json").string(), run_cli("gadget " + fx("tree7.graph")).out);
    const std::string base =
        "verify --gadget " + (dir / "cert.json").string() + " --host " + fx("tree7.graph");

    auto small = run_cli(base + " --battery small");
    CHECK(small.code == 0);
    auto sp = parse_out(small);
    CHECK(sp.at("total") == 76);
    CHECK(sp.at("accepted") == 76);
    CHECK(sp.at("failures").empty());

    auto capped = run_cli(base + " --instance " + fx("c9.graph"));
    CHECK(capped.code == 3);
    auto cp = parse_out(capped);
    CHECK(cp.at("inconclusive") == 1);
    CHECK(cp.at("failures")[0].at("reason") == "instance has 9 vertices, cap 8");

    CHECK(run_cli(base + " --instance " + fx("c9.graph") + " --budget-vertices 9").code == 0);
    CHECK(run_cli(base + " --instance " + fx("c9.graph"), "PARHOM_BUDGET_VERTICES=9").code == 0);
    // the flag outranks the environment
    CHECK(run_cli(base + " --instance " + fx("c9.graph") + " --budget-vertices 8",
                  "PARHOM_BUDGET_VERTICES=9")
              .code == 3);
    CHECK(run_cli(base + " --instance " + fx("c9.graph"), "PARHOM_BUDGET_VERTICES=abc").code == 2);

    auto random = run_cli(base + " --battery random --seed 7");
    CHECK(random.code == 0);
    CHECK(parse_out(random).at("total") == 20);
    CHECK(parse_out(random).at("accepted") == 20);

    CHECK(run_cli(base).code == 2);
    CHECK(run_cli(base + " --instance " + fx("c9.graph") + " --battery small").code == 2);
}

TEST_CASE("classify reports the dichotomy verdict", "[cli]") {
    auto hard = run_cli("classify " + fx("rigid9.graph"));
    CHECK(hard.code == 0);
    auto hp = parse_out(hard);
    CHECK(hp.at("kind") == "parity_hard");
    CHECK(hp.at("detail") == "hardness gadget certified on a component with 9 vertices");
    CHECK(hp.at("reduction").at("steps") == 0);
    REQUIRE_FALSE(hp.at("gadget").is_null());
    CHECK(verify_hardness_gadget(gadget_from_json(hp.at("gadget")),
                                 graph_from_json(hp.at("hard_component")))
              .accepted);

    auto poly = parse_out(run_cli("classify " + fx("collapsing9.graph")));
    CHECK(poly.at("kind") == "polynomial");
    CHECK(poly.at("reduction").at("steps") == 2);
    CHECK(poly.at("gadget").is_null());

    auto conj = run_cli("classify " + fx("rotor12.graph"));
    CHECK(conj.code == 0);
    CHECK(parse_out(conj).at("kind") == "conjectured_hard");
    CHECK(parse_out(conj).at("detail") == "conjectured hard, out of theorem scope");
}

TEST_CASE("malformed inputs exit two with line diagnostics", "[cli]") {
    auto bad = run_cli("classify " + fx("malformed.graph"));
    CHECK(bad.code == 2);
    CHECK(bad.out.find("malformed.graph:3") != std::string::npos);
    CHECK(bad.out.find("undeclared endpoint") != std::string::npos);

    auto missing = run_cli("count " + fx("edge.graph") + " /nosuch/place.graph");
    CHECK(missing.code == 2);
    CHECK(missing.out.find("cannot open") != std::string::npos);

    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("count " + fx("edge.graph")).code == 2);

    auto dir = scratch("malformed");
    const std::vector<std::pair<std::string, std::string>> broken = {
        {"no_header.graph", "a b\n"},
        {"dup_vertex.graph", "vertices: a a\n"},
        {"loop.graph", "vertices: a b\na a\n"},
        {"dup_edge.graph", "vertices: a b\na b\nb a\n"},
        {"stray.graph", "vertices: a b\na c\n"},
    };
    for (const auto& [name, text] : broken) {
        spit((dir / name).string(), text);
        auto r = run_cli("classify " + (dir / name).string());
        INFO(name << ": " << r.out);
        CHECK(r.code == 2);
        CHECK(r.out.find(name + ":") != std::string::npos);
    }
    spit((dir / "bad.pins").string(), "a = c\n");
    CHECK(run_cli("count --pins " + (dir / "bad.pins").string() + " " + fx("path3.graph") + " " +
                  fx("tree7.graph"))
              .code == 2);
}

TEST_CASE("battery aggregates a fixture directory", "[cli]") {
    auto dir = scratch("battery");
    auto cert_text = run_cli("gadget " + fx("tree7.graph")).out;
    spit((dir / "tree7.graph").string(), slurp(fx("tree7.graph")));
    spit((dir / "tree7.cert.json").string(), cert_text);
    spit((dir / "rigid9.graph").string(), slurp(fx("rigid9.graph")));
    spit((dir / "anchor.pins").string(), "a -> c\n");

    auto ok = run_cli("battery " + dir.string());
    CHECK(ok.code == 0);
    auto op = parse_out(ok);
    CHECK(op.at("total") == 4);
    CHECK(op.at("aggregate") == "pass");
    CHECK(op.at("entries")[0].at("file") == "anchor.pins");
    CHECK(op.at("entries")[3].at("file") == "tree7.graph");

    auto cert = ordered_json::parse(cert_text);
    cert["omega_y"] = std::vector<std::string>{"b2", "d3"};
    spit((dir / "tree7.cert.json").string(), cert.dump(2));
    auto fail = run_cli("battery " + dir.string());
    CHECK(fail.code == 1);
    auto fp = parse_out(fail);
    CHECK(fp.at("aggregate") == "fail");
    CHECK(fp.at("failed") == 1);
    for (const auto& e : fp.at("entries"))
        if (e.at("file") == "tree7.cert.json") {
            CHECK(e.at("status") == "fail");
            CHECK(e.at("detail") == "omega_y does not match recomputation");
        }

    // a broken entry errors and the battery continues past it
    spit((dir / "broken.graph").string(), "vertices: a\na b\n");
    auto mixed = parse_out(run_cli("battery " + dir.string()));
    CHECK(mixed.at("total") == 5);
    CHECK(mixed.at("errors") == 1);
    CHECK(mixed.at("failed") == 1);

    auto fast = parse_out(run_cli("battery " + dir.string() + " --fail-fast"));
    CHECK(fast.at("total") == 2);  // anchor.pins passes, broken.graph stops the run
    CHECK(fast.at("entries")[1].at("file") == "broken.graph");

    // a certificate without its host errors
    auto orphan_dir = scratch("orphan");
    spit((orphan_dir / "tree7.cert.json").string(), cert_text);
    auto orphan = parse_out(run_cli("battery " + orphan_dir.string()));
    CHECK(orphan.at("errors") == 1);
    CHECK(orphan.at("entries")[0].at("detail") == "no host named tree7.graph");

    auto empty_dir = scratch("emptybat");
    auto empty = run_cli("battery " + empty_dir.string());
    CHECK(empty.code == 0);
    CHECK(parse_out(empty).at("total") == 0);
    CHECK(parse_out(empty).at("aggregate") == "pass");
}

TEST_CASE("reports are reproducible", "[cli]") {
    auto a = run_cli("classify " + fx("rigid9.graph"));
    auto b = run_cli("classify " + fx("rigid9.graph"));
    CHECK(a.out == b.out);

    auto e1 = parse_out(run_cli("classify --json " + fx("rigid9.graph")));
    auto e2 = parse_out(run_cli("classify --json " + fx("rigid9.graph")));
    CHECK(e1.at("schema") == "parhom-report-1");
    CHECK(e1.at("command") == "classify");
    CHECK(e1.at("inputs")[0].at("digest") == fnv1a64_digest(slurp(fx("rigid9.graph"))));
    CHECK(e1.at("budgets").at("vertices").is_null());
    e1.erase("wall_ms");
    e2.erase("wall_ms");
    CHECK(e1 == e2);
}
