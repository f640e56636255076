// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string binary()
{
    const char *b = std::getenv("HELLY_BIN");
    return b ? b : "helly";
}

Run run(const std::string &args)
{
    Run r;
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, k);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch()
{
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("helly_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string &name, const std::string &text)
{
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string gen_file(const std::string &args, const std::string &name)
{
    const Run r = run("gen " + args);
    REQUIRE(r.code == 0);
    return write(name, r.out);
}

} // namespace

TEST_CASE("gen and check")
{
    const std::string sun = gen_file("sun3", "sun3.json");
    const Run c = run("check " + sun);
    REQUIRE(c.code == 0);
    const json j = json::parse(c.out);
    CHECK(j["is_helly"] == false);
    CHECK(j["is_clique_helly"] == false);
    CHECK(j["clique_helly_witness"].size() == 3);

    const std::string king = gen_file("king 3 3", "king.json");
    const json k = json::parse(run("check " + king).out);
    CHECK(k["is_helly"] == true);
    CHECK(k["dismantling"]["status"] == "dismantled");

    const json g = json::parse(run("gen cycle 5").out);
    CHECK(g["n"] == 5);
    CHECK(g["edges"].size() == 5);
    CHECK(run("gen --list").out.find("sun3\n") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run("check --bogus x").code == 2);
    CHECK(run("").code != 0);
    CHECK(run("check /nonexistent/graph.json").code == 3);
    CHECK(run("check " + write("bad.json", "{\"n\": 2, \"edges\": [[0, 5]]}")).code == 3);
    CHECK(run("check " + write("junk.json", "not json")).code == 3);
    CHECK(run("gen nope").code == 3);
    CHECK(run("bicombing " + write("c5.json", run("gen cycle 5").out) + " --pair 0 2").code == 3);
}

TEST_CASE("repro")
{
    const Run r = run("repro zcube-defect");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
    CHECK(run("repro --list").out.find("hull-c4") != std::string::npos);
    CHECK(run("repro no-such-id").code == 3);
}

TEST_CASE("deterministic output")
{
    const std::string king = gen_file("king 4 4", "king4.json");
    const Run a = run("bicombing " + king + " --fellow-traveler --seed 3");
    const Run b = run("bicombing " + king + " --fellow-traveler --seed 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run("hull " + king).out == run("hull " + king).out);
}

TEST_CASE("hull")
{
    const std::string c6 = gen_file("cycle 6", "c6.json");
    const json h = json::parse(run("hull " + c6).out);
    CHECK(h["n"] == 14);
    CHECK(h["distance_profile"] == 1);
    CHECK(h["embed"].size() == 6);
    const Run dot = run("hull " + c6 + " --dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph G {", 0) == 0);
    const std::string metric = write("m.json", "{\"n\": 2, \"d\": [[0, 2], [2, 0]]}");
    const json m = json::parse(run("hull " + metric).out);
    CHECK(m["forms"] == json::parse("[[0,2],[1,1],[2,0]]"));
    CHECK(run("hull " + write("bad_metric.json", "{\"n\": 2, \"d\": [[0, 1], [2, 0]]}")).code == 3);
}

TEST_CASE("fix and hyper-check")
{
    const std::string king = gen_file("king 3 3", "king3.json");
    const std::string act = write("rot.json", "{\"perms\": [[6, 3, 0, 7, 4, 1, 8, 5, 2]]}");
    const Run r = run("fix " + king + " " + act + " --hull-orbit 0");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["group_order"] == 4);
    CHECK(j["fixed_clique"] == json::parse("[4]"));
    CHECK(j["fixed_face_subgraph_helly"] == true);
    CHECK(j["hull_orbit"]["orbit"] == json::parse("[0,2,6,8]"));
    CHECK(run("fix " + king + " " + write("bad_act.json", "{\"perms\": [[1, 0, 2, 3, 4, 5, 6, 7, 8]]}")).code == 3);

    const std::string tri = write("tri.json", "{\"n\": 3, \"edges\": [[0, 1], [1, 2], [0, 2]]}");
    const json t = json::parse(run("hyper-check " + tri).out);
    CHECK(t["is_helly"] == false);
    CHECK(t["is_conformal"] == false);
    CHECK(t["dual_is_conformal"] == false);
    const std::string full = write("full.json", "{\"n\": 3, \"edges\": [[0, 1], [1, 2], [0, 2], [0, 1, 2]]}");
    const json f = json::parse(run("hyper-check " + full).out);
    CHECK(f["is_helly"] == true);
    CHECK(f["is_conformal"] == true);
    CHECK(f["berge_duchet_witness"].is_null());
}

TEST_CASE("other subcommands")
{
    const std::string king = gen_file("king 3 3", "king3b.json");
    const json b = json::parse(run("bicombing " + king + " --pair 0 8").out);
    CHECK(b["gamma"].size() == 3);
    const json y = json::parse(run("hyp " + gen_file("cycle 4", "c4.json")).out);
    CHECK(y["two_delta"] == 2);
    const json c = json::parse(run("coarse " + gen_file("cycle 6", "c6b.json") + " --centers 0 2 4 --radii 1 1 1").out);
    CHECK(c["defect"] == 1);
    const json p = json::parse(
        run("build product " + gen_file("complete 2", "k2.json") + " " + scratch().string() + "/k2.json").out);
    CHECK(p["n"] == 4);
    CHECK(p["edges"].size() == 6);
    CHECK(run("build rips " + king + " --delta 0").code == 3);
    CHECK(run("build face " + king + " --dot").out.rfind("graph G {", 0) == 0);
    fs::remove_all(scratch());
}
