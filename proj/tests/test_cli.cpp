#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ddf/cli.hpp"

using namespace ddf;

namespace {

struct RunResult {
    int code;
    json output;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"ddf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    RunResult res{code, json(), err.str()};
    if (!out.str().empty()) res.output = json::parse(out.str());
    return res;
}

std::string write_temp(const std::string& name, const json& content) {
    std::string path = std::string("cli_") + name + ".json";
    std::ofstream f(path);
    f << content.dump(2);
    return path;
}

std::string write_temp_raw(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name + ".json";
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("check kseq accepts the worked 2-connected prescription") {
    auto path = write_temp("kseq_ok", json{{"n", 4}, {"m_o", {2, 2, 2, 3}}, {"m_i", {2, 2, 2, 3}}, {"k", 2}});
    auto res = run_cli({"check", "--theorem", "kseq", path});
    CHECK(res.code == 0);
    CHECK(res.output.at("schema") == "ddf-1");
    CHECK(res.output.at("feasible") == true);
    CHECK(res.output.at("command").at("theorem") == "kseq");
    std::remove(path.c_str());
}

TEST_CASE("check kseq rejects the one-node loop prescription with a prefix certificate") {
    auto path = write_temp("kseq_bad", json{{"n", 1}, {"m_o", {1}}, {"m_i", {1}}, {"k", 1}});
    auto res = run_cli({"check", "--theorem", "kseq", path});
    CHECK(res.code == 1);
    REQUIRE(res.output.contains("certificate"));
    CHECK(res.output.at("certificate").at("inequality") == "simple_realization");
    CHECK(res.output.at("certificate").at("lhs") == 2);
    std::remove(path.c_str());
}

TEST_CASE("certificates re-validate from primitives") {
    auto path = write_temp("strong_bad", json{{"n", 3}, {"m_o", {2, 0, 1}}, {"m_i", {1, 1, 1}}});
    auto res = run_cli({"check", "--theorem", "strong", path});
    REQUIRE(res.code == 1);
    auto report_path = write_temp("strong_bad_report", res.output);
    auto recheck = run_cli({"check", "--theorem", "strong", "--recheck-certificate", report_path, path});
    CHECK(recheck.code == 0);
    CHECK(recheck.output.at("certificate_valid") == true);

    // tamper with the certificate: the recheck must fail
    json tampered = res.output;
    tampered["certificate"]["lhs"] = tampered["certificate"]["lhs"].get<int>() + 1;
    auto tampered_path = write_temp("strong_bad_tampered", tampered);
    auto recheck2 = run_cli({"check", "--theorem", "strong", "--recheck-certificate", tampered_path, path});
    CHECK(recheck2.code == 1);
    std::remove(path.c_str());
    std::remove(report_path.c_str());
    std::remove(tampered_path.c_str());
}

TEST_CASE("realize modes produce digraphs of the requested class") {
    auto path = write_temp("realize", json{{"n", 3}, {"m_o", {2, 1, 1}}, {"m_i", {1, 2, 1}}});
    auto any = run_cli({"realize", "--any", path});
    CHECK(any.code == 0);
    CHECK(any.output.at("digraph").at("arcs").size() == 4);
    auto simple = run_cli({"realize", "--simple", path});
    CHECK(simple.code == 0);
    auto hosted = run_cli({"realize", "--host", path, path});
    CHECK((hosted.code == 0 || hosted.code == 1));
    std::remove(path.c_str());

    auto loopy = write_temp("realize_loopy", json{{"n", 2}, {"m_o", {2, 0}}, {"m_i", {2, 0}}});
    auto loopless = run_cli({"realize", "--loopless", loopy});
    CHECK(loopless.code == 1);
    CHECK(loopless.output.at("certificate").at("inequality") == "loopless_point");
    std::remove(loopy.c_str());
}

TEST_CASE("witness output re-validates under verify") {
    auto path = write_temp("witness", json{{"n", 4}, {"m_o", {2, 2, 2, 3}}, {"m_i", {2, 2, 2, 3}}, {"k", 2}});
    auto wit = run_cli({"witness", path, "--mode", "node", "--simplicity", "augmented"});
    REQUIRE(wit.code == 0);
    CHECK(wit.output.at("audit").at("fits_spec") == true);
    json verify_instance{{"n", 4},
                         {"arcs", wit.output.at("digraph").at("arcs")},
                         {"m_o", {2, 2, 2, 3}},
                         {"m_i", {2, 2, 2, 3}}};
    auto vpath = write_temp("witness_verify", verify_instance);
    auto ver = run_cli({"verify", vpath, "--k", "2", "--mode", "node"});
    CHECK(ver.code == 0);
    CHECK(ver.output.at("report").at("k_node").get<int>() >= 2);
    CHECK(ver.output.at("report").at("fits_spec") == true);
    std::remove(path.c_str());
    std::remove(vpath.c_str());
}

TEST_CASE("verify reports the paper example at exactly two") {
    json instance{{"n", 4},
                  {"arcs", {{0, 3}, {3, 0}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {0, 1}, {1, 2}, {2, 0}}},
                  {"m_o", {2, 2, 2, 3}},
                  {"m_i", {2, 2, 2, 3}}};
    auto path = write_temp("verify_paper", instance);
    auto res = run_cli({"verify", path, "--k", "2", "--mode", "node"});
    CHECK(res.code == 0);
    CHECK(res.output.at("report").at("simple") == true);
    CHECK(res.output.at("report").at("fits_spec") == true);
    CHECK(res.output.at("report").at("k_node") == 2);
    auto too_much = run_cli({"verify", path, "--k", "3", "--mode", "node"});
    CHECK(too_much.code == 1);
    std::remove(path.c_str());
}

TEST_CASE("bigraph verbs round-trip and check elementarity") {
    json digraph_inst{{"n", 3}, {"arcs", {{0, 1}, {1, 2}, {2, 0}}}};
    auto dpath = write_temp("bigraph_from", digraph_inst);
    auto from = run_cli({"bigraph", dpath, "--from-digraph"});
    REQUIRE(from.code == 0);
    json big = from.output.at("bigraph");
    big["k"] = 1;
    auto bpath = write_temp("bigraph_to", big);
    auto to = run_cli({"bigraph", bpath, "--to-digraph"});
    REQUIRE(to.code == 0);
    CHECK(to.output.at("digraph").at("arcs") == digraph_inst.at("arcs"));
    auto kel = run_cli({"bigraph", bpath, "--check-k-elementary"});
    CHECK(kel.code == 0);  // a 3-cycle is 1-connected, so the bigraph is 1-elementary

    json sides{{"n", 4}, {"m_S", {2, 2, 2, 2}}, {"m_T", {2, 2, 2, 2}}, {"k", 1}};
    auto spath = write_temp("bigraph_degrees", sides);
    auto realize = run_cli({"bigraph", spath, "--realize-degrees"});
    CHECK(realize.code == 0);
    CHECK(realize.output.at("bigraph").at("edges").size() == 8);
    std::remove(dpath.c_str());
    std::remove(bpath.c_str());
    std::remove(spath.c_str());
}

TEST_CASE("oracle grids run clean") {
    auto res = run_cli({"oracle", "--grid", "ore-n5", "--samples", "25", "--seed", "99"});
    CHECK(res.code == 0);
    CHECK(res.output.at("disagreements").empty());
    auto listed = run_cli({"oracle", "--list"});
    CHECK(listed.code == 0);
    CHECK(!listed.output.at("presets").empty());
}

TEST_CASE("every checker's certificate re-validates from primitives") {
    std::mt19937 rng(101);
    auto file_for = [](int n, const Digraph& d0, const DegreeSpec& spec, int k) {
        InstanceFile f;
        f.n = n;
        f.arcs = d0.arcs();
        f.m_o = spec.out_all();
        f.m_i = spec.in_all();
        f.k = k;
        return f;
    };
    int validated = 0;
    for (int trial = 0; trial < 250; ++trial) {
        Digraph d0 = trial % 2 ? random_simple_digraph(rng, 4, 0.3) : Digraph::empty(4);
        DegreeSpec spec = random_spec(rng, 4, 3);
        int k = 1 + trial % 2;
        InstanceFile file = file_for(4, d0, spec, k);
        const char* theorems[] = {"strong", "edge-multi", "node-simple", "node-multi", "strong-augment", "kseq"};
        std::string theorem = theorems[trial % 6];
        FeasibilityVerdict verdict;
        try {
            verdict = cli::detail::run_checker(theorem, file, trial % 3 == 0, "", 6);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (verdict.feasible) continue;
        ++validated;
        REQUIRE(verdict.certificate);
        CHECK(cli::detail::recheck(theorem, file, *verdict.certificate));
        Certificate tampered = *verdict.certificate;
        tampered.lhs += 1;
        CHECK(!cli::detail::recheck(theorem, file, tampered));
    }
    CHECK(validated > 100);

    // covering certificates carry the witnessing member of the family
    InstanceFile cover_file;
    cover_file.n = 3;
    cover_file.m_o = {0, 1, 1};
    cover_file.m_i = {1, 1, 0};
    cover_file.family = {NodeMask{0b100}};  // no prescription ever sends an arc into node 2
    auto cover_verdict = cli::detail::run_checker("cover", cover_file, false, "", 6);
    REQUIRE(!cover_verdict.feasible);
    CHECK(cover_verdict.certificate->inequality == "cover_pair");
    CHECK(cli::detail::recheck("cover", cover_file, *cover_verdict.certificate));

    // bipartite certificates re-evaluate through the side prescriptions
    InstanceFile kelem_file;
    kelem_file.n = 4;
    kelem_file.m_s = {1, 1, 1, 1};
    kelem_file.m_t = {1, 1, 1, 1};
    kelem_file.k = 1;
    auto kelem_verdict = cli::detail::run_checker("kelem", kelem_file, false, "", 6);
    REQUIRE(!kelem_verdict.feasible);
    CHECK(cli::detail::recheck("kelem", kelem_file, *kelem_verdict.certificate));
}

TEST_CASE("augment combines the verdict with a witness and audit") {
    auto path = write_temp("augment", json{{"n", 4},
                                           {"arcs", {{0, 1}, {1, 2}}},
                                           {"m_o", {1, 1, 1, 1}},
                                           {"m_i", {1, 1, 1, 1}},
                                           {"k", 1}});
    auto res = run_cli({"augment", path, "--mode", "edge", "--simplicity", "any"});
    CHECK(res.code == 0);
    CHECK(res.output.at("feasible") == true);
    CHECK(res.output.at("audit").at("k_edge").get<int>() >= 1);
    std::remove(path.c_str());
}

TEST_CASE("cap overrides warn on standard error") {
    auto path = write_temp("cap", json{{"n", 4}, {"m_o", {1, 1, 1, 1}}, {"m_i", {1, 1, 1, 1}}, {"k", 1}});
    auto res = run_cli({"check", "--theorem", "node-simple", "--cap", "8", path});
    CHECK(res.err.find("warning") != std::string::npos);
    CHECK((res.code == 0 || res.code == 1));
    std::remove(path.c_str());
}

TEST_CASE("malformed input and unknown flags exit with code 2") {
    auto bad = write_temp_raw("malformed", "{\"n\": 3, \"m_o\": [1, 1");
    auto res = run_cli({"check", "--theorem", "strong", bad});
    CHECK(res.code == 2);
    CHECK(res.err.find("error") != std::string::npos);
    std::remove(bad.c_str());

    auto ok = write_temp("flags", json{{"n", 2}, {"m_o", {1, 1}}, {"m_i", {1, 1}}});
    CHECK(run_cli({"check", "--theorem", "strong", "--no-such-flag", ok}).code == 2);
    CHECK(run_cli({"check", "--theorem", "unknown-theorem", ok}).code == 2);
    CHECK(run_cli({"check", "--theorem", "strong", "missing-file.json"}).code == 2);
    std::remove(ok.c_str());
}
