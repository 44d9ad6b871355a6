#include "ccrgraph/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;

    json report() const { return json::parse(out); }
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = ccrgraph::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify the four-vertex null graph")
{
    const auto r = invoke({"classify", "--graph-named", "null:4"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["schema_version"] == "1");
    CHECK(j["verb"] == "classify");
    CHECK(j["results"]["k"] == 0);
    CHECK(j["results"]["l"] == 4);
    CHECK(j["results"]["label"] == "M_1 ⊗ C^16");
    CHECK(j["results"]["simple"] == false);
    CHECK_FALSE(j.contains("pass"));
}

TEST_CASE("equivalence and enumeration")
{
    const auto eq = invoke({"equiv", "--graph-named", "complete:3", "--other-text", "n=3;0 1;1 2"});
    REQUIRE(eq.code == 0);
    CHECK(eq.report()["results"]["equivalent"] == true);

    const auto neq = invoke({"equiv", "--graph-named", "null:4", "--other-named", "complete:4"});
    REQUIRE(neq.code == 0);
    CHECK(neq.report()["results"]["equivalent"] == false);

    const auto en = invoke({"enumerate", "--n", "4"});
    REQUIRE(en.code == 0);
    const auto classes = en.report()["results"]["classes"];
    REQUIRE(classes.size() == 3);
    CHECK(classes[0]["types"] == 1);
    CHECK(classes[1]["types"] == 6);
    CHECK(classes[2]["types"] == 4);
}

TEST_CASE("reports are byte-identical across runs")
{
    const std::vector<std::string> args{"canonicalize", "--graph-named", "random:12,0.5", "--seed", "9"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.report()["pass"] == true);
    CHECK(invoke({"canonicalize", "--graph-named", "random:12,0.5", "--seed", "10"}).out != a.out);
}

TEST_CASE("graph input from standard input and DOT output")
{
    const std::string dot_path = "cli_test_output.dot";
    std::remove(dot_path.c_str());
    const auto r = invoke({"ginf", "--graph", "-", "--dot", dot_path}, "n=2\n0 1\n");
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["graph"]["edges"].size() == 3);
    std::ifstream dot(dot_path);
    std::string text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
    CHECK(text.find("graph") != std::string::npos);
    std::remove(dot_path.c_str());

    const auto iso = invoke({"iso", "--graph-named", "cycle:4", "--other-text", "n=4;0 2;2 1;1 3;3 0"});
    REQUIRE(iso.code == 0);
    CHECK(iso.report()["results"]["isomorphic"] == true);
}

TEST_CASE("family verbs")
{
    const auto check = invoke({"family-check", "--family-named", "fk:2"});
    REQUIRE(check.code == 0);
    CHECK(check.report()["results"]["independent"] == true);
    CHECK(check.report()["results"]["noncovered"] == true);

    const auto dual = invoke({"dual", "--family-text", "m=2;0,1"});
    REQUIRE(dual.code == 0);
    CHECK(dual.report()["results"]["dual"]["members"] == json::parse("[[0],[0]]"));
    CHECK(dual.report()["results"]["double_dual_is_identity"] == true);

    const auto fk = invoke({"fk", "--depth", "1"});
    REQUIRE(fk.code == 0);
    CHECK(fk.report()["results"]["family"]["members"].size() == 2);

    const auto bip = invoke({"bipartite", "--family-named", "singletons:3"});
    REQUIRE(bip.code == 0);
    CHECK(bip.report()["results"]["class"]["simple"] == true);

    const auto dens = invoke({"densify", "--family-named", "fk:2", "--budget", "6"});
    REQUIRE(dens.code == 0);
    CHECK(dens.report()["results"]["witnessed_after"] > dens.report()["results"]["witnessed_before"]);

    const auto ext = invoke({"extend", "--family-named", "nonempty:4", "--members", "2"});
    REQUIRE(ext.code == 0);
    CHECK(ext.report()["pass"] == true);
    CHECK(ext.report()["results"]["induced_class"]["l"] == 0);
}

TEST_CASE("representation verb")
{
    const auto r = invoke({"repr", "--graph-named", "complete:3", "--kind", "canonical"});
    REQUIRE(r.code == 0);
    const auto res = r.report()["results"];
    for (const char* key : {"kind", "dim", "tolerance", "max_deviation_per_check", "span_dim", "center_dim",
                            "commutant_dim", "min_pair_distance", "pass"})
        CHECK(res.contains(key));
    CHECK(res["dim"] == 4);
    CHECK(res["center_dim"] == 2);
    CHECK(res["commutant_dim"] == 2);

    const auto b = invoke({"repr", "--family-named", "power:2", "--kind", "bipartite"});
    REQUIRE(b.code == 0);
    CHECK(b.report()["results"]["commutant_dim"] == 1);

    // Beyond the Gram budget the span is reported as null, not as a failure.
    const auto big = invoke({"repr", "--graph-named", "complete:5", "--kind", "pairs"});
    REQUIRE(big.code == 0);
    CHECK(big.report()["results"]["span_dim"].is_null());
}

TEST_CASE("exit codes")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"classify", "--graph-named", "null:4", "--bogus"}).code == 2);
    CHECK(invoke({"classify"}).code == 2);
    CHECK(invoke({"classify", "--graph-text", "n=2;0 5"}).code == 2);
    CHECK(invoke({"classify", "--graph", "/nonexistent/file"}).code == 2);
    CHECK(invoke({"classify", "--graph-named", "null:2", "--graph-text", "n=1"}).code == 2);
    CHECK(invoke({"repr", "--graph-named", "complete:6", "--kind", "pairs"}).code == 3);
    CHECK(invoke({"enumerate", "--n", "9"}).code == 3);
    CHECK(invoke({"extend", "--family-text", "m=3;0", "--members", "0", "--elements", "1,2"}).code == 3);
    CHECK(invoke({"bench", "--suite", "nope", "--size", "3"}).code == 2);

    const auto failing = invoke({"repr", "--graph-named", "path:3", "--tolerance", "-1"});
    CHECK(failing.code == 1);
    CHECK(failing.report()["pass"] == false);

    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("bench suites complete")
{
    for (const char* suite : {"gf2-rank", "canonicalize", "repr-verify"}) {
        const auto r = invoke({"bench", "--suite", suite, "--size", "4"});
        REQUIRE(r.code == 0);
        CHECK(r.report()["results"]["seconds"] >= 0.0);
    }
}
