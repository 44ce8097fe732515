#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "k2rank/cli.hpp"

using namespace k2rank;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify json record")
{
    auto r = run_cli({"classify", "--p", "7", "--l", "113", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["l"] == 113);
    CHECK(j["p"] == 7);
    CHECK(j["sat_1_32"] == true);
    CHECK(j["quartic"] == "2_p");
    CHECK(j["l_mod_16"] == 1);
    CHECK(j["case"] == "II.5");
    CHECK(j["tuple"] == nlohmann::json::array({1, 1, 0, 0}));
    CHECK(j["witnesses"]["1_32"]["x"] == 9);
    CHECK(j["witnesses"]["1_32"]["y"] == 1);
    CHECK(j["witnesses"]["quartic"]["n"] == 5);
    CHECK(j["witnesses"]["quartic"]["m"] == 3);

    // field order is part of the format
    auto const first = r.out.find("\"l\"");
    auto const last = r.out.find("\"witnesses\"");
    CHECK(first < r.out.find("\"quartic\""));
    CHECK(r.out.find("\"tuple\"") < last);
}

TEST_CASE("json output round-trips byte for byte")
{
    for (auto args : std::vector<std::vector<std::string>>{
             {"classify", "--p", "7", "--l", "281", "--format", "json"},
             {"classify", "--p", "31", "--l", "1033", "--format", "json", "--fast-path", "on"},
             {"table1", "--p", "7,23", "--limit", "20000", "--format", "json"},
             {"densities", "--p", "7", "--limit", "2000", "--checkpoints", "5", "--format", "json"},
             {"classgroup", "--p", "31", "--format", "json"},
         }) {
        auto r = run_cli(args);
        REQUIRE(r.code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CHECK(j.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("classify with fast path on has no witnesses")
{
    auto r = run_cli({"classify", "--p", "7", "--l", "113", "--format", "json", "--fast-path", "on"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["witnesses"]["quartic"].is_null());
    CHECK(j["tuple"] == nlohmann::json::array({1, 1, 0, 0}));
}

TEST_CASE("classify csv")
{
    auto r = run_cli({"classify", "--p", "7", "--l", "281"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "l,p,sat_1_32,quartic,l_mod_16,case,v,mu,sigma,tau\n281,7,false,1_2p,9,II.3,2,1,0,1\n");
}

TEST_CASE("classify outside Omega exits 1")
{
    auto r = run_cli({"classify", "--p", "7", "--l", "17"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("l not in Omega(p)") != std::string::npos);
}

TEST_CASE("usage errors exit 1")
{
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"nosuch"}).code == 1);
    CHECK(run_cli({"omega", "--p", "7"}).code == 1);                                // missing limit
    CHECK(run_cli({"omega", "--p", "5", "--limit", "100"}).code == 1);              // p = 5 mod 8
    CHECK(run_cli({"omega", "--p", "7", "--limit", "1"}).code == 1);
    CHECK(run_cli({"omega", "--p", "7", "--limit", "100", "--format", "xml"}).code == 1);
    CHECK(run_cli({"table1", "--p", "7", "--limit", "100", "--jobs", "0"}).code == 1);
    CHECK(run_cli({"table1", "--p", "7,13", "--limit", "100"}).code == 1);
    CHECK(run_cli({"densities", "--p", "7", "--limit", "100", "--checkpoints", "0"}).code == 1);
    CHECK(run_cli({"splitgen", "--p", "17"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("omega listing")
{
    auto r = run_cli({"omega", "--p", "7", "--limit", "300"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "p,l\n7,113\n7,137\n7,193\n7,233\n7,281\n");
    auto j = run_cli({"omega", "--p", "7", "--limit", "300", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["count"] == 5);
    CHECK(doc["members"] == nlohmann::json::array({113, 137, 193, 233, 281}));
}

TEST_CASE("tables: csv schema, sorted by p, deterministic across jobs")
{
    auto r1 = run_cli({"table1", "--p", "31,7", "--limit", "30000", "--jobs", "1"});
    auto r2 = run_cli({"table1", "--p", "7,31", "--limit", "30000", "--jobs", "4"});
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    std::istringstream lines(r1.out);
    std::string header, a, b;
    std::getline(lines, header);
    std::getline(lines, a);
    std::getline(lines, b);
    CHECK(header == "p,limit,omega,omega1,omega2,omega3,omega4,lambda1,lambda2,lambda3,lambda4");
    CHECK(a.rfind("7,30000,", 0) == 0);
    CHECK(b.rfind("31,30000,", 0) == 0);

    auto t2 = run_cli({"table2", "--p", "23", "--limit", "30000", "--fast-path", "verify"});
    REQUIRE(t2.code == 0);
    CHECK(t2.out.rfind("p,limit,omega,i1,i2,i3,i4,i5,i6,i7,i8\n23,30000,", 0) == 0);
}

TEST_CASE("table json carries four-decimal fractions")
{
    auto r = run_cli({"table2", "--p", "7", "--limit", "300", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["omega"] == 5);
    double total = 0;
    for (auto & [k, v] : j[0]["percentages"].items())
        total += v.get<double>();
    CHECK(total == doctest::Approx(1.0));
    CHECK(j[0]["percentages"]["i1"].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("densities csv and null fractions")
{
    auto r = run_cli({"densities", "--p", "7", "--limit", "301", "--checkpoints", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("p,bound,omega,omega1") == 0);
    CHECK(r.out.find("\n7,101,0,") != std::string::npos);
    auto j = run_cli({"densities", "--p", "7", "--limit", "301", "--checkpoints", "3", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["rows"][0]["fractions"]["omega1"].is_null());
    CHECK_FALSE(doc["rows"][2]["fractions"]["omega1"].is_null());
}

TEST_CASE("classgroup and splitgen")
{
    auto cg = run_cli({"classgroup", "--p", "7"});
    REQUIRE(cg.code == 0);
    CHECK(cg.out == "p,disc,h,a,b,c\n7,-56,4,1,0,14\n7,-56,4,2,0,7\n7,-56,4,3,2,5\n7,-56,4,3,-2,5\n");
    auto j = nlohmann::json::parse(run_cli({"classgroup", "--p", "31", "--format", "json"}).out);
    CHECK(j["h"] == 8);
    CHECK(j["disc"] == -248);
    CHECK(j["principal"] == nlohmann::json::array({1, 0, 62}));

    CHECK(run_cli({"splitgen", "--p", "23"}).out == "p,a,b\n23,3,4\n");
    auto s = nlohmann::json::parse(run_cli({"splitgen", "--p", "31", "--format", "json"}).out);
    CHECK(s["a"] == 1);
    CHECK(s["b"] == 4);
}

TEST_CASE("--out writes to a file")
{
    std::string const path = "k2rank_cli_test_out.csv";
    auto r = run_cli({"splitgen", "--p", "7", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "p,a,b\n7,1,2\n");
    std::remove(path.c_str());

    CHECK(run_cli({"splitgen", "--p", "7", "--out", "/nonexistent/dir/x.csv"}).code == 1);
}

TEST_CASE("table2 golden row for p = 7 at 10^6")
{
    auto r = run_cli({"table2", "--p", "7", "--limit", "1000000", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "p,limit,omega,i1,i2,i3,i4,i5,i6,i7,i8\n7,1000000,9730,1215,1213,1228,1210,1210,1228,1225,1201\n");
}
