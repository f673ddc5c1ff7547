#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "moonshine/cli.hpp"
#include "moonshine/fixtures.hpp"

using namespace moonshine;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ogg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    Run r = run(args);
    return json::parse(r.out);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("tables reproduce the reference rows") {
    Run r = run({"tables", "--json"});
    CHECK(r.code == cli::kExitOk);
    json doc = json::parse(r.out);
    CHECK(doc["schemaVersion"] == cli::kSchemaVersion);
    CHECK(doc["command"] == "tables");
    CHECK(doc["results"]["table2Matches"] == true);
    const auto& rows = doc["results"]["rows"];
    REQUIRE(rows.size() == fixtures::prime_rows().size());
    int anomalies = 0;
    for (const auto& row : rows) {
        CHECK(row["table2"]["status"] == "pass");
        if (row["table3"]["status"] == "known-anomaly") ++anomalies;
        else CHECK(row["table3"]["status"] == "pass");
        if (row["p"] == 47) CHECK(row["table2"]["computed"] == "32/(j+3)+4/(j+37)+17/(j+38)");
        if (row["p"] == 41) CHECK(row["table2"]["computed"] == "36/(j+9)+20/(j+13)+31/(j+38)");
        if (row["p"] == 13) CHECK(row["table3"]["status"] == "known-anomaly");
        if (row["p"] == 29) CHECK(row["table3"]["status"] == "known-anomaly");
    }
    CHECK(anomalies == 2);
}

TEST_CASE("documented anomalies fail when errata are not allowed") {
    CHECK(run({"tables", "--no-allow-known-errata"}).code == cli::kExitFailure);
}

TEST_CASE("tables as CSV") {
    Run r = run({"tables", "--csv"});
    CHECK(r.code == cli::kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 16);
    CHECK(lines[0].rfind("p,class,", 0) == 0);
    CHECK(lines[13] == "47,47AB,32/(j+3)+4/(j+37)+17/(j+38),32/(j+3)+4/(j+37)+17/(j+38),pass,"
                       "6*E4^7*E6*Delta + E4^4*E6*Delta^2 + 6*E4*E6*Delta^3,"
                       "6*E4*E6^5*Delta + 10*E4*E6^3*Delta^2 + 16*E4*E6*Delta^3,pass");
    CHECK(run({"tables", "--csv", "--json"}).code == cli::kExitUsage);
}

TEST_CASE("prime report for 71 with exact coefficients") {
    json doc = run_json({"prime", "71", "--exact"});
    const auto& res = doc["results"];
    CHECK(res["classLabel"] == "71AB");
    const auto& ex = fixtures::u71_exact_head();
    for (std::size_t i = 0; i < ex.size(); ++i)
        CHECK(res["uExact"]["coefficients"][i].get<std::string>() == std::to_string(ex[i]));
    const auto& mod = fixtures::u71_mod_head();
    for (std::size_t i = 0; i < mod.size(); ++i) CHECK(res["uModP"]["coefficients"][i] == mod[i]);
    CHECK(res["supersingular"]["ssPNegated"].get<std::vector<std::int64_t>>() == fixtures::ss71_negated());
    for (const auto& v : doc["verdicts"]) CHECK(v["status"] == "pass");
}

TEST_CASE("prime report shapes") {
    json p11 = run_json({"prime", "11"});
    CHECK(p11["results"]["uModPIsZero"] == true);
    CHECK(p11["results"]["partialFractions"] == "0");
    CHECK_FALSE(p11["results"].contains("uExact"));

    Run r37 = run({"prime", "37", "--json"});
    CHECK(r37.code == cli::kExitOk);
    json p37 = json::parse(r37.out);
    CHECK(p37["results"]["classLabel"].is_null());
    CHECK(p37["results"]["quadraticDenominators"].get<int>() >= 1);
    CHECK(p37["results"]["genus"]["genusX0Plus"].get<int>() > 0);

    json p13 = run_json({"prime", "13", "--prec", "60"});
    CHECK(p13["parameters"]["precision"] == 60);
    CHECK(run({"prime", "13", "--no-allow-known-errata"}).code == cli::kExitFailure);
}

TEST_CASE("verify commands") {
    CHECK(run({"verify", "replicability", "71"}).code == cli::kExitOk);
    CHECK(run({"verify", "swisher", "17"}).code == cli::kExitOk);
    CHECK(run({"verify", "eqnC2", "13"}).code == cli::kExitOk);

    json doc = run_json({"verify", "replicability", "71", "--prec", "80"});
    CHECK(doc["results"]["status"] == "pass");
    CHECK(doc["verdicts"][0]["precision"] == 80);

    Run unsupported = run({"verify", "replicability", "11", "--json"});
    CHECK(unsupported.code == cli::kExitUsage);
    CHECK(json::parse(unsupported.out)["results"]["status"] == "unsupported");
    CHECK(run({"verify", "swisher", "3"}).code == cli::kExitUsage);
    CHECK(run({"verify", "eqnC2", "2"}).code == cli::kExitOk);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"prime"}).code == cli::kExitUsage);
    CHECK(run({"prime", "12"}).code == cli::kExitUsage);
    CHECK(run({"prime", "x"}).code == cli::kExitUsage);
    CHECK(run({"verify", "nonsense", "5"}).code == cli::kExitUsage);
    CHECK(run({"prime", "5", "--prec", "0"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    Run help = run({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("ogg-scan") != std::string::npos);
}

TEST_CASE("precision from the environment") {
    setenv(cli::kPrecisionEnv, "64", 1);
    json doc = run_json({"prime", "7"});
    CHECK(doc["parameters"]["precision"] == 64);
    json explicit_prec = run_json({"prime", "7", "--prec", "55"});
    CHECK(explicit_prec["parameters"]["precision"] == 55);
    setenv(cli::kPrecisionEnv, "abc", 1);
    CHECK(run({"prime", "7"}).code == cli::kExitUsage);
    unsetenv(cli::kPrecisionEnv);
}

TEST_CASE("ogg scan and supersingular commands") {
    json doc = run_json({"ogg-scan", "500"});
    CHECK(doc["results"]["primes"].get<std::vector<std::int64_t>>() == fixtures::ogg_primes());
    CHECK(doc["verdicts"][0]["status"] == "pass");
    json ss = run_json({"ss", "71"});
    CHECK(ss["results"]["totalCount"] == 7);
    CHECK(ss["results"]["allInFp"] == true);
    json ss3 = run_json({"ss", "3"});
    CHECK(ss3["results"]["computed"] == false);
}

TEST_CASE("JSON output is deterministic and matches the golden files") {
    Run a = run({"prime", "29", "--json", "--exact"});
    Run b = run({"prime", "29", "--json", "--exact"});
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
    CHECK(run({"ss", "71", "--json"}).out == slurp(std::string(GOLDEN_DIR) + "/ss_71.json"));
    CHECK(run({"ogg-scan", "100", "--json"}).out == slurp(std::string(GOLDEN_DIR) + "/ogg_scan_100.json"));
}

TEST_CASE("text output") {
    Run r = run({"prime", "71", "--exact"});
    CHECK(r.out.find("2773, 302729, 12173239, 285152905, 4692994938") != std::string::npos);
    CHECK(r.out.find("18/(j+5)+48/(j+23)+16/(j+30)+40/(j+31)+24/(j+54)") != std::string::npos);
    Run s = run({"ss", "71"});
    CHECK(s.out.find("5 23 30 31 54") != std::string::npos);
}
