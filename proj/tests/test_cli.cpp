#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobstab/cli.hpp"

using namespace frobstab;

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    CliResult res;
    res.code = run_cli(args, o, e);
    res.out = o.str();
    res.err = e.str();
    return res;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CliResult bad_prime = run({"verify-filtration", "--p", "4", "--n", "1"});
    CHECK(bad_prime.code == 2);
    CHECK(bad_prime.err.find("4 is not prime") != std::string::npos);

    CHECK(run({"rep-dims", "--p", "1", "--n", "1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify-filtration", "--p", "2,,3", "--n", "1"}).code == 2);
    CHECK(run({"verify-filtration", "--p", "5..3", "--n", "1"}).code == 2);
    CHECK(run({"verify-filtration", "--p", "2", "--n", "0"}).code == 2);
    CHECK(run({"verify-filtration", "--p", "2", "--n", "1", "--format", "junk"}).code == 2);
    CHECK(run({"rep-dims", "--p", "2", "--n", "1", "--bogus"}).code == 2);
    CHECK(run({"verify-filtration", "--p", "2", "--n", "1", "--samples", "0"}).code == 2);
}

TEST_CASE("help prints the subcommands and exits cleanly") {
    CliResult res = run({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("verify-filtration") != std::string::npos);
    CHECK(res.out.find("slope-certify") != std::string::npos);
    CHECK(res.out.find("FROBSTAB_FIBER_CAP") != std::string::npos);
}

TEST_CASE("verify-filtration reports every clause as passing on a small grid") {
    CliResult res = run({"verify-filtration", "--p", "2", "--n", "1", "--format", "json"});
    REQUIRE(res.code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j["command"] == "verify-filtration");
    CHECK(j["config"]["p"] == nlohmann::json::array({2}));
    // 7 filtration clauses + 4 generation clauses + equivariance at l = 0, 1
    REQUIRE(j["reports"].size() == 13);
    for (const auto& r : j["reports"]) CHECK(r["status"] == "pass");
    CHECK(j["summary"]["clauses"] == 13);
    CHECK(j["summary"]["passed"] == 13);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["refused"] == 0);
    CHECK(j["summary"]["exit"] == 0);
}

TEST_CASE("verify-filtration covers the full rank list") {
    CliResult res = run(
        {"verify-filtration", "--p", "2", "--n", "1", "--r", "1,2", "--format", "json"});
    REQUIRE(res.code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j["reports"].size() == 2 * 7 + 4 + 2);
    bool saw_r2 = false;
    for (const auto& r : j["reports"])
        if (r["clause"].get<std::string>().find("r=2") != std::string::npos) saw_r2 = true;
    CHECK(saw_r2);
}

TEST_CASE("cap overruns are reported as refusals with exit 3") {
    CliResult res = run({"verify-filtration", "--p", "3", "--n", "2", "--tensor-cap", "8",
                         "--format", "json"});
    REQUIRE(res.code == 3);
    nlohmann::json j = nlohmann::json::parse(res.out);
    // the filtration report collapses to one refusal; equivariance refuses
    // only l = 4 (2^4 > 8) and keeps l <= 3
    REQUIRE(j["reports"].size() == 10);
    CHECK(j["summary"]["refused"] == 2);
    CHECK(j["summary"]["passed"] == 8);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["exit"] == 3);
    int cap_rows = 0;
    for (const auto& r : j["reports"])
        if (r["status"] == "refused") {
            ++cap_rows;
            CHECK(r["clause"].get<std::string>().find("resource-cap") != std::string::npos);
            CHECK(r.contains("witness"));
        }
    CHECK(cap_rows == 2);
}

TEST_CASE("rep-dims emits the exact dimension table as CSV") {
    CliResult res = run({"rep-dims", "--p", "3", "--n", "2", "--format", "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.out ==
          "p,n,l,dim,sym_dim,equal_flag\r\n"
          "3,2,0,1,1,1\r\n"
          "3,2,1,2,2,1\r\n"
          "3,2,2,3,3,1\r\n"
          "3,2,3,2,4,0\r\n"
          "3,2,4,1,5,0\r\n");
}

TEST_CASE("rep-dims dimension law holds for single-variable and binary cases") {
    CliResult res = run({"rep-dims", "--p", "5", "--n", "1", "--format", "json"});
    REQUIRE(res.code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    REQUIRE(j["reports"].size() == 5); // l = 0..4
    for (const auto& r : j["reports"]) {
        CHECK(r["status"] == "pass");
        CHECK(r["witness"].get<std::string>().find("dim=1 ") != std::string::npos);
    }

    CliResult res2 = run({"rep-dims", "--p", "2..3", "--n", "1", "--format", "json"});
    REQUIRE(res2.code == 0);
    nlohmann::json j2 = nlohmann::json::parse(res2.out);
    CHECK(j2["reports"].size() == 2 + 3); // p=2: l=0,1; p=3: l=0,1,2
    for (const auto& r : j2["reports"]) CHECK(r["status"] == "pass");
}

TEST_CASE("slope-certify reports the expected minima for a line bundle") {
    CliResult res = run(
        {"slope-certify", "--g", "2", "--p", "3", "--rank-w", "1", "--format", "json"});
    REQUIRE(res.code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    std::vector<std::string> minima;
    for (const auto& r : j["reports"])
        if (r["clause"].get<std::string>().find(": minimum") != std::string::npos) {
            CHECK(r["status"] == "pass");
            minima.push_back(r["witness"].get<std::string>());
        }
    CHECK(minima == std::vector<std::string>{"2/3", "1/3", "0/1"});
    CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("slope-certify emits per-profile certificates as CSV") {
    CliResult res = run({"slope-certify", "--g", "2", "--p", "3", "--rank-w", "1", "--format",
                         "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.out ==
          "g,p,rank_w,rank_e,profile,weighted_sum,gap_bound,equality_possible\r\n"
          "2,3,1,1,(1),1/1,2/3,0\r\n"
          "2,3,1,2,\"(1,1)\",1/1,1/3,0\r\n"
          "2,3,1,3,\"(1,1,1)\",0/1,0/1,1\r\n");
}

TEST_CASE("slope-certify handles refuted equality profiles and low genus") {
    // rank_e = 3 < 6 admits the zero-weight profile (1,1,1); the minimum must
    // still be positive and the run must pass
    CliResult res = run({"slope-certify", "--g", "2", "--p", "3", "--rank-w", "2", "--rank-e",
                         "3", "--format", "json"});
    REQUIRE(res.code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    for (const auto& r : j["reports"])
        if (r["clause"].get<std::string>().find(": minimum") != std::string::npos) {
            CHECK(r["status"] == "pass");
            CHECK(r["witness"] == "4/9");
        }

    CliResult low = run({"slope-certify", "--g", "1", "--p", "3", "--rank-w", "1", "--rank-e",
                         "1", "--format", "json"});
    REQUIRE(low.code == 0);
    nlohmann::json lj = nlohmann::json::parse(low.out);
    int na_rows = 0;
    for (const auto& r : lj["reports"])
        if (r["status"] == "not_applicable") ++na_rows;
    CHECK(na_rows == 3); // proper-strict, full-rank-equality, minimum
}

TEST_CASE("slope-certify rejects infeasible subbundle ranks") {
    CHECK(run({"slope-certify", "--g", "2", "--p", "3", "--rank-w", "1", "--rank-e", "4"})
              .code == 2);
    CHECK(run({"slope-certify", "--g", "-1", "--p", "3", "--rank-w", "1"}).code == 2);
    CHECK(run({"slope-certify", "--g", "2", "--p", "3", "--rank-w", "0"}).code == 2);
}

TEST_CASE("identical configurations produce byte-identical JSON") {
    const std::vector<std::string> verify_args = {"verify-filtration", "--p", "2,3", "--n",
                                                  "1",                 "--seed", "5",  "--format",
                                                  "json"};
    CliResult a = run(verify_args);
    CliResult b = run(verify_args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    const std::vector<std::string> slope_args = {"slope-certify", "--g", "2,3", "--p", "2,3",
                                                 "--rank-w", "1,2", "--format", "json"};
    CliResult c = run(slope_args);
    CliResult d = run(slope_args);
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("--out redirects the report to a file") {
    const std::string path = "cli_out_test.json";
    CliResult res = run({"rep-dims", "--p", "2", "--n", "1", "--format", "json", "--out", path});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(buf.str());
    CHECK(j["command"] == "rep-dims");
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("text format prints tagged clause lines and a summary") {
    CliResult res = run({"verify-filtration", "--p", "2", "--n", "1"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("[PASS]") != std::string::npos);
    CHECK(res.out.find("13 clauses: 13 passed, 0 failed") != std::string::npos);
    CHECK(res.out.find("(exit 0)") != std::string::npos);
}
