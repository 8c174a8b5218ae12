#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using permfib::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "--claim", "theorem1", "--n-max", "8", "--m", "3,4,5"}).code == 0);
    const Run big = run({"verify", "--claim", "theorem1", "--n-max", "99"});
    CHECK(big.code == 2);
    CHECK(contains(big.err, "enumeration cap"));
    CHECK(run({"verify", "--claim", "nonsense"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("verify theorem4 reports 2^8 classes at n = 9") {
    const Run r = run({"verify", "--claim", "theorem4", "--n-max", "9", "--format", "json", "--no-timestamp"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["reports"][0]["details"]["classes"].back() == 256);
    CHECK_FALSE(j.contains("generated_at"));
    CHECK_FALSE(j["reports"][0].contains("millis"));
}

TEST_CASE("JSON report keys are stable") {
    const Run r = run({"verify", "--claim", "theorem2,gf3", "--n-max", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.contains("generated_at"));
    REQUIRE(j["reports"].size() == 2);
    std::vector<std::string> keys;
    for (auto it = j["reports"][0].begin(); it != j["reports"][0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"claim", "params", "pass", "counterexample", "details", "millis"});
    CHECK(j["reports"][0]["claim"] == "theorem2");
    CHECK(j["reports"][1]["claim"] == "gf3");
}

TEST_CASE("output is deterministic without timestamps") {
    const std::vector<std::string> args{"verify", "--claim", "all", "--n-max", "6", "--format", "json", "--no-timestamp"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> table{"table", "--kind", "descent-matrix", "--n-max", "4", "--format", "csv"};
    CHECK(run(table).out == run(table).out);
}

TEST_CASE("stats") {
    const Run r = run({"stats", "--perm", "23568714"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "descent composition  (5,1,2)"));
    CHECK(contains(r.out, "ilpk                 3"));
    CHECK(run({"stats", "--perm", "1 1 2"}).code == 2);
    CHECK(run({"stats"}).code == 2);
}

TEST_CASE("biject") {
    const Run n = run({"biject", "--perm", "1 2 5 10 12 8 6 4 3 7 9 11"});
    CHECK(n.code == 0);
    CHECK(contains(n.out, "aacbabcbcaca"));
    CHECK(contains(n.out, "not in N'_n"));

    const Run c = run({"biject", "--composition", "3,2,3,1"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "456372891"));

    const Run w = run({"biject", "--word", "aacbcccaaabbcac"});
    CHECK(w.code == 0);
    CHECK(contains(w.out, "aac|bc|c|c|aaab|bc|ac"));
    CHECK(contains(w.out, "+-+---+---+-+-+---+---+---+-+-+"));

    const Run full = run({"biject", "--perm", "1 2 8 9 10 14 16 17 12 11 4 3 5 6 7 13 15 18 19 20"});
    CHECK(full.code == 0);
    CHECK(contains(full.out, "aacbcccaaabbcacaaccc"));
    CHECK(contains(full.out, "j=3 k=15"));

    const Run bad = run({"biject", "--perm", "123"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "lpk ≠ 1: not in N_n"));
    CHECK(run({"biject", "--word", "bc"}).code == 1);
    CHECK(run({"biject", "--word", "xyz"}).code == 2);
    CHECK(run({"biject"}).code == 2);
}

TEST_CASE("tables") {
    const Run t2 = run({"table", "--kind", "counts-thm2", "--n-max", "8", "--format", "csv"});
    CHECK(t2.code == 0);
    CHECK(t2.out == "n,oracle,closed_form\n1,0,0\n2,1,1\n3,4,4\n4,13,13\n5,37,37\n6,101,101\n7,269,269\n8,710,710\n");

    const Run fib = run({"table", "--kind", "fib", "--order", "2", "--n-max", "10", "--format", "csv"});
    CHECK(fib.code == 0);
    CHECK(contains(fib.out, "10,89\n"));

    const Run gf = run({"table", "--kind", "gf-coeffs", "--m", "4", "--order", "10", "--format", "csv"});
    CHECK(gf.code == 0);
    CHECK(contains(gf.out, "6,158\n"));
    CHECK(contains(gf.out, "10,11239\n"));

    CHECK(run({"table", "--kind", "bogus"}).code == 2);
}

TEST_CASE("series") {
    const Run v = run({"series", "--kind", "v", "--order", "3"});
    CHECK(v.code == 0);
    CHECK(v.out == "1/4*t + 1/8*t^2 + 5/64*t^3 + O(t^4)\n");
    CHECK(run({"series", "--kind", "ogf-ilpk", "--m", "3", "--order", "6"}).code == 0);
    CHECK(run({"series", "--kind", "nope"}).code == 2);
}

TEST_CASE("--output writes a file") {
    const std::string path = "permfib_cli_test_output.csv";
    const Run r = run({"table", "--kind", "fib", "--n-max", "3", "--format", "csv", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    CHECK(contains(s.str(), "3,3\n"));
    std::remove(path.c_str());
}
