#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "mnforge/cli.hpp"

using namespace mnforge;

namespace {
struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = run_cli(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli eval prints canonical text") {
    CliResult r = run({"eval", "x1*s1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "-1*s1*x1\n");
    CHECK(run({"eval", "gamma(2)"}).out == "1*x1^-1 + 1*x2^-1\n");
    CHECK(run({"eval", "comm(x1, s1)"}).out == "-1*e\n");
}

TEST_CASE("cli eval reports truncation depth") {
    CliResult r = run({"--depth", "3", "eval", "inv(1 - x1)"});
    CHECK(r.rc == 0);
    CHECK(r.out == "1*e + 1*x1 + 1*x1^2 + 1*x1^3\ntruncation: 3\n");
}

TEST_CASE("cli eval json record") {
    CliResult r = run({"--json", "eval", "gamma(2)"});
    CHECK(r.rc == 0);
    nlohmann::json rec = nlohmann::json::parse(r.out);
    CHECK(rec["schema"] == "mnforge/1");
    CHECK(rec["kind"] == "series");
    CHECK(rec["truncation"].is_null());
    REQUIRE(rec["terms"].size() == 2);
    CHECK(rec["terms"][0]["word"] == nlohmann::json::parse(R"([[1, "-1"]])"));
    CHECK(rec["terms"][0]["coeff"][0]["mask"].empty());
    CHECK(rec["terms"][0]["coeff"][0]["value"] == "1");
    CliResult t = run({"--json", "--depth", "2", "eval", "inv(1 - x1)"});
    CHECK(nlohmann::json::parse(t.out)["truncation"] == 2);
}

TEST_CASE("cli central agreement sets the exit code") {
    CliResult r = run({"central", "x1^2"});
    CHECK(r.rc == 0);
    CHECK(r.out == "central: true\nwindow-test: true\n");
    CliResult s = run({"central", "s1"});
    CHECK(s.rc == 0);
    CHECK(s.out == "central: false\nwindow-test: false\n");
    nlohmann::json rec = nlohmann::json::parse(run({"--json", "central", "x1"}).out);
    CHECK(rec["central"] == false);
    CHECK(rec["window_test"] == false);
}

TEST_CASE("cli order compares words") {
    CHECK(run({"order", "x1^-1", "x2^-1"}).out == "LT\n");
    CHECK(run({"order", "x1", "e"}).out == "GT\n");
    CHECK(run({"order", "x2*x2^-1", "e"}).out == "EQ\n");
    CHECK(nlohmann::json::parse(run({"--json", "order", "e", "x1"}).out)["relation"] == "LT");
    CHECK(run({"order", "2*x1", "e"}).rc == 1);  // not a bare word
}

TEST_CASE("cli gamma-witness") {
    CliResult r = run({"gamma-witness", "--N", "3", "--deg", "3"});
    CHECK(r.rc == 0);
    CHECK(r.out == "6\nabsent-below-degree: true\n");
    CHECK(run({"gamma-witness", "--N", "2", "--deg", "3"}).rc == 1);
    nlohmann::json rec =
        nlohmann::json::parse(run({"--json", "gamma-witness", "--N", "4", "--deg", "2"}).out);
    CHECK(rec["witness"] == "2");
    CHECK(rec["absent_below_degree"] == true);
}

TEST_CASE("cli centralizer") {
    CHECK(run({"centralizer", "--n", "1"}).out == "1\n");
    CHECK(run({"centralizer", "--n", "0"}).out == "1\n");
    CHECK(run({"centralizer", "--n", "1", "--a", "1", "--b", "3"}).out == "1\n");
    CHECK(run({"centralizer", "--n", "1", "--a", "0", "--b", "3"}).rc == 1);
}

TEST_CASE("cli norm") {
    CHECK(run({"norm", "--n", "1", "0,1,0,0"}).out == "4\n");
    CHECK(run({"norm", "--n", "1", "--a", "-1", "--b", "-1", "1,2,3,4"}).out == "900\n");
    CliResult bad = run({"norm", "--n", "1", "1,2,3"});
    CHECK(bad.rc == 1);
    CHECK(bad.err.find("4 coordinates") != std::string::npos);
}

TEST_CASE("cli prime table override") {
    CHECK(run({"--primes", "5,7", "eval", "s1*s1"}).out == "5*e\n");
    CHECK(run({"--primes", "4,5", "eval", "1"}).rc == 1);
    CHECK(run({"--primes", "5,3", "eval", "1"}).rc == 1);  // must increase
}

TEST_CASE("cli verify runs a suite deterministically") {
    CliResult a = run({"verify", "order", "--seed", "7"});
    CHECK(a.rc == 0);
    CHECK(a.out.find("suite=order checks=") == 0);
    CHECK(a.out.find("failures=0") != std::string::npos);
    CHECK(a.out.find("seed=7") != std::string::npos);
    CHECK(a.err.find("elapsed_ms=") != std::string::npos);
    // The record is the last line of stdout.
    std::size_t nl = a.out.rfind('\n', a.out.size() - 2);
    nlohmann::json rec = nlohmann::json::parse(a.out.substr(nl + 1));
    CHECK(rec["schema"] == "mnforge/1");
    CHECK(rec["kind"] == "verify");
    CHECK(rec["failures"] == 0);
    CHECK(rec["suites"][0]["name"] == "order");

    CliResult b = run({"verify", "order", "--seed", "7"});
    CHECK(a.out == b.out);  // byte-stable stdout
    CliResult c = run({"verify", "order", "--seed", "8"});
    CHECK(c.rc == 0);
    CHECK(run({"verify", "nosuch", "--seed", "7"}).rc == 2);
}

TEST_CASE("cli usage errors") {
    CHECK(run({"eval"}).rc != 0);                 // missing expression
    CHECK(run({}).rc != 0);                       // missing subcommand
    CHECK(run({"eval", "x1 +"}).rc == 1);         // parse error inside the expression
    CliResult help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("eval") != std::string::npos);
}

TEST_CASE("cli environment fallbacks") {
    ::setenv("MNFORGE_DEPTH", "2", 1);
    CHECK(run({"eval", "inv(1 - x1)"}).out.find("truncation: 2") != std::string::npos);
    // An explicit flag wins over the environment.
    CHECK(run({"--depth", "4", "eval", "inv(1 - x1)"}).out.find("truncation: 4") !=
          std::string::npos);
    ::unsetenv("MNFORGE_DEPTH");
    ::setenv("MNFORGE_PRIMES", "11,13", 1);
    CHECK(run({"eval", "s1*s1"}).out == "11*e\n");
    ::unsetenv("MNFORGE_PRIMES");
}
