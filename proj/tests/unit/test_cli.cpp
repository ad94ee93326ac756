#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "nilrep/cli.hpp"

using namespace nilrep;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}
}  // namespace

TEST_CASE("flag mapping") {
    RunConfig cfg = parse_args(
        {"certify", "--type", "C", "--rank", "2", "--ell", "5", "--lambda", "3,1",
         "--suite", "all", "--seed", "9", "--threads", "2"});
    CHECK(cfg.command == "certify");
    CHECK(cfg.type == LieType::C);
    CHECK(cfg.rank == 2);
    CHECK(cfg.l == 5);
    CHECK(cfg.lambda == std::vector<long>{3, 1});
    CHECK(cfg.suite == Suite::All);
    CHECK(cfg.seed == 9);
    CHECK(cfg.threads == 2);
}

TEST_CASE("usage errors carry exit code two") {
    // weight length mismatch
    RunConfig cfg = parse_args({"certify", "--type", "C", "--rank", "2", "--ell", "5",
                                "--lambda", "1,2,3"});
    CHECK(run(cfg) == 2);
    // even root order
    cfg = parse_args({"certify", "--type", "C", "--rank", "2", "--ell", "4", "--lambda", "1,1"});
    CHECK(run(cfg) == 2);
    // rank below the type minimum
    cfg = parse_args({"certify", "--type", "D", "--rank", "3", "--ell", "5", "--lambda",
                      "0,0,0"});
    CHECK(run(cfg) == 2);
    // unknown flag / missing subcommand are parse failures
    CHECK_THROWS_AS(parse_args({"certify", "--bogus", "1"}), UsageError);
    CHECK_THROWS_AS(parse_args({}), UsageError);
    CHECK_THROWS_AS(parse_args({"certify", "--suite", "nonsense", "--type", "A", "--rank",
                                "1", "--ell", "5", "--lambda", "0"}),
                    UsageError);
}

TEST_CASE("trivial weight run reports dimension one and exits zero") {
    RunConfig cfg = parse_args({"submodule", "--type", "C", "--rank", "2", "--ell", "5",
                                "--lambda", "0,0", "--out", "/tmp/nilrep_test_sub.json"});
    CHECK(run(cfg) == 0);
    Json j = Json::parse(slurp("/tmp/nilrep_test_sub.json"));
    CHECK(j["dims"]["submodule"] == 1);
    std::remove("/tmp/nilrep_test_sub.json");
}

TEST_CASE("corrupted table exits one with a witness") {
    RunConfig cfg = parse_args({"verify-relations", "--type", "C", "--rank", "2", "--ell", "5",
                                "--lambda", "1,1", "--corrupt-b", "1,2,1", "--out",
                                "/tmp/nilrep_test_bad.json"});
    CHECK(run(cfg) == 1);
    Json j = Json::parse(slurp("/tmp/nilrep_test_bad.json"));
    CHECK(j["checks"][0]["status"] == "fail");
    CHECK(j["checks"][0].contains("witness"));
    std::remove("/tmp/nilrep_test_bad.json");
}

TEST_CASE("identical config and seed give byte-identical certificates") {
    for (int round = 0; round < 2; ++round) {
        RunConfig cfg = parse_args({"certify", "--type", "A", "--rank", "2", "--ell", "5",
                                    "--lambda", "2,1", "--suite", "all", "--seed", "13",
                                    "--normalize-timings", "--out",
                                    "/tmp/nilrep_det_" + std::to_string(round) + ".json"});
        CHECK(run(cfg) == 0);
    }
    CHECK(slurp("/tmp/nilrep_det_0.json") == slurp("/tmp/nilrep_det_1.json"));
    std::remove("/tmp/nilrep_det_0.json");
    std::remove("/tmp/nilrep_det_1.json");
}

TEST_CASE("basis dump round trips through the reload path") {
    RunConfig cfg = parse_args({"submodule", "--type", "C", "--rank", "2", "--ell", "5",
                                "--lambda", "2,1", "--basis-out", "/tmp/nilrep_basis.ndjson",
                                "--out", "/tmp/nilrep_span.json"});
    CHECK(run(cfg) == 0);
    RunConfig reload = parse_args({"submodule", "--type", "C", "--rank", "2", "--ell", "5",
                                   "--lambda", "2,1", "--basis-in", "/tmp/nilrep_basis.ndjson",
                                   "--out", "/tmp/nilrep_recheck.json"});
    CHECK(run(reload) == 0);
    Json j = Json::parse(slurp("/tmp/nilrep_recheck.json"));
    CHECK(j["checks"][0]["name"] == "basis-recheck");
    CHECK(j["checks"][0]["status"] == "pass");
    std::remove("/tmp/nilrep_basis.ndjson");
    std::remove("/tmp/nilrep_span.json");
    std::remove("/tmp/nilrep_recheck.json");
}

TEST_CASE("config file merges under flags") {
    {
        std::ofstream cfgfile("/tmp/nilrep_cfg.ini");
        cfgfile << "type=C\nrank=2\nell=5\nlambda=1,1\nseed=5\n";
    }
    RunConfig cfg = parse_args({"certify", "--config", "/tmp/nilrep_cfg.ini", "--suite",
                                "highest", "--seed", "7"});
    CHECK(cfg.type == LieType::C);
    CHECK(cfg.rank == 2);
    CHECK(cfg.seed == 7);  // flags win over the file
    CHECK(cfg.suite == Suite::Highest);
    std::remove("/tmp/nilrep_cfg.ini");
}

TEST_CASE("modular backend reverifies the span dimension exactly") {
    RunConfig cfg = parse_args({"submodule", "--type", "C", "--rank", "2", "--ell", "5",
                                "--lambda", "1,2", "--backend", "modp:150001", "--out",
                                "/tmp/nilrep_modp.json"});
    CHECK(run(cfg) == 0);
    Json j = Json::parse(slurp("/tmp/nilrep_modp.json"));
    CHECK(j["backend"] == "modp:150001");
    CHECK(j["dims"]["submodule"] == j["dims"]["submodule_exact"]);
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "dimension-reverify") {
            found = true;
            CHECK(c["status"] == "pass");
        }
    CHECK(found);
    std::remove("/tmp/nilrep_modp.json");
}

TEST_CASE("rootvec and dump-generators emit their reports") {
    RunConfig cfg = parse_args({"rootvec", "--type", "C", "--rank", "2", "--ell", "5",
                                "--lambda", "1,1", "--out", "/tmp/nilrep_rv.json"});
    CHECK(run(cfg) == 0);
    Json rv = Json::parse(slurp("/tmp/nilrep_rv.json"));
    CHECK(rv["roots"].size() == 4);
    for (const auto& r : rv["roots"]) CHECK(r["degree_check"] == "pass");
    std::remove("/tmp/nilrep_rv.json");

    cfg = parse_args({"dump-generators", "--type", "A", "--rank", "2", "--ell", "5",
                      "--lambda", "0,0", "--out", "/tmp/nilrep_gen.json"});
    CHECK(run(cfg) == 0);
    Json g = Json::parse(slurp("/tmp/nilrep_gen.json"));
    CHECK(g["e"].size() == 2);
    CHECK(g["t"][0][0]["brace_d"] == 0);
    std::remove("/tmp/nilrep_gen.json");
}

TEST_CASE("lowest suite is rejected for type A") {
    RunConfig cfg = parse_args({"certify", "--type", "A", "--rank", "2", "--ell", "5",
                                "--lambda", "1,1", "--suite", "lowest"});
    CHECK(run(cfg) == 2);
}
