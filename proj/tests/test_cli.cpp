#include <abatch/cli.hpp>
#include <abatch/io.hpp>

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace abatch;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct then verify through stdin") {
    const auto t3 = run({"construct", "t3", "--m", "3"});
    REQUIRE(t3.code == kExitOk);
    const auto j = Json::parse(t3.out);
    CHECK(j.contains("code"));
    CHECK(run({"verify", "batch", "--t", "3"}, t3.out).code == kExitOk);
    CHECK(run({"verify", "pir", "--t", "3"}, t3.out).code == kExitOk);
    CHECK(run({"verify", "batch", "--t", "4"}, t3.out).code == kExitFalse);
}

TEST_CASE("asynchronous verdict exit codes") {
    const auto sx = run({"construct", "simplex", "--format", "text"});
    REQUIRE(sx.code == kExitOk);
    CHECK(run({"verify", "async", "--t", "4"}, sx.out).code == kExitFalse);
    const auto ex1 = run({"construct", "example1"});
    CHECK(run({"verify", "async", "--t", "3", "--mode", "relaxed"}, ex1.out).code == kExitOk);
    CHECK(run({"verify", "batch", "--t", "3", "--query-budget", "2"}, ex1.out).code == kExitUnknown);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "batch"}).code == kExitUsage);
    CHECK(run({"verify", "batch", "--t", "3"}, "10x1\n").code == kExitUsage);
    CHECK(run({"construct", "t3", "--m", "1"}).code == kExitUsage);
    CHECK(run({"bounds", "--t", "3", "--k-range", "9:x"}).code == kExitUsage);
    CHECK(run({"simulate", "--config", "-"}, R"({"code":"example1","t":3,"workload":{"uniform":5}})").code ==
          kExitUsage);
}

TEST_CASE("certificate exit codes") {
    const auto t3 = run({"construct", "t3", "--m", "2"});
    CHECK(run({"certify-theorem1", "--t", "3", "--target", "batch"}, t3.out).code == kExitOk);
    CHECK(run({"certify-theorem1", "--t", "4", "--target", "batch"}, t3.out).code == kExitUnknown);
}

TEST_CASE("search and bounds") {
    const auto b = run({"search", "B", "--eta", "6", "--r", "2", "--kappa", "3"});
    CHECK(b.code == kExitOk);
    CHECK(Json::parse(b.out)["B"] == 9);
    CHECK(run({"search", "theorem5", "--eta", "6", "--r", "3", "--kappa", "3"}).code == kExitOk);
    CHECK(run({"search", "theorem5", "--eta", "8", "--r", "3", "--kappa", "3"}).code == kExitFalse);
    CHECK(run({"search", "F", "--eta", "9", "--r", "3", "--kappa", "2", "--node-budget", "5"}).code == kExitUnknown);
    const auto bounds = run({"bounds", "--t", "3", "--k-range", "1:16", "--format", "json"});
    CHECK(bounds.code == kExitOk);
    CHECK(Json::parse(bounds.out)["rows"].size() == 16);
}

TEST_CASE("simulate and audit") {
    const std::string cfg = R"({"code":"example1","t":3,"workload":{"uniform":40},
        "latency":{"model":"exponential","value":1.0},"relaxed":true})";
    const auto sim = run({"simulate", "--config", "-", "--seed", "42", "--trace", "-"}, cfg);
    REQUIRE(sim.code == kExitOk);
    CHECK(sim.err.find("makespan") != std::string::npos);
    CHECK(run({"simulate", "--config", "-", "--seed", "42", "--trace", "-"}, cfg).out == sim.out);
    const auto audit = run({"audit", "--trace", "-", "--code", "example1", "--t", "3"}, sim.out);
    CHECK(audit.code == kExitOk);
    CHECK(Json::parse(audit.out)["ok"] == true);
    CHECK(run({"audit", "--trace", "-", "--code", "example1", "--t", "1"}, sim.out).code == kExitFalse);
}
