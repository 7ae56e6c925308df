#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(WTP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int rc = pclose(pipe);
    res.status = WEXITSTATUS(rc);
    return res;
}

}  // namespace

TEST_CASE("enumerate count") {
    CommandResult r = run_cli("enumerate --p 2 --k 2 --labels same --count");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 22);
}

TEST_CASE("enumerate partitions are serialized canonically") {
    CommandResult r = run_cli("enumerate --p 1 --k 1 --labels same");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 1);
    CHECK(j["partitions"][0] == "1,2");
    CHECK(j["word"] == "1@0 1*@0");
}

TEST_CASE("enumerate pairs") {
    CommandResult r = run_cli("enumerate --p 2 --k 2 --labels distinct --pairs --count");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 5);
}

TEST_CASE("moment emits exact rationals") {
    CommandResult r =
        run_cli("moment --p 2 --k 2 --labels distinct --law semicircle --dims 1,1,1");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["moment"] == "3");
    CHECK(j["monomials"].is_array());
    for (const auto& m : j["monomials"]) CHECK(m["coefficient"].is_string());

    CommandResult frac = run_cli(
        "moment --p 1 --k 2 --labels same --law mp:1/2 --dims 1,1/3");
    CHECK(frac.status == 0);
    nlohmann::json fj = nlohmann::json::parse(frac.out);
    CHECK(fj["moment"].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("series prints psi coefficients") {
    // a square block of a GUE matrix: the shape-1 law with Catalan moments
    CommandResult r = run_cli("series --p 1 --K 4 --law semicircle --dims 1,1");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["psi"] == nlohmann::json::array({"0", "1", "2", "5", "14"}));

    // a square block of a free-poisson matrix instead: F_k(2) moments
    CommandResult b = run_cli("series --p 1 --K 3 --law free-poisson --dims 1,1");
    CHECK(b.status == 0);
    CHECK(nlohmann::json::parse(b.out)["psi"] ==
          nlohmann::json::array({"0", "1", "3", "12"}));
}

TEST_CASE("verify exits zero when all suites pass") {
    CommandResult r = run_cli("verify --suite all --kmax 2 --K 6 --instances 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("verify: PASS") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("moment --k 2").status == 2);            // missing --p
    CHECK(run_cli("nonsense").status == 2);                // unknown verb
    CHECK(run_cli("moment --p 1 --k 1 --law wat").status == 2);
    CHECK(run_cli("enumerate --p 2 --k 9 --count").status == 2);  // cap exceeded
}

TEST_CASE("simulate json and csv") {
    CommandResult r = run_cli(
        "simulate --blocks 40,40 --labels distinct --law semicircle --trials 12 --kmax 2 "
        "--seed 3");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["exact"] == 1.0);

    CommandResult c = run_cli(
        "simulate --blocks 40,40 --labels distinct --law semicircle --trials 12 --kmax 1 "
        "--seed 3 --csv");
    CHECK(c.status == 0);
    CHECK(c.out.rfind("k,estimate,stderr,exact,pass", 0) == 0);
}

TEST_CASE("config file supplies defaults") {
    std::string path = "/tmp/wtp_cli_config_test.json";
    {
        std::ofstream f(path);
        f << "{\"p\": 2, \"k\": 2, \"labels\": \"same\", \"count\": true}\n";
    }
    CommandResult r = run_cli("enumerate --config " + path);
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 22);
    // command line wins over the config
    CommandResult o = run_cli("enumerate --config " + path + " --k 1");
    CHECK(o.status == 0);
    CHECK(nlohmann::json::parse(o.out)["count"] == 2);
}
