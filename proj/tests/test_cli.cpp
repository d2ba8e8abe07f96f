#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "flagdiv/divisor.hpp"

using namespace flagdiv;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FLAGDIV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(FLAGDIV_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("cli output matches the recorded golden bytes") {
    const std::pair<const char*, const char*> cases[] = {
        {"equations --n 7 --flag 3,6 --i 4", "equations_n7_f36_i4.txt"},
        {"equations --n 7 --flag 3,6 --i 5", "equations_n7_f36_i5.txt"},
        {"equations --n 4 --flag 1,3 --i 2 --format json", "equations_n4_f13_i2.json"},
        {"divisor --n 4 --flag 1,3", "divisor_n4_f13.txt"},
        {"divisor --n 4 --flag 1,3 --format json", "divisor_n4_f13.json"},
        {"pi1-table --n 3", "pi1_table_n3.txt"},
        {"bruhat --n 4 --u 2,1,4,3 --v 3,4,1,2 --flag 2", "bruhat_n4.txt"},
        {"verify --suite gamma --max-n 5 --seed 1", "verify_gamma_n5_seed1.txt"},
        {"verify --suite blockdet --max-n 4 --seed 7 --trials 4",
         "verify_blockdet_n4_seed7_trials4.txt"},
    };
    for (const auto& [args, file] : cases) {
        CAPTURE(args);
        const RunResult res = run_cli(args);
        CHECK(res.exit_code == 0);
        CHECK(res.out == golden(file));
    }
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("equations --help").exit_code == 0);
    CHECK(run_cli("equations --n 4").exit_code == 2);          // missing --flag
    CHECK(run_cli("equations --n 4 --flag 9 --i 1").exit_code == 2);
    CHECK(run_cli("equations --n 4 --flag 1,3 --i 2 --format xml").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("bruhat --n 3 --u 1,2 --v 1,2,3").exit_code == 2);
    CHECK(run_cli("verify --suite gamma --max-n 3 --seed 1").exit_code == 0);
}

TEST_CASE("cli --out writes the same bytes as stdout") {
    const std::string path = "cli_out_check.txt";
    const RunResult res = run_cli("divisor --n 4 --flag 1,3 --out " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    CHECK(read_file(path) == golden("divisor_n4_f13.txt"));
    std::remove(path.c_str());
}

TEST_CASE("json output round-trips through the polynomial parser") {
    const nlohmann::json doc = nlohmann::json::parse(golden("equations_n4_f13_i2.json"));
    CHECK(doc["flag"]["n"] == 4);
    CHECK(doc["flag"]["steps"] == nlohmann::json::array({1, 3}));
    REQUIRE(doc["components"].size() == 1);
    const Polynomial eq = Polynomial::from_json_str(doc["components"][0]["equation"].dump());
    CHECK(eq == component_equation(FlagType(4, {1, 3}), 2).equation);

    const nlohmann::json div = nlohmann::json::parse(golden("divisor_n4_f13.json"));
    const auto comps = anticanonical_divisor(FlagType(4, {1, 3}));
    REQUIRE(div["components"].size() == comps.size());
    for (size_t k = 0; k < comps.size(); ++k) {
        CHECK(div["components"][k]["case"] == comps[k].case_tag);
        CHECK(div["components"][k]["i"] == comps[k].i);
        CHECK(Polynomial::from_json_str(div["components"][k]["equation"].dump()) ==
              comps[k].equation);
    }
}
