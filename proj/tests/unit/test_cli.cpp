#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const fs::path dir = fs::temp_directory_path() / "bqa-cli-test";
    fs::create_directories(dir);
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    const std::string cmd = std::string(BQA_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    const int rc = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    return {WEXITSTATUS(rc), slurp(out_file), slurp(err_file)};
}

std::string slurp_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "bqa-cli-test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir.parent_path());
    return dir;
}

}  // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("sweep --help").exit_code == 0);
}

TEST_CASE("single-spin experiment writes the bifurcation data") {
    const fs::path out = fresh_dir("single");
    const RunResult r = run_cli("single-spin --h -1 --s-points 11 --out " +
                                out.string());
    REQUIRE(r.exit_code == 0);

    const json summary = json::parse(slurp_file(out / "summary.json"));
    CHECK(summary.at("experiment") == "single-spin");
    const auto probs = summary.at("results").at("final_probs");
    CHECK(probs[0].get<double>() < 0.01);
    CHECK(probs[2].get<double>() > 0.99);

    std::ifstream csv(out / "single-spin.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "s,A,B,p_plus1,p_zero,p_minus1,energy");
    int rows = 0;
    for (std::string line; std::getline(csv, line);) ++rows;
    CHECK(rows == 11);
}

TEST_CASE("sweep experiment reports the transition and replays bit-exactly") {
    const fs::path out = fresh_dir("sweep");
    const std::string args =
        "sweep --s-min 0.53 --s-max 0.57 --s-points 81 --out " + out.string();
    REQUIRE(run_cli(args).exit_code == 0);

    const std::string csv1 = slurp_file(out / "sweep.csv");
    const std::string sum1 = slurp_file(out / "summary.json");
    const json summary = json::parse(sum1);
    CHECK(summary.at("results").at("transition").at("kind") == "first_order");
    const double s_first =
        summary.at("results").at("transition").at("s_first").get<double>();
    CHECK(s_first > 0.546);
    CHECK(s_first < 0.554);

    // identical invocation reproduces identical bytes
    REQUIRE(run_cli(args).exit_code == 0);
    CHECK(slurp_file(out / "sweep.csv") == csv1);
    CHECK(slurp_file(out / "summary.json") == sum1);

    // replaying from the emitted summary reproduces the same bytes too
    REQUIRE(run_cli("run --config " + (out / "summary.json").string())
                .exit_code == 0);
    CHECK(slurp_file(out / "sweep.csv") == csv1);
    CHECK(slurp_file(out / "summary.json") == sum1);
}

TEST_CASE("flags override config values") {
    const fs::path out = fresh_dir("override");
    const fs::path cfg_path =
        fs::temp_directory_path() / "bqa-cli-test" / "override-config.json";
    {
        json cfg;
        cfg["experiment"] = "second-order-curve";
        cfg["C"] = 2.0;
        cfg["theta_points"] = 5;
        cfg["out"] = out.string();
        std::ofstream f(cfg_path);
        f << cfg.dump();
    }
    REQUIRE(run_cli("run --config " + cfg_path.string() + " --theta-points 9")
                .exit_code == 0);
    const json summary = json::parse(slurp_file(out / "summary.json"));
    CHECK(summary.at("config").at("theta_points") == 9);
    CHECK(summary.at("config").at("C") == 2.0);

    std::ifstream csv(out / "second-order-curve.csv");
    int rows = -1;  // header
    for (std::string line; std::getline(csv, line);) ++rows;
    CHECK(rows == 9);
}

TEST_CASE("errors are machine readable") {
    SUBCASE("sweep with a rotated driver is a config error") {
        const RunResult r = run_cli("sweep --chi 1.0 --out " +
                                    fresh_dir("err1").string());
        CHECK(r.exit_code == 2);
        const json err = json::parse(r.err);
        CHECK(err.contains("error"));
        CHECK(err.at("error").at("code") == "config");
    }
    SUBCASE("bad parameter value") {
        const RunResult r = run_cli("sweep --p 1 --out " +
                                    fresh_dir("err2").string());
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.err).at("error").at("code") == "config");
    }
    SUBCASE("run without an experiment in the config") {
        const fs::path cfg =
            fs::temp_directory_path() / "bqa-cli-test" / "empty.json";
        std::ofstream(cfg) << "{}";
        const RunResult r = run_cli("run --config " + cfg.string());
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.err).at("error").at("code") == "config");
    }
    SUBCASE("unknown flag") {
        CHECK(run_cli("sweep --frobnicate 3").exit_code == 2);
    }
}

TEST_CASE("rotated sweep accepts chi and records the phases") {
    const fs::path out = fresh_dir("rot");
    REQUIRE(run_cli("rotated-sweep --C 5 --chi 1.5707963267948966 "
                    "--s-min 0.56 --s-max 0.58 --s-points 21 --out " +
                    out.string())
                .exit_code == 0);
    std::ifstream csv(out / "rotated-sweep.csv");
    std::string header, line, last;
    std::getline(csv, header);
    while (std::getline(csv, line)) last = line;
    // alpha_min and beta_min columns hold -pi/4 and pi/4 on the ordered side
    std::stringstream ss(last);
    std::string field;
    std::array<double, 7> vals{};
    for (double& v : vals) {
        std::getline(ss, field, ',');
        v = std::stod(field);
    }
    CHECK(vals[3] == doctest::Approx(-0.7853981633974483).epsilon(1e-6));
    CHECK(vals[4] == doctest::Approx(0.7853981633974483).epsilon(1e-6));
}
