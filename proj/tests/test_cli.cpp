#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const char* base = std::getenv("NFX_TEST_TMP");
    fs::path dir = fs::path(base ? base : "cli_tmp") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = std::string(NFX_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::vector<double>> numeric_rows(const std::vector<std::string>& ls) {
    std::vector<std::vector<double>> out;
    for (size_t i = 2; i < ls.size(); ++i) {
        std::vector<double> row;
        std::stringstream ss(ls[i]);
        for (std::string cell; std::getline(ss, cell, ',');) row.push_back(std::stod(cell));
        out.push_back(row);
    }
    return out;
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("spectrum --figure 3") == 2);
    CHECK(run("--format xml weights") == 2);
    const fs::path dir = scratch("usage");
    CHECK(run("--out " + dir.string() + " spectrum --omega-span -1") == 2);
    CHECK(run("--out " + dir.string() + " dispersion --k-min 1e-3 --k-max 1e-4 --n-points 5") == 2);
    std::ofstream(dir / "bad.json") << R"({"mystery": 1})";
    CHECK(run("--config " + (dir / "bad.json").string() + " --out " + dir.string() + " weights") == 2);
    CHECK(run("--out " + dir.string() + " validate --n 3") == 2);
}

TEST_CASE("validate passes on defaults and fails with a perturbed constant") {
    const fs::path dir = scratch("validate");
    CHECK(run("--out " + dir.string() + " validate --n 16,32") == 0);
    const auto doc = nlohmann::json::parse(std::ifstream(dir / "validation.json"));
    CHECK(doc["report"]["passed"].get<bool>());
    CHECK(doc["manifest"]["command"] == "validate");
    CHECK(run("--out " + dir.string() + " validate --hbar-c-scale 1.05") == 1);
}

TEST_CASE("dispersion output carries a manifest and round-trips") {
    const fs::path dir = scratch("dispersion");
    REQUIRE(run("--out " + dir.string() + " dispersion --n-points 21 --theta 0,90") == 0);
    const auto ls = lines(dir / "dispersion_theta90.csv");
    REQUIRE(ls.size() == 23);
    CHECK(ls[0].rfind("# {", 0) == 0);
    const auto manifest = nlohmann::json::parse(ls[0].substr(2));
    CHECK(manifest["command"] == "dispersion");
    CHECK(manifest["params"]["theta_deg"] == 90);
    CHECK(manifest.contains("timestamp"));
    CHECK(ls[1] == "k,E_ph,E_ex_s,E_ex_a,E_pol_plus,E_pol_minus");
    CHECK(fs::exists(dir / "dispersion_theta0.csv"));
    CHECK(fs::exists(dir / "dispersion_theta90.plot.py"));
    for (const auto& row : numeric_rows(ls)) {
        // Trace identity column-wise.
        CHECK(row[4] + row[5] == doctest::Approx(row[1] + row[2]).epsilon(1e-12));
    }
    // Re-parsing the 17-digit text reproduces the exact doubles.
    const auto rows = numeric_rows(ls);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", rows[3][2]);
    CHECK(std::stod(buf) == rows[3][2]);
}

TEST_CASE("single-point dispersion") {
    const fs::path dir = scratch("single");
    REQUIRE(run("--out " + dir.string() + " dispersion --n-points 1 --k-min 1e-4") == 0);
    CHECK(lines(dir / "dispersion_theta90.csv").size() == 3);
}

TEST_CASE("weights satisfy the sum rules") {
    const fs::path dir = scratch("weights");
    REQUIRE(run("--out " + dir.string() + " --threads 4 weights --n-points 51") == 0);
    const auto ls = lines(dir / "weights.csv");
    CHECK(ls[1] == "k,X2_minus,Y2_minus,X2_plus,Y2_plus");
    for (const auto& r : numeric_rows(ls)) {
        CHECK(r[1] + r[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r[3] + r[4] == doctest::Approx(1.0).epsilon(1e-12));
        for (int j = 1; j <= 4; ++j) {
            CHECK(r[j] >= 0);
            CHECK(r[j] <= 1);
        }
    }
}

TEST_CASE("identical inputs give byte-identical bodies across thread counts") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(run("--out " + a.string() + " --threads 1 dispersion --n-points 41") == 0);
    REQUIRE(run("--out " + b.string() + " --threads 3 dispersion --n-points 41") == 0);
    auto la = lines(a / "dispersion_theta90.csv"), lb = lines(b / "dispersion_theta90.csv");
    la.erase(la.begin());
    lb.erase(lb.begin());
    CHECK(la == lb);
}

TEST_CASE("figure presets") {
    const fs::path dir = scratch("figures");
    REQUIRE(run("--out " + dir.string() + " spectrum --figure 4") == 0);
    const auto peaks4 = nlohmann::json::parse(std::ifstream(dir / "spectrum_fig4_peaks.json"));
    CHECK(peaks4["peaks"].size() == 2);
    CHECK(peaks4["bands"] == 2);
    const auto ls = lines(dir / "spectrum_fig4.csv");
    CHECK(ls[1] == "omega,R,T,A,omega_rad_s");

    REQUIRE(run("--out " + dir.string() + " spectrum --figure 5") == 0);
    const auto peaks5 = nlohmann::json::parse(std::ifstream(dir / "spectrum_fig5_peaks.json"));
    CHECK(peaks5["bands"] == 1);
    CHECK(peaks5["dips"].size() >= 1);

    REQUIRE(run("--out " + dir.string() + " spectrum --figure 9") == 0);
    const auto peaks9 = nlohmann::json::parse(std::ifstream(dir / "spectrum_fig9_peaks.json"));
    REQUIRE(peaks9["peaks"].size() == 1);
    CHECK(peaks9["peaks"][0]["branch"] == "lower");
    CHECK(peaks9["peaks"][0]["T"].get<double>() < 1e-3);
}

TEST_CASE("json format and config sweeps") {
    const fs::path dir = scratch("json");
    std::ofstream(dir / "cfg.json") << R"({"u_b": 0.05})";
    REQUIRE(run("--config " + (dir / "cfg.json").string() + " --out " + dir.string()
                + " --format json sweep --key d_over_a --from 5 --to 20 --n-points 4") == 0);
    const auto doc = nlohmann::json::parse(std::ifstream(dir / "sweep_d_over_a.json"));
    CHECK(doc["manifest"]["params"]["u_b"] == 0.05);
    CHECK(doc["columns"][0] == "d_over_a");
    CHECK(doc["rows"].size() == 4);
    CHECK(doc["rows"][3][0] == 20.0);
    CHECK(run("--out " + dir.string() + " sweep --key nope --from 1 --to 2") == 2);
}
