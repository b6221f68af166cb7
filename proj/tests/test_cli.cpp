#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

// one scratch directory per test-process run
const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        const fs::path d =
            fs::temp_directory_path() / ("qcorr_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path write_fixture(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + QCORR_CLI_PATH + "\" " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) {
        r.code = WEXITSTATUS(status);
    }
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// value of a "key = number" line in a text report
double report_value(const std::string& text, const std::string& key) {
    const std::string needle = key + " = ";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    return std::strtod(text.c_str() + pos + needle.size(), nullptr);
}

std::string report_field(const std::string& text, const std::string& key) {
    const std::string needle = key + " = ";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    const auto start = pos + needle.size();
    const auto end = text.find('\n', start);
    return text.substr(start, end - start);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            fields.push_back(cell);
        }
        rows.push_back(fields);
    }
    return rows;
}

const char* kBellFixture = R"({"bell_diagonal": [0.3, 0.2, 0.1], "label": "generic"})";

// the equal-xy state at the physical boundary c = 1/2, written as a matrix
const char* kStarFixture = R"({
  "label": "flat optimum",
  "matrix": [
    [[0.25, 0], [0, 0],    [0, 0],    [0, 0]],
    [[0, 0],    [0.25, 0], [0.25, 0], [0, 0]],
    [[0, 0],    [0.25, 0], [0.25, 0], [0, 0]],
    [[0, 0],    [0, 0],    [0, 0],    [0.25, 0]]
  ]
})";

}  // namespace

TEST_CASE("analyze: text report carries the exact closed-form block") {
    const fs::path file = write_fixture("bell.json", kBellFixture);
    const RunResult r = run_cli("analyze " + file.string() + " --grid 400");
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());

    CHECK(report_field(r.out, "summary.tag") == "bell_diagonal");
    CHECK(report_field(r.out, "summary.ambiguous") == "no");
    CHECK(report_field(r.out, "input.label") == "generic");
    CHECK(report_value(r.out, "closed_form.q") == 0.2);
    CHECK(report_value(r.out, "closed_form.c") == 0.3);
    CHECK(std::abs(report_value(r.out, "closed_form.c_prime") -
                   2.0 * (std::sqrt(1.3) - 1.0)) <= 1e-15);
    CHECK(std::abs(report_value(r.out, "framework.independent_optimization.q") - 0.2) <=
          1e-8);
    CHECK(std::abs(report_value(r.out, "framework.independent_optimization.c") - 0.3) <=
          1e-8);
    CHECK(report_field(r.out, "framework.measurement_independent.available") == "yes");
    CHECK(report_field(r.out, "framework.measurement_independent.approximate") == "no");
}

TEST_CASE("analyze: identical invocations give byte-identical reports") {
    const fs::path file = write_fixture("bell2.json", kBellFixture);
    const RunResult first = run_cli("analyze " + file.string() + " --grid 400 --seed 5");
    const RunResult second = run_cli("analyze " + file.string() + " --grid 400 --seed 5");
    REQUIRE(first.code == 0);
    REQUIRE(second.code == 0);
    CHECK(first.out == second.out);

    // --out writes exactly what stdout would have carried
    const fs::path out_file = scratch_dir() / "report.txt";
    const RunResult to_file = run_cli("analyze " + file.string() +
                                      " --grid 400 --seed 5 --out " + out_file.string());
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(out_file) == first.out);
}

TEST_CASE("analyze: flat optimum is reported as ambiguous") {
    const fs::path file = write_fixture("star.json", kStarFixture);
    const RunResult r = run_cli("analyze " + file.string() + " --grid 400");
    REQUIRE(r.code == 0);
    CHECK(report_field(r.out, "summary.ambiguous") == "yes");
    CHECK(report_field(r.out, "input.kind") == "matrix");
    // the matrix is recognized as bell-diagonal with c = (0.5, 0.5, 0)
    CHECK(report_value(r.out, "detected.bell_vector.x") == 0.5);
    CHECK(report_value(r.out, "detected.bell_vector.y") == 0.5);
    CHECK(report_value(r.out, "ambiguity.c_spread") >= 0.5 - 1e-6);
}

TEST_CASE("analyze: JSON output parses and mirrors the text values") {
    const fs::path file = write_fixture("bell3.json", kBellFixture);
    const RunResult r = run_cli("analyze " + file.string() + " --grid 400 --json");
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["input"]["tag"] == "bell_diagonal");
    CHECK(j["closed_form"]["q"] == 0.2);
    CHECK(j["closed_form"]["c"] == 0.3);
    CHECK(j["ambiguity"]["is_ambiguous"] == false);
    REQUIRE(j["frameworks"].size() == 4);
    CHECK(j["frameworks"][3]["framework"] == "independent_optimization");
    CHECK(std::abs(j["frameworks"][3]["q"].get<double>() - 0.2) <= 1e-8);
    CHECK(std::abs(j["frameworks"][3]["c"].get<double>() - 0.3) <= 1e-8);
    CHECK(j["frameworks"][2]["framework"] == "measurement_independent");
    CHECK(j["frameworks"][2]["available"] == true);
}

TEST_CASE("scan: reports the degenerate set of the flat family") {
    const fs::path file = write_fixture("star2.json", kStarFixture);
    const RunResult r = run_cli("scan " + file.string() + " --grid 400");
    REQUIRE(r.code == 0);
    CHECK(report_value(r.out, "degeneracy.count") >= 1600);
    CHECK(report_field(r.out, "degeneracy.is_ambiguous") == "yes");

    const RunResult json_run = run_cli("scan " + file.string() + " --grid 400 --json");
    REQUIRE(json_run.code == 0);
    const nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j["degeneracy"]["is_ambiguous"] == true);
    CHECK(j["degeneracy"]["count"].get<int>() >= 1600);
}

TEST_CASE("sweep: profile of the flat family round-trips through 17 digits") {
    const RunResult r = run_cli("sweep --family rho-star --c 0.5:0.5:1 --nz 5");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 6);  // header + 5 samples
    REQUIRE(rows[0].size() == 6);
    CHECK(rows[0][0] == "c");
    CHECK(rows[0][1] == "n_z");
    CHECK(rows[0][2] == "Q_numeric");
    CHECK(rows[0][3] == "C_numeric");
    CHECK(rows[0][4] == "C_analytic");
    CHECK(rows[0][5] == "C_prime_analytic");

    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 6);
        const double c = std::strtod(rows[i][0].c_str(), nullptr);
        const double n_z = std::strtod(rows[i][1].c_str(), nullptr);
        const double c_numeric = std::strtod(rows[i][3].c_str(), nullptr);
        const double c_analytic = std::strtod(rows[i][4].c_str(), nullptr);
        CHECK(c == 0.5);
        CHECK(std::abs(c_analytic - c * std::sqrt(1.0 - n_z * n_z)) <= 1e-15);
        CHECK(std::abs(c_numeric - c_analytic) <= 1e-9);

        // every numeric field reparses to the exact double that was printed
        for (const std::string& cell : rows[i]) {
            const double value = std::strtod(cell.c_str(), nullptr);
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.17g", value);
            CHECK(cell == buffer);
        }
    }

    // middle sample: the equator, where the classical correlation peaks
    CHECK(std::strtod(rows[3][1].c_str(), nullptr) == 0.0);
    CHECK(std::abs(std::strtod(rows[3][3].c_str(), nullptr) - 0.5) <= 1e-12);
    // poles carry nothing
    CHECK(std::abs(std::strtod(rows[1][3].c_str(), nullptr)) <= 1e-12);
}

TEST_CASE("sweep: single-axis family along y") {
    const RunResult r =
        run_cli("sweep --family custom-axis --axis y --c 0.8:0.8:1 --nz 3");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(std::abs(std::strtod(rows[2][4].c_str(), nullptr) - 0.8) <= 1e-15);
}

TEST_CASE("verify: closed form and optimizer agree on random states") {
    const RunResult r = run_cli("verify --n 4 --seed 7 --grid 400");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("4 states checked") != std::string::npos);
    CHECK(r.out.find("-> PASS") != std::string::npos);
}

TEST_CASE("exit codes distinguish input, physicality and usage failures") {
    CHECK(run_cli("analyze " + (scratch_dir() / "missing.json").string()).code == 2);

    const fs::path bad = write_fixture("bad.json", "{ nope");
    CHECK(run_cli("analyze " + bad.string()).code == 2);

    const fs::path unknown =
        write_fixture("unknown.json", R"({"bell_diagonal": [0, 0, 0], "extra": 1})");
    CHECK(run_cli("analyze " + unknown.string()).code == 2);

    const fs::path both = write_fixture(
        "both.json", R"({"bell_diagonal": [0, 0, 0], "matrix": [], "label": "x"})");
    CHECK(run_cli("analyze " + both.string()).code == 2);

    const fs::path unphysical =
        write_fixture("unphysical.json", R"({"bell_diagonal": [1, 1, 1]})");
    const RunResult up = run_cli("analyze " + unphysical.string());
    CHECK(up.code == 3);
    CHECK(up.err.find("error:") != std::string::npos);

    const fs::path skew = write_fixture("skew.json", R"({
      "matrix": [
        [[0.25, 0], [0, 0.1], [0, 0], [0, 0]],
        [[0, 0.1],  [0.25, 0], [0, 0], [0, 0]],
        [[0, 0],    [0, 0],   [0.25, 0], [0, 0]],
        [[0, 0],    [0, 0],   [0, 0], [0.25, 0]]
      ]
    })");
    CHECK(run_cli("analyze " + skew.string()).code == 3);

    CHECK(run_cli("sweep --family rho-star --c 0.7:0.3:5").code == 2);
    CHECK(run_cli("sweep --family bogus").code == 2);
    CHECK(run_cli("sweep --family custom-axis --axis z").code == 2);
    CHECK(run_cli("sweep --family rho-star --nz 1").code == 2);
    CHECK(run_cli("").code == 2);        // a subcommand is required
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("--version").code == 0);
}
