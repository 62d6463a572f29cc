/*
 * Copyright (C) 2026 rumorctl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "rumorctl/cli.hpp"

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / fs::path("rumorctl-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::vector<std::string>& args, std::string* diag_out = nullptr)
{
    std::ostringstream diag;
    const int code = rumorctl::run_command(args, diag);
    if (diag_out) {
        *diag_out = diag.str();
    }
    return code;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(f);
        }
        rows.push_back(fields);
    }
    return rows;
}

} // namespace

TEST_CASE("solve writes a valid trajectory and reports the summary")
{
    TempDir dir;
    const std::string out = dir.file("solve.csv");
    std::string diag;
    const int code =
        run({"solve", "--set", "beta=1.2", "--set", "n_steps=500", "--out", out}, &diag);
    REQUIRE(code == 0);
    CHECK(diag.find("solve: J=0.070") != std::string::npos);
    const std::size_t spend_pos = diag.find("spend=");
    REQUIRE(spend_pos != std::string::npos);
    const double spend = std::stod(diag.substr(spend_pos + 6));
    CHECK(std::abs(spend - 0.00225) < 1e-4);

    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 502); // header + 501 nodes
    CHECK(rows[0] == std::vector<std::string>{"t", "i", "s", "r", "u", "b", "lambda_i",
                                              "lambda_s"});

    // re-read and validate the trajectory invariants row by row
    double prev_b = -1.0;
    for (std::size_t j = 1; j < rows.size(); ++j) {
        REQUIRE(rows[j].size() == 8);
        const double i = std::stod(rows[j][1]);
        const double s = std::stod(rows[j][2]);
        const double r = std::stod(rows[j][3]);
        const double b = std::stod(rows[j][5]);
        CHECK(i >= 0.0);
        CHECK(i <= 1.0);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        CHECK(i + s <= 1.0 + 1e-9);
        CHECK(std::abs(1.0 - i - s - r) < 1e-11);
        CHECK(b >= prev_b);
        prev_b = b;
    }
    CHECK(std::stod(rows[1][5]) == 0.0);
}

TEST_CASE("identical command and config give byte-identical output")
{
    TempDir dir;
    const std::string a = dir.file("a.csv");
    const std::string b = dir.file("b.csv");
    REQUIRE(run({"solve", "--set", "beta=1.2", "--set", "n_steps=400", "--out", a}) == 0);
    REQUIRE(run({"solve", "--set", "beta=1.2", "--set", "n_steps=400", "--out", b}) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("config file and --set interplay")
{
    TempDir dir;
    const std::string cfg = dir.file("scenario.cfg");
    {
        std::ofstream out(cfg);
        out << "# strong epidemic\nbeta = 1.2\nn_steps = 400\n";
    }
    const std::string out = dir.file("solve.csv");
    std::string diag;
    REQUIRE(run({"solve", "--config", cfg, "--set", "beta=0.2", "--out", out}, &diag) == 0);
    // the override wins: mild-epidemic cost, not 0.07
    CHECK(diag.find("J=0.8") != std::string::npos);
}

TEST_CASE("simulate replays a solved control")
{
    TempDir dir;
    const std::string solved = dir.file("solve.csv");
    std::string solve_diag;
    REQUIRE(run({"solve", "--set", "beta=1.2", "--set", "n_steps=500", "--out", solved},
                &solve_diag) == 0);

    const std::string replay = dir.file("replay.csv");
    std::string diag;
    REQUIRE(run({"simulate", "--set", "beta=1.2", "--set", "n_steps=500", "--control", solved,
                 "--out", replay},
                &diag) == 0);

    const auto a = parse_csv(slurp(solved));
    const auto b = parse_csv(slurp(replay));
    REQUIRE(a.size() == b.size());
    // same control (up to 12-digit serialization), so the same terminal state
    const double Ja = std::stod(a.back()[1]);
    const double Jb = std::stod(b.back()[1]);
    CHECK(std::abs(Ja - Jb) < 1e-9);
}

TEST_CASE("baseline with a zero budget matches no control")
{
    TempDir dir;
    const std::string out = dir.file("baseline.csv");
    REQUIRE(run({"baseline", "--set", "B=0", "--out", out}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"strategy", "J", "spend"});
    CHECK(rows[1][0] == "no_control");
    CHECK(rows[2][0] == "static");
    CHECK(rows[1][1] == rows[2][1]); // identical terminal cost, digit for digit
}

TEST_CASE("sweep emits one row per value")
{
    TempDir dir;
    const std::string out = dir.file("sweep.csv");
    std::string diag;
    REQUIRE(run({"sweep", "--set", "sweep_param=gamma", "--set", "sweep_values=0.1,1,6", "--set",
                 "n_steps=300", "--out", out},
                &diag) == 0);
    CHECK(diag.find("3 rows, 0 failed") != std::string::npos);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0][0] == "param_value");
    CHECK(std::stod(rows[1][1]) <= std::stod(rows[2][1]));
    CHECK(std::stod(rows[2][1]) <= std::stod(rows[3][1]));
}

TEST_CASE("oracle report: one segment reproduces the static baseline")
{
    TempDir dir;
    const std::string out = dir.file("oracle.csv");
    std::string diag;
    REQUIRE(run({"oracle", "--set", "beta=1.2", "--set", "n_segments=1", "--set",
                 "n_steps=400", "--out", out},
                &diag) == 0);
    const auto rows = parse_csv(slurp(out));
    std::string j_oracle, j_static;
    for (const auto& row : rows) {
        if (row[0] == "J_oracle") {
            j_oracle = row[1];
        }
        if (row[0] == "J_static") {
            j_static = row[1];
        }
    }
    CHECK(j_oracle == j_static);
}

TEST_CASE("exit codes")
{
    TempDir dir;
    std::string diag;

    SUBCASE("validation error is 1 and names the key")
    {
        CHECK(run({"solve", "--set", "gamma=-1", "--out", dir.file("x.csv")}, &diag) == 1);
        CHECK(diag.find("gamma") != std::string::npos);
    }
    SUBCASE("unknown key is 1")
    {
        CHECK(run({"solve", "--set", "velocity=3", "--out", dir.file("x.csv")}, &diag) == 1);
    }
    SUBCASE("missing config file is 1")
    {
        CHECK(run({"solve", "--config", dir.file("nope.cfg"), "--out", dir.file("x.csv")},
                  &diag) == 1);
    }
    SUBCASE("solver failure is 2")
    {
        // bracket excludes the multiplier: bisection cannot meet the budget
        CHECK(run({"solve", "--set", "lambda_high=0.5", "--set", "n_steps=100", "--set",
                   "N_sweep=5", "--out", dir.file("x.csv")},
                  &diag) == 2);
        CHECK(diag.find("bisection bracket invalid") != std::string::npos);
    }
    SUBCASE("control file violating the cap is 1")
    {
        const std::string ctrl = dir.file("hot.csv");
        {
            std::ofstream out(ctrl);
            out << "t,u\n0,0.05\n5,0.2\n"; // 0.2 > u_max = 0.06
        }
        CHECK(run({"simulate", "--control", ctrl, "--out", dir.file("x.csv")}, &diag) == 1);
        CHECK(diag.find("u_max") != std::string::npos);
    }
    SUBCASE("unknown subcommand is 1")
    {
        CHECK(run({"optimize"}, &diag) == 1);
    }
    SUBCASE("sweep without a sweep_param is 1")
    {
        CHECK(run({"sweep", "--out", dir.file("x.csv")}, &diag) == 1);
    }
}

TEST_SUITE_END();
