// Copyright 2026 The entdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "entdist/io.hpp"
#include "test_util.hpp"

using namespace entdist;
using json = nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "entdist_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            lines.push_back(line);
        }
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        cells.push_back(cell);
    }
    return cells;
}

} // namespace

TEST_CASE("state parsing") {
    const PureState s = io::parse_state(
        R"({"schema_version": 1, "qubits": 1, "amplitudes": [[0.6, 0], [0, 0.8]]})", "inline");
    CHECK(std::abs(s[1] - cplx(0, 0.8)) < 1e-15);

    // Within 1e-6 of unit norm: renormalized.
    const PureState r = io::parse_state(R"({"qubits": 1, "amplitudes": [[1.0000004, 0], [0, 0]]})", "x");
    CHECK(std::abs(r[0] - 1.0) < 1e-15);

    CHECK_THROWS_AS((void)io::parse_state(R"({"qubits": 1, "amplitudes": [[1, 0], [1, 0]]})", "x"), Error);
    CHECK_THROWS_AS((void)io::parse_state(R"({"qubits": 2, "amplitudes": [[1, 0], [0, 0]]})", "x"), Error);
    CHECK_THROWS_AS((void)io::parse_state(R"({"schema_version": 9, "qubits": 1, "amplitudes": [[1, 0], [0, 0]]})", "x"),
                    Error);

    try {
        (void)io::parse_state("{\n  \"qubits\": 1,\n  \"amplitudes\": [[1, 0], [0 0]]\n}", "bad.json");
        FAIL("expected a parse error");
    } catch (const Error &e) {
        const std::string what = e.what();
        CHECK(what.find("bad.json") != std::string::npos);
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("column") != std::string::npos);
    }
    try {
        (void)io::parse_state(R"({"qubits": 1, "amplitudes": [[1, 0], [0]]})", "f");
        FAIL("expected a field error");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("amplitudes[1]") != std::string::npos);
    }
}

TEST_CASE("state json round trip") {
    Rng rng = make_rng(90);
    const PureState s = random_state(3, rng);
    const PureState back = io::parse_state(io::state_to_json(s), "roundtrip");
    for (std::size_t k = 0; k < s.dim(); ++k) {
        CHECK(s[k] == back[k]);
    }
    const json j = json::parse(io::state_to_json(s));
    CHECK(j["schema_version"] == 1);
    CHECK(j["qubits"] == 3);
}

TEST_CASE("density parsing") {
    const DensityMatrix bare = io::parse_density("[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]", "bare");
    CHECK(std::abs(bare.purity() - 0.5) < 1e-15);
    const DensityMatrix wrapped = io::parse_density(io::density_to_json(bare), "wrapped");
    CHECK((wrapped.matrix() - bare.matrix()).cwiseAbs().maxCoeff() == 0.0);
    // Slightly non-Hermitian and off-trace input is repaired.
    const DensityMatrix fixed = io::parse_density("[[[0.5000001,0],[1e-7,0]],[[0,0],[0.5,0]]]", "near");
    CHECK(std::abs(fixed.matrix().trace() - 1.0) < 1e-15);
    CHECK((fixed.matrix() - fixed.matrix().adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS((void)io::parse_density("[[[0.9,0],[0,0]],[[0,0],[0.5,0]]]", "trace"), Error);
    CHECK_THROWS_AS((void)io::parse_density("[[[0.5,0],[0.3,0]],[[0,0],[0.5,0]]]", "herm"), Error);
    CHECK_THROWS_AS((void)io::parse_density("[[[1,0],[0,0],[0,0]]]", "shape"), Error);
}

TEST_CASE("number formatting keeps 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(io::format_double(kPi)) == kPi);
}

TEST_CASE("angles and family specs") {
    CHECK(std::abs(cli::parse_angle("pi/4") - kPi / 4) < 1e-15);
    CHECK(std::abs(cli::parse_angle("2*pi/3") - 2 * kPi / 3) < 1e-15);
    CHECK(std::abs(cli::parse_angle("-pi") + kPi) < 1e-15);
    CHECK(cli::parse_angle("0.25") == 0.25);
    CHECK_THROWS_AS((void)cli::parse_angle("tau"), Error);
    const FamilySpec f = cli::parse_family_spec("w:3:0.9,pi/4");
    CHECK(f.kind == FamilyKind::W);
    CHECK(f.num_qubits == 3);
    CHECK(f.params.size() == 2u);
    CHECK_THROWS_AS((void)cli::parse_family_spec("ghzl:x:0.1"), Error);
}

TEST_CASE("cli ed") {
    const Run r = run({"ed", "--spec", "ghzl:4:pi/4"});
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(std::abs(j["E_over_M"].get<double>() - 1.0) < 1e-10);
    CHECK(j["E_mu"].size() == 4u);

    const Run csv = run({"ed", "--spec", "brs:3:pi/2", "--format", "csv"});
    REQUIRE(csv.code == cli::kExitOk);
    const auto lines = split_lines(csv.out);
    REQUIRE(lines.size() == 4u);
    CHECK(lines[0].rfind("qubit,e_mu", 0) == 0);

    CHECK(run({"ed", "--spec", "ghzl:4:9"}).code == cli::kExitValidation);
    CHECK(run({"ed"}).code == cli::kExitValidation);
    CHECK(run({"frobnicate"}).code == cli::kExitValidation);
}

TEST_CASE("cli export and reload") {
    const auto dir = scratch_dir();
    const std::string state = (dir / "w3.json").string();
    REQUIRE(run({"family", "--spec", "w:3:0.9553166181245093,pi/4", "--export", state}).code ==
            cli::kExitOk);
    const Run r = run({"ed", "--state", state});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(std::abs(json::parse(r.out)["E_over_M"].get<double>() - 8.0 / 9.0) < 1e-10);

    io::write_file((dir / "broken.json").string(), "{\"qubits\": 1,\n \"amplitudes\": [[1, 0],, [0, 0]]}");
    const Run bad = run({"ed", "--state", (dir / "broken.json").string()});
    CHECK(bad.code == cli::kExitValidation);
    CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("cli family sweep csv") {
    const Run r = run({"family", "--family", "brs", "--M", "3", "--sweep", "5", "--format", "csv"});
    REQUIRE(r.code == cli::kExitOk);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 6u);
    const auto header = split_csv(lines[0]);
    CHECK(header[1] == "E_total");
    const auto row = split_csv(lines[2]);
    // 17 significant digits: the mantissa holds 17 digits unless the
    // value is exactly representable with fewer.
    const double e_total = std::stod(row[1]);
    CHECK(io::format_double(e_total) == row[1]);
}

TEST_CASE("cli fig5") {
    const Run r = run({"fig5", "--resolution", "101", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["max_e_over_3"].get<double>() - 8.0 / 9.0) < 1e-3);
    const Run csv = run({"fig5", "--resolution", "11"});
    REQUIRE(csv.code == cli::kExitOk);
    CHECK(split_lines(csv.out).size() == 1u + 121u);
}

TEST_CASE("cli proptest exit codes") {
    const Run ok = run({"proptest", "--suite", "monotonicity", "--trials", "50", "--seed", "4"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(json::parse(ok.out)["violations"] == 0);
    CHECK(run({"proptest", "--suite", "nonsense"}).code == cli::kExitValidation);
}

TEST_CASE("cli equiv, roof and cv") {
    const Run e = run({"equiv", "--a", "ghzl:2:pi/4", "--b", "brs:2:pi", "--restarts", "2"});
    REQUIRE(e.code == cli::kExitOk);
    CHECK(json::parse(e.out)["status"] == "MATCH_ALL_WITNESSES");

    const auto dir = scratch_dir();
    const std::string rho = (dir / "rho.json").string();
    io::write_file(rho, "[[[0.5,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],"
                        "[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0.5,0]]]");
    const Run r = run({"roof", "--rho", rho, "--restarts", "8"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(json::parse(r.out)["total"].get<double>() < 1e-6);

    const Run c = run({"cv", "--alpha1", "1,0", "--alpha2", "-1,0"});
    REQUIRE(c.code == cli::kExitOk);
    const json cj = json::parse(c.out);
    CHECK(std::abs(cj["ed"].get<double>() - cj["closed_form"].get<double>()) < 1e-7);
    CHECK(run({"cv", "--alpha1", "9,0", "--alpha2", "0,0", "--cutoff", "10"}).code ==
          cli::kExitValidation);
}

TEST_CASE("cli output files are deterministic") {
    const auto dir = scratch_dir();
    const std::string a = (dir / "a.json").string();
    const std::string b = (dir / "b.json").string();
    REQUIRE(run({"equiv", "--a", "ghzl:3:pi/4", "--b", "brs:3:pi", "--restarts", "2", "-o", a}).code ==
            cli::kExitOk);
    REQUIRE(run({"equiv", "--a", "ghzl:3:pi/4", "--b", "brs:3:pi", "--restarts", "2", "-o", b}).code ==
            cli::kExitOk);
    CHECK(io::read_file(a) == io::read_file(b));
}
