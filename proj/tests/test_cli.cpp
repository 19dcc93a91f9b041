// Copyright 2025 The cvdvsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CVDV_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    r.status = pclose(p);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("estimate prints the worked example") {
    auto r = run_cli("estimate --gamma 10 --eps 1e-6");
    CHECK(r.status == 0);
    CHECK(r.out == "n=6\n");
}

TEST_CASE("simulate is byte-identical for a fixed seed") {
    const std::string prog = write_temp(
        "cvdv_cli_sim.cv", "mode m=1 n=5\nqubit a=1\nseed 7\nD 0 0.5+0.25i\nMEAS homodyne 0 q\n");
    auto r1 = run_cli("simulate " + prog + " --shots 25");
    auto r2 = run_cli("simulate " + prog + " --shots 25");
    CHECK(r1.status == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("\"protocol\":\"homodyne\"") != std::string::npos);
    auto r3 = run_cli("simulate " + prog + " --shots 25 --seed 8");
    CHECK(r3.out != r1.out);
}

TEST_CASE("compile reports the conditional-displacement CNOT budget") {
    const std::string prog =
        write_temp("cvdv_cli_cd.cv", "mode m=1 n=7\nqubit a=1\nCD q0 m0 0.3-0.2i\n");
    auto r = run_cli("compile " + prog);
    CHECK(r.status == 0);
    // cz-leg form: 2n^2 + 2n = 112 CNOTs at n=7 after expansion
    CHECK(r.out.find("\"cnot\": 112") != std::string::npos);
    auto rs = run_cli("compile " + prog + " --cd-form sandwich");
    CHECK(rs.out.find("\"cnot\": 98") != std::string::npos); // 2n^2 = 98
    auto rt = run_cli("compile " + prog + " --format text");
    CHECK(rt.status == 0);
    CHECK(rt.out.find("QFT 0") != std::string::npos);
    CHECK(rt.out.find("GLOBALPHASE") != std::string::npos);
}

TEST_CASE("compile --expand leaves no markers") {
    const std::string prog = write_temp("cvdv_cli_rot.cv", "mode m=1 n=4\nR 0 0.7\n");
    auto r = run_cli("compile " + prog + " --expand --format text");
    CHECK(r.status == 0);
    CHECK(r.out.find("QFT") == std::string::npos);
    CHECK(r.out.find("DIAG 0 ") != std::string::npos);
}

TEST_CASE("parse errors exit with a user diagnostic") {
    const std::string prog = write_temp("cvdv_cli_bad.cv", "mode m=2 n=4\nBS 0 0 1.0\n");
    auto r = run_cli("simulate " + prog);
    CHECK(r.status != 0);
    CHECK(r.out.find("line 2") != std::string::npos);
}

TEST_CASE("qft-error then fit-lemma1 pipeline") {
    auto r = run_cli("qft-error --n 5..6 --kmax 50 --out /tmp/cvdv_qft.csv");
    CHECK(r.status == 0);
    std::ifstream in("/tmp/cvdv_qft.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,k,epsilon");
    auto f = run_cli("fit-lemma1 --in /tmp/cvdv_qft.csv");
    CHECK(f.status == 0);
    CHECK(f.out.find("\"c1\"") != std::string::npos);
    auto f2 = run_cli("fit-lemma1 --in /tmp/cvdv_qft.csv --method ols");
    CHECK(f2.status == 0);
}

TEST_CASE("advantage csv") {
    auto r = run_cli("advantage --nmax 7 --eps 1e-4");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("n,gamma_cutoff,tau_ratio\n", 0) == 0);
    CHECK(r.out.find("\n7,") != std::string::npos);
    CHECK(r.out.find(",112") != std::string::npos);
}

TEST_CASE("gate-error csv schema") {
    auto r = run_cli("gate-error --gate R --param 0.785398 --n 5 --kmax 3");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("gate,n,k,epsilon\n", 0) == 0);
}

TEST_CASE("unknown flags are user errors") {
    auto r = run_cli("estimate --gamma 10 --eps 1e-6 --wibble 3");
    CHECK(r.status != 0);
}
