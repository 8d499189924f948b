// Copyright 2026 The regbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string("cd ") + REGBOUND_SOURCE_DIR + " && " + REGBOUND_CLI + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::string& rel) {
    std::ifstream in(std::string(REGBOUND_SOURCE_DIR) + "/" + rel);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("reg and betti") {
    auto r = run("reg tests/fixtures/cyclic2.pres");
    CHECK(r.status == 0);
    CHECK(r.out == "reg = 1\n");
    r = run("betti tests/fixtures/cyclic3.pres");
    CHECK(r.status == 0);
    CHECK(r.out.find("    0:      1") != std::string::npos);
    r = run("hilbert tests/fixtures/linear3.pres");
    CHECK(r.status == 0);
}

TEST_CASE("bounds json") {
    auto r = run("bounds tests/fixtures/cyclic3.pres --json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"thm35\": 6") != std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"]["ex36.small_p"] == 4);
}

TEST_CASE("input errors exit 1") {
    auto r = run("reg tests/fixtures/nonprime.pres");
    CHECK(r.status == 1);
    CHECK(r.out.find("NonPrime") != std::string::npos);
    r = run("reg tests/fixtures/nonhomogeneous.pres");
    CHECK(r.status == 1);
    CHECK(r.out.find("line") != std::string::npos);
    r = run("reg tests/fixtures/missing.pres");
    CHECK(r.status == 1);
    r = run("nosuchcommand");
    CHECK(r.status != 0);
}

TEST_CASE("failed gating verdict exits 2") {
    auto r = run("audit tests/fixtures/principal2.pres");
    CHECK(r.status == 2);
    CHECK(r.out.find("thm21.fitt") != std::string::npos);
    CHECK(run("audit tests/fixtures/free.pres").status == 0);
}

TEST_CASE("random audit csv") {
    auto r = run("random --seed 7 --trials 50 --audit --csv");
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 51);
    auto header = split(rows[0]);
    CHECK(header.front() == "instance");
    CHECK(header.back() == "sound");
    bool any_fail = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto f = split(rows[i]);
        REQUIRE(f.size() == header.size());
        for (std::size_t k = 0; k + 1 < f.size(); ++k) {
            if (f[k] != "fail") continue;
            any_fail = true;
            CHECK_MESSAGE(header[k].rfind("thm21", 0) == 0, header[k]);
        }
    }
    CHECK(r.status == (any_fail ? 2 : 0));
    CHECK(run("random --seed 7 --trials 50 --audit --csv").out == r.out);
}

TEST_CASE("golden reports") {
    const std::array<std::pair<const char*, const char*>, 4> cases{{
        {"audit tests/fixtures/cyclic2.pres --json", "tests/golden/cyclic2.audit.json"},
        {"audit tests/fixtures/cyclic3.pres --json", "tests/golden/cyclic3.audit.json"},
        {"audit tests/fixtures/quotient.pres --json", "tests/golden/quotient.audit.json"},
        {"random --seed 7 --trials 5 --audit --json", "tests/golden/random7.json"},
    }};
    for (const auto& [args, file] : cases) {
        CAPTURE(args);
        CHECK(run(args).out == slurp(file));
    }
}

TEST_CASE("module constructions") {
    auto r = run("mayr-meyer --level 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("generators 6") != std::string::npos);
    r = run("sym tests/fixtures/cyclic2.pres --l 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("rels") != std::string::npos);
    CHECK(run("fitt tests/fixtures/cyclic2.pres").status == 0);
    CHECK(run("complex tests/fixtures/cyclic2.pres --l 2").status == 0);
    CHECK(run("lemma31 tests/fixtures/cyclic2.pres").status == 0);
    CHECK(run("tower tests/fixtures/cyclic3.pres").status == 0);
}
