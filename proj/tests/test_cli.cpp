// Copyright 2026 The ticodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ticodes/app.hpp"

namespace ticodes {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = std::string(TICODES_DATA_DIR) + "/fixtures";

struct Run {
    int code;
    std::string out;
    std::string err;

    Json json() const {
        return Json::parse(out);
    }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ticodes");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return Run{code, out.str(), err.str()};
}

std::string fixture(const std::string &name) {
    return kFixtures + "/" + name + ".code";
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ticodes-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        setenv("TICODES_CACHE_DIR", (dir_ / "cache").c_str(), 1);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string write(const std::string &name, const std::string &text) {
        auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    fs::path dir_;
};

TEST_F(CliTest, CheckReportsDecomposable) {
    auto r = run({"--json", "check", fixture("decomposable")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_EQ(j["result"]["verdict"], "decomposable");
    EXPECT_TRUE(j["result"]["lattice_index"].is_null());
    EXPECT_EQ(j["result"]["finite"]["lattice_index"], 2);
    EXPECT_EQ(j["result"]["finite"]["tanner_components"], 2);
    auto human = run({"check", fixture("decomposable")});
    EXPECT_NE(human.out.find("verdict: decomposable"), std::string::npos);
}

TEST_F(CliTest, LiftEmitsExampleSubstitution) {
    auto r = run({"--json", "lift", fixture("three_variable")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto res = r.json()["result"];
    EXPECT_EQ(res["substitution"]["a1"], "x*y");
    EXPECT_EQ(res["substitution"]["a2"], "x^2*y");
    EXPECT_EQ(res["substitution"]["b1"], "x*z");
    EXPECT_EQ(res["twists"], Json({"a3 = a1^6*a2^-3", "b2 = a1^2*a2^-2*b1^2"}));
    EXPECT_TRUE(res["round_trip"].get<bool>());
}

TEST_F(CliTest, CompactifyReplaysLiftSection) {
    auto r = run({"--json", "compactify", fixture("three_variable")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.json()["result"]["matches_listed"].get<bool>());
    auto lit = run({"--json", "compactify", fixture("gross")});
    EXPECT_FALSE(lit.json()["result"]["matches_listed"].get<bool>());
    auto fixed = run({"--json", "compactify", "--erratum", fixture("gross")});
    EXPECT_TRUE(fixed.json()["result"]["matches_listed"].get<bool>());
    EXPECT_EQ(run({"compactify", "--erratum", fixture("three_variable")}).code, 1);
}

TEST_F(CliTest, DistanceOnSmallToric) {
    auto spec = write("toric2.code", "[code]\nname = toric2\nvariables = x, y\nf = 1 + x\ng = 1 + y\n"
                                     "[boundary]\ntorus = 2, 2\n");
    auto r = run({"--json", "distance", "--exact-cap", "20", spec});
    ASSERT_EQ(r.code, 0) << r.err;
    auto res = r.json()["result"];
    EXPECT_EQ(res["d_upper"], 2);
    EXPECT_EQ(res["d_lower"], 2);
    EXPECT_EQ(res["method"], "exact-enumeration");
}

TEST_F(CliTest, RandomDistanceCarriesSeedAndTrials) {
    auto a = run({"--json", "--no-cache", "--seed", "7", "distance", "--method", "random", "--trials", "50",
                  fixture("toric")});
    ASSERT_EQ(a.code, 0) << a.err;
    auto res = a.json()["result"];
    EXPECT_EQ(res["seed"], 7);
    EXPECT_EQ(res["trials"], 50);
    EXPECT_EQ(res["d_upper"], 4);
    auto b = run({"--json", "--no-cache", "--seed", "7", "--threads", "3", "distance", "--method", "random",
                  "--trials", "50", fixture("toric")});
    EXPECT_EQ(b.json()["result"], res);
}

TEST_F(CliTest, ReportsAreDeterministicAndCached) {
    auto first = run({"--json", "params", fixture("gross")});
    auto second = run({"--json", "params", fixture("gross")});
    ASSERT_EQ(first.code, 0);
    auto a = first.json(), b = second.json();
    EXPECT_FALSE(a["timing"]["cache_hit"].get<bool>());
    EXPECT_TRUE(b["timing"]["cache_hit"].get<bool>());
    a.erase("timing");
    b.erase("timing");
    EXPECT_EQ(a.dump(), b.dump());
    auto bypass = run({"--json", "--no-cache", "params", fixture("gross")});
    EXPECT_FALSE(bypass.json()["timing"]["cache_hit"].get<bool>());
}

TEST_F(CliTest, BarrierSubcommand) {
    auto r = run({"--json", "barrier", "--emit-path", fixture("newman_moore")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["result"]["barrier"], 4);
    EXPECT_FALSE(r.json()["result"]["result"]["path"].empty());
    auto ising = run({"--json", "barrier", fixture("ising")});
    EXPECT_EQ(ising.json()["result"]["barrier"], 2);
    // 32 qubits exceed the default cap: a domain error.
    EXPECT_EQ(run({"barrier", fixture("toric")}).code, 1);
    EXPECT_EQ(run({"barrier", "--cap", "31", fixture("toric")}).code, 2);
    EXPECT_EQ(run({"barrier", "--sector", "x", fixture("ising")}).code, 1);
}

TEST_F(CliTest, BoundsForGross) {
    auto r = run({"--json", "bounds", "--n", "288", "--d", "12", fixture("gross")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto res = r.json()["result"];
    EXPECT_EQ(res["D"], 2);
    EXPECT_NEAR(res["distance_upper_scale"].get<double>(), 16.970562748477143, 1e-12);
    EXPECT_TRUE(res["observed_d_within_scale"].get<bool>());
}

TEST_F(CliTest, ReproduceAppendix) {
    auto r = run({"--json", "reproduce-appendix"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto res = r.json()["result"];
    EXPECT_EQ(res["rows_total"], 9);
    EXPECT_EQ(res["literal_passes"], 7);
    EXPECT_EQ(res["verdict"], "PASS-WITH-ERRATA");
    EXPECT_EQ(res["rows"][0]["name"], "haah");
    EXPECT_TRUE(res["rows"][0]["f2_cancellation"].get<bool>());
    EXPECT_EQ(run({"reproduce-appendix", "--dir", (dir_ / "missing").string()}).code, 1);
}

TEST_F(CliTest, ExportMatrix) {
    auto r = run({"export-matrix", "--which", "h", fixture("ising")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("%%MatrixMarket matrix coordinate pattern general\n8 8 16\n", 0), 0u);
    auto path = (dir_ / "hx.coo").string();
    auto file = run({"--json", "export-matrix", "--format", "coo", "-o", path, fixture("toric")});
    ASSERT_EQ(file.code, 0) << file.err;
    EXPECT_EQ(file.json()["result"]["nnz"], 64);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "16 32");
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    auto bad = write("bad.code", "[code]\nname = bad\nvariables = x\nf = 1 ++ x\n");
    auto r = run({"check", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 4, column 8"), std::string::npos) << r.err;
    EXPECT_EQ(run({"check", (dir_ / "nope.code").string()}).code, 1);
    EXPECT_EQ(run({"check", fixture("ising")}).code, 1);
    auto open = write("open.code", "[code]\nname = o\nvariables = x, y\nf = 1 + x\ng = 1 + y\n[boundary]\nx^3 = 1\n");
    auto inf = run({"params", open});
    EXPECT_EQ(inf.code, 1);
    EXPECT_NE(inf.err.find("uncompactified"), std::string::npos);
}

}  // namespace
}  // namespace ticodes
