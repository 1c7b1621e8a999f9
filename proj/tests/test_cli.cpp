/*
   Copyright 2026 The galois-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace gf_test;
namespace fs = std::filesystem;

namespace {

std::string sample(const std::string& name) { return std::string(GALOIS_FORGE_SAMPLES_DIR) + "/" + name; }

std::string slurp(const fs::path& p)
{
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct run_result {
    int code;
    std::string out;
};

run_result run(const std::string& args)
{
    const fs::path tmp = fs::temp_directory_path() / ("gf_cli_" + std::to_string(::getpid()) + ".out");
    const std::string cmd = std::string(GALOIS_FORGE_BINARY) + " " + args + " > " + tmp.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    run_result r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(tmp)};
    fs::remove(tmp);
    return r;
}

fs::path fresh_dir(const std::string& name)
{
    const fs::path d = fs::temp_directory_path() / ("gf_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

} // namespace

TEST(Cli, CheckExitCodes)
{
    const auto ok = run("check " + sample("curve1_f81.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(json::parse(ok.out)["degree"], 14);

    const auto moved = run("check " + sample("moved_p2.json"));
    EXPECT_EQ(moved.code, 1);
    EXPECT_EQ(json::parse(moved.out)["conditions"]["c"]["witness"], json::parse(R"(["1", "1"])"));

    const auto same = run("check " + sample("equal_groups.json"));
    EXPECT_EQ(same.code, 1);
    EXPECT_FALSE(json::parse(same.out)["conditions"]["b"]["witness"].is_null());

    const auto bad = run("check " + sample("malformed_entry.json"));
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("(line 4, column 15)"), std::string::npos) << bad.out;

    EXPECT_EQ(run("check " + sample("does_not_exist.json")).code, 2);
    EXPECT_EQ(run("check " + sample("curve1_f81.json") + " --orientation sideways").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, CheckBothOrientations)
{
    EXPECT_EQ(run("check " + sample("curve1_f81.json") + " --orientation both").code, 0);
    const auto two = run("check " + sample("curve2_f41.json") + " --orientation both");
    EXPECT_EQ(two.code, 1);
    const json j = json::parse(two.out);
    EXPECT_EQ(j["one"]["passes"], true);
    EXPECT_EQ(j["swapped"]["passes"], false);
}

TEST(Cli, OutputIsReplayable)
{
    const auto a = run("check " + sample("curve3_f41.json"));
    const auto b = run("check " + sample("curve3_f41.json"));
    EXPECT_EQ(a.out, b.out);
    const auto t = run("check " + sample("curve3_f41.json") + " --output text");
    EXPECT_NE(t.out.find("degree 28"), std::string::npos);
}

TEST(Cli, ConstructWritesArtifacts)
{
    const fs::path dir = fresh_dir("curve1");
    const auto r = run("construct " + sample("curve1_f81.json") + " --out-dir " + dir.string());
    EXPECT_EQ(r.code, 0) << r.out;
    for (const char* f : {"report.json", "model.json", "verification.json", "orders.json"})
        EXPECT_TRUE(fs::exists(dir / f)) << f;
    EXPECT_FALSE(fs::exists(dir / "curve.json"));
    EXPECT_EQ(json::parse(slurp(dir / "model.json"))["degree"], 14);
    EXPECT_EQ(json::parse(slurp(dir / "verification.json"))["ok"], true);
    fs::remove_all(dir);
}

TEST(Cli, ConstructWithImplicitization)
{
    const fs::path dir = fresh_dir("curve2");
    const auto r = run("construct " + sample("curve2_f41.json") + " --implicitize --out-dir " + dir.string());
    EXPECT_EQ(r.code, 0) << r.out;
    const json c = json::parse(slurp(dir / "curve.json"));
    EXPECT_EQ(c["degree"], 16);
    EXPECT_EQ(c["multiplicity_p1"], 11);
    EXPECT_EQ(c["multiplicity_p2"], 4);
    fs::remove_all(dir);

    // the same switch from the config options, printed to stdout
    const auto s = run("construct " + sample("curve2_implicit.json"));
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("\"multiplicity_p1\": 11"), std::string::npos);
}

TEST(Cli, ConstructFailingConfigWritesNothing)
{
    const fs::path dir = fresh_dir("moved");
    const auto r = run("construct " + sample("moved_p2.json") + " --out-dir " + dir.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(fs::exists(dir / "model.json"));
    EXPECT_FALSE(fs::exists(dir / "report.json"));
    fs::remove_all(dir);
}

TEST(Cli, Search)
{
    const auto r = run("search " + sample("search_curve1.json"));
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_FALSE(j["entries"].empty());
    EXPECT_EQ(run("search " + sample("search_empty.json")).code, 0);
    const auto capped = run("search " + sample("search_f7_cyclic.json") + " --max-results 3");
    EXPECT_EQ(json::parse(capped.out)["entries"].size(), 3u);
}

TEST(Cli, CapFromEnvironment)
{
    const std::string cmd = "GALOIS_FORGE_CAP=4 " + std::string(GALOIS_FORGE_BINARY) + " check "
                            + sample("curve1_f81.json") + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 2); // D_5 does not close within 4 elements
}

TEST(Cli, VerifyPaperNamesTheOnLinePoint)
{
    // every quantity matches except the Q_1 order statement of the first curve
    std::ostringstream out, err;
    const int code = cmd_verify_paper(false, out, err);
    const std::string s = out.str();
    EXPECT_EQ(code, 1);
    EXPECT_NE(s.find("measured (alpha, beta) = (1, 2)"), std::string::npos) << s;
    std::size_t bad = 0;
    for (const auto& fr : verify_paper_runs(false))
        for (const auto& row : fr.rows)
            if (!row.ok) {
                ++bad;
                EXPECT_EQ(fr.number, 1);
                EXPECT_NE(row.quantity.find("Q_(1)"), std::string::npos) << row.quantity;
            }
    EXPECT_EQ(bad, 2u);
}
