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

#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace gf_test;

namespace {

std::string read_sample(const std::string& name)
{
    std::ifstream f(std::string(GALOIS_FORGE_SAMPLES_DIR) + "/" + name);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Line and column of the first occurrence of `needle`, 1-based.
std::pair<std::size_t, std::size_t> position_of(const std::string& text, const std::string& needle)
{
    const std::size_t at = text.find(needle);
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

parse_error parse_failure(const std::string& text)
{
    try {
        const auto rc = parse_run_config(text);
        with_field(realize_field(rc.source, rc.field), [&](const auto& k) {
            realize(rc, k);
            return 0;
        });
    } catch (const parse_error& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return parse_error("none", 0, 0);
}

const std::string base = R"({
  "schema": "1",
  "field": {"kind": "finite", "p": 41, "ext_degree": 1},
  "roots": {"xi": 5},
  "g1": [[["xi", "0"], ["0", "1"]]],
  "g2": [[["0", "1"], ["1", "0"]]],
  "p1": "inf",
  "p2": ["2", "1"]
})";

std::string replaced(std::string s, const std::string& from, const std::string& to)
{
    s.replace(s.find(from), from.size(), to);
    return s;
}

} // namespace

TEST(ParseRunConfig, ReadsEveryField)
{
    const auto rc = parse_run_config(replaced(base, "\"p2\": [\"2\", \"1\"]",
                                              "\"p2\": [\"2\", \"1\"],\n  \"options\": {\"orientation\": \"both\", "
                                              "\"implicitize\": true, \"cap\": 500, \"output\": \"text\"}"));
    EXPECT_EQ(rc.field.kind, field_kind::finite);
    EXPECT_EQ(rc.field.p, 41u);
    ASSERT_EQ(rc.roots.size(), 1u);
    EXPECT_EQ(rc.roots[0], (std::pair<std::string, std::uint64_t>{"xi", 5}));
    EXPECT_EQ(rc.options.orientation, "both");
    EXPECT_TRUE(rc.options.implicitize);
    EXPECT_EQ(rc.options.cap, 500u);
    EXPECT_EQ(rc.options.output, "text");

    const auto rz = realize(rc, make_finite_field(41, 1));
    EXPECT_EQ(rz.cfg.g1.order(), 5u);
    EXPECT_EQ(rz.cfg.g2.order(), 2u);
    EXPECT_TRUE(rz.cfg.p1.is_infinity());
}

TEST(ParseErrors, ExpressionPositionInsideString)
{
    const std::string text = replaced(base, "[[\"xi\", \"0\"]", "[[\"z^^2\", \"0\"]");
    const auto e = parse_failure(text);
    const auto [line, col] = position_of(text, "z^^2");
    EXPECT_EQ(e.line(), line);
    EXPECT_EQ(e.column(), col + 2); // the second '^'
}

TEST(ParseErrors, UnknownName)
{
    const std::string text = replaced(base, "[\"2\", \"1\"]", "[\"2 + w\", \"1\"]");
    const auto e = parse_failure(text);
    const auto [line, col] = position_of(text, "2 + w");
    EXPECT_EQ(e.line(), line);
    EXPECT_EQ(e.column(), col + 4);
}

TEST(ParseErrors, InvalidJson)
{
    const std::string text = replaced(base, "\"p1\": \"inf\",", "\"p1\": \"inf\" ,,");
    const auto e = parse_failure(text);
    EXPECT_EQ(e.line(), 7u);
    EXPECT_NE(std::string(e.what()).find("invalid JSON"), std::string::npos);
}

TEST(ParseErrors, StructuralProblems)
{
    // each bad document is reported at the line holding the offending value
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {replaced(base, "\"schema\": \"1\"", "\"schema\": \"2\""), 2},
        {replaced(base, "\"p\": 41", "\"p\": 42"), 3},
        {replaced(base, "{\"xi\": 5}", "{\"xi\": 7}"), 4},
        {replaced(base, "[[\"xi\", \"0\"], [\"0\", \"1\"]]", "[[\"xi\", \"0\"]]"), 5},
        {replaced(base, "[[\"0\", \"1\"], [\"1\", \"0\"]]", "[[\"1\", \"1\"], [\"1\", \"1\"]]"), 6},
        {replaced(base, "\"p1\": \"inf\"", "\"p1\": \"infinity\""), 7},
        {replaced(base, "[\"2\", \"1\"]", "[\"0\", \"0\"]"), 8},
        {replaced(base, "[\"2\", \"1\"]", "[\"1\", \"0\"]"), 8}, // equals P1
        {replaced(base, "[\"2\", \"1\"]", "[\"1/2\", \"1\"]"), 8},
    };
    for (const auto& [text, line] : cases) {
        const auto e = parse_failure(text);
        EXPECT_EQ(e.line(), line) << e.what();
    }
}

TEST(ParseErrors, MissingMember)
{
    std::string text = base;
    text.erase(text.find("  \"g2\""), text.find("  \"p1\"") - text.find("  \"g2\""));
    const auto e = parse_failure(text);
    EXPECT_NE(std::string(e.what()).find("g2"), std::string::npos);
}

TEST(ParseErrors, CapTooSmall)
{
    const std::string text = replaced(base, "\"p2\": [\"2\", \"1\"]", "\"p2\": [\"2\", \"1\"],\n  \"options\": {\"cap\": 3}");
    const auto e = parse_failure(text);
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("NotFiniteWithinCap"), std::string::npos);
}

TEST(RoundTrip, ConfigJsonReproducesReports)
{
    for (const std::string name : {"curve1_f81.json", "curve2_f41.json", "curve3_f41.json", "moved_p2.json"}) {
        const auto rc = parse_run_config(read_sample(name));
        const any_field field = realize_field(rc.source, rc.field);
        with_field(field, [&](const auto& k) {
            const auto first = realize(rc, k).cfg;
            const std::string again = config_json(first).dump(2);
            const auto rc2 = parse_run_config(again);
            const auto second = realize(rc2, k).cfg;
            EXPECT_TRUE(first.g1.same_elements(second.g1)) << name;
            EXPECT_TRUE(first.g2.same_elements(second.g2)) << name;
            EXPECT_EQ(first.p1, second.p1);
            EXPECT_EQ(first.p2, second.p2);
            EXPECT_EQ(to_json(check(first), first).dump(), to_json(check(second), second).dump()) << name;
            return 0;
        });
    }
}

TEST(Output, ReportIsByteIdenticalAcrossRuns)
{
    // curve 1 passes both ways; the swapped forms of curves 2 and 3 fail (c)
    const std::vector<std::pair<std::string, int>> runs{
        {"curve1_f81.json", 0}, {"curve2_f41.json", 1}, {"curve3_f41.json", 1}, {"curve2_q20.json", 1}};
    for (const auto& [name, code] : runs) {
        const std::string text = read_sample(name);
        for (const std::string output : {"json", "text"}) {
            std::ostringstream a, b, err;
            EXPECT_EQ(cmd_check(text, {std::string("both"), output}, a, err), code) << name;
            EXPECT_EQ(cmd_check(text, {std::string("both"), output}, b, err), code);
            EXPECT_EQ(a.str(), b.str());
        }
    }
}

TEST(Output, ReportKeysInFixedOrder)
{
    std::ostringstream out, err;
    ASSERT_EQ(cmd_check(read_sample("curve1_f81.json"), {}, out, err), 0);
    const json j = json::parse(out.str());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    const std::vector<std::string> expect{"schema",  "field", "p1", "p2", "g1", "g2", "orbits", "conditions",
                                          "passes",  "divisors", "degree", "degree_warning", "m_p1", "m_p2",
                                          "tangent_at_p1", "tangent_at_p2", "order_table"};
    EXPECT_EQ(keys, expect);
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["degree"], 14);
}

TEST(Output, TextReportShowsConditions)
{
    std::ostringstream out, err;
    ASSERT_EQ(cmd_check(read_sample("moved_p2.json"), {std::nullopt, std::string("text")}, out, err), 1);
    const std::string s = out.str();
    EXPECT_NE(s.find("(c) FAILS  at Q_(1)"), std::string::npos) << s;
    EXPECT_NE(s.find("(b) holds"), std::string::npos);
}
