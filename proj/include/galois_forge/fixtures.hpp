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

/**
 * @file fixtures.hpp
 * @brief The three reference embeddings of P^1 and their published invariants.
 *
 * Expected values are written out literally; nothing here is computed.
 *
 *   curve 1  p = 3,  G1 = AGL(1, F_3), G2 = D_5,  P1 = Q_xi, P2 = Q_0
 *   curve 2  p != 2, 5, G1 = Z/5Z, G2 = A4,  P1 = Q_inf, P2 = Q_xi
 *   curve 3  p != 2, 5, G1 = Z/5Z, G2 = S4,  P1 = Q_inf, P2 = Q_xi
 *
 * xi is a primitive fifth root of unity and i a root of T^2 + 1. Curves 2 and 3 run
 * over F_41 by default and over Q(zeta_20) (xi = z^4, i = z^5) on request.
 */

#ifndef GALOIS_FORGE_FIXTURES_HPP
#define GALOIS_FORGE_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

namespace galois_forge {

/// Which points of O an order statement is about. Q_1 is the point (1 : 1).
enum class point_set {
    all,                  ///< O
    outside_g1p2,         ///< O \ G1.P2
    g1p2,                 ///< G1.P2
    g1p2_without_q1,      ///< G1.P2 \ {Q_1}
    q1,                   ///< {Q_1}
};

inline std::string to_string(point_set s)
{
    switch (s) {
    case point_set::all: return "O";
    case point_set::outside_g1p2: return "O \\ G1.P2";
    case point_set::g1p2: return "G1.P2";
    case point_set::g1p2_without_q1: return "G1.P2 \\ {Q_1}";
    case point_set::q1: return "Q_1";
    }
    return "unknown";
}

/// "the second (resp. third) order is equal to n at each point of `where`"
struct order_statement {
    point_set where;
    std::optional<int> second;
    std::optional<int> third;
};

struct fixture_expectation {
    std::int64_t degree;
    std::int64_t m_p1;
    std::int64_t m_p2;
    std::size_t g1_order;
    std::vector<std::size_t> g1_element_orders;
    std::string g1_name;
    std::size_t g2_order;
    std::vector<std::size_t> g2_element_orders;
    std::string g2_name;
    bool tangent_at_p1;
    bool tangent_at_p2;
    std::vector<order_statement> orders;
};

struct fixture {
    int number;
    std::string title;
    std::string config;                      ///< finite-field config document
    std::optional<std::string> char0_config; ///< same data over Q(zeta_20)
    fixture_expectation expected;
};

namespace detail {

inline std::string fixture_config(const std::string& field, const std::string& roots, const std::string& g1,
                                  const std::string& g2, const std::string& p1, const std::string& p2)
{
    return "{\n"
           "  \"schema\": \"1\",\n"
           "  \"field\": " + field + ",\n"
           "  \"roots\": " + roots + ",\n"
           "  \"g1\": " + g1 + ",\n"
           "  \"g2\": " + g2 + ",\n"
           "  \"p1\": " + p1 + ",\n"
           "  \"p2\": " + p2 + "\n"
           "}\n";
}

inline const std::string f81 = R"({"kind": "finite", "p": 3, "ext_degree": 4})";
inline const std::string f41 = R"({"kind": "finite", "p": 41, "ext_degree": 1})";
inline const std::string q20 = R"({"kind": "cyclotomic", "conductor": 20})";

inline const std::string a4_gens = R"([[["1", "0"], ["0", "-1"]], [["0", "1"], ["1", "0"]], [["1", "i"], ["1", "-i"]]])";
inline const std::string s4_gens =
    R"([[["1", "0"], ["0", "-1"]], [["0", "1"], ["1", "0"]], [["1", "i"], ["1", "-i"]], [["i", "0"], ["0", "1"]]])";
inline const std::string roots_xi_i = R"({"xi": 5, "i": 4})";
inline const std::string c5_gens = R"([[["xi", "0"], ["0", "1"]]])";

} // namespace detail

inline std::vector<fixture> paper_fixtures()
{
    using detail::fixture_config;
    std::vector<fixture> out;

    out.push_back(fixture{
        1,
        "AGL(1,F_3) and D_5 over F_81",
        fixture_config(detail::f81, R"({"xi": 5})", R"([[["1", "1"], ["0", "1"]], [["1", "0"], ["0", "-1"]]])",
                       R"([[["xi", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]])", R"(["xi", "1"])", R"(["0", "1"])"),
        std::nullopt,
        fixture_expectation{14,
                            8,
                            4,
                            6,
                            {1, 2, 2, 2, 3, 3},
                            "S3",
                            10,
                            {1, 2, 2, 2, 2, 2, 5, 5, 5, 5},
                            "D_5",
                            false,
                            false,
                            {{point_set::all, 2, std::nullopt}}},
    });
    const fixture_expectation e2{16,
                                 11,
                                 4,
                                 5,
                                 {1, 5, 5, 5, 5},
                                 "Z/5Z",
                                 12,
                                 {1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3},
                                 "A4",
                                 true,
                                 false,
                                 {{point_set::outside_g1p2, 2, std::nullopt},
                                  {point_set::g1p2, 1, std::nullopt},
                                  {point_set::q1, std::nullopt, 2}}};
    out.push_back(fixture{2, "Z/5Z and A4 over F_41",
                          fixture_config(detail::f41, detail::roots_xi_i, detail::c5_gens, detail::a4_gens, "\"inf\"", R"(["xi", "1"])"),
                          fixture_config(detail::q20, detail::roots_xi_i, detail::c5_gens, detail::a4_gens, "\"inf\"", R"(["xi", "1"])"),
                          e2});

    const fixture_expectation e3{28,
                                 23,
                                 4,
                                 5,
                                 {1, 5, 5, 5, 5},
                                 "Z/5Z",
                                 24,
                                 {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4},
                                 "S4",
                                 true,
                                 false,
                                 {{point_set::outside_g1p2, 4, std::nullopt},
                                  {point_set::q1, 3, 4},
                                  {point_set::g1p2_without_q1, 1, std::nullopt}}};
    out.push_back(fixture{3, "Z/5Z and S4 over F_41",
                          fixture_config(detail::f41, detail::roots_xi_i, detail::c5_gens, detail::s4_gens, "\"inf\"", R"(["xi", "1"])"),
                          fixture_config(detail::q20, detail::roots_xi_i, detail::c5_gens, detail::s4_gens, "\"inf\"", R"(["xi", "1"])"),
                          e3});
    return out;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_FIXTURES_HPP
