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

#include "test_support.hpp"

using namespace gf_test;

namespace {

// Schoolbook F_p[z] / (m) arithmetic on coefficient vectors, independent of the library tables.
std::vector<std::uint64_t> naive_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                     const std::vector<std::uint64_t>& m, std::uint64_t p)
{
    const std::size_t n = m.size() - 1;
    std::vector<std::uint64_t> r(2 * n, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = r.size(); k-- > n;) {
        const std::uint64_t c = r[k];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= n; ++j) // m is monic
            r[k - n + j] = (r[k - n + j] + (p - c) * m[j] % p) % p;
    }
    r.resize(n);
    return r;
}

std::vector<std::uint64_t> padded(std::vector<std::uint64_t> v, std::size_t n)
{
    v.resize(n, 0);
    return v;
}

} // namespace

TEST(FiniteField, SizesAndNames)
{
    const F k81 = f81();
    EXPECT_EQ(k81.size(), 81u);
    EXPECT_EQ(k81.characteristic(), 3u);
    EXPECT_EQ(k81.degree(), 4u);
    EXPECT_EQ(k81.name(), "F_3^4");
    // 5 | 3^4 - 1 = 80, so a primitive fifth root exists
    EXPECT_EQ((81 - 1) % 5, 0);
    const F k5 = make_finite_field(5, 1);
    EXPECT_EQ(k5.size(), 5u);
    EXPECT_EQ(k5.name(), "F_5");
}

TEST(FiniteField, SmallPrimeFieldArithmetic)
{
    const F k3 = make_finite_field(3, 1);
    EXPECT_EQ(k3.from_int(2) + k3.from_int(2), k3.from_int(1));
    EXPECT_EQ(k3.from_int(-1), k3.from_int(2));
    EXPECT_EQ(k3.from_int(2) * k3.from_int(2), k3.one());
}

TEST(FiniteField, RejectsBadInput)
{
    try {
        make_finite_field(9, 1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::non_prime_characteristic);
    }
    try {
        make_finite_field(3, 2, {1, 0, 1}); // z^2 + 1 over F_3 is irreducible: accepted
    } catch (const error&) {
        FAIL();
    }
    try {
        make_finite_field(3, 2, {2, 0, 1}); // z^2 - 1 = (z - 1)(z + 1)
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::reducible_modulus);
    }
    const F a = f81();
    const F b = f41();
    EXPECT_THROW((void)(a.one() + b.one()), error);
}

TEST(FiniteField, MatchesSchoolbookArithmeticOnAllPairs)
{
    const F k = f81();
    const auto& m = k.spec().modulus;
    ASSERT_EQ(m.size(), 5u);
    ASSERT_EQ(m.back(), 1u);
    for (std::uint64_t a = 0; a < k.size(); ++a)
        for (std::uint64_t b = 0; b < k.size(); ++b) {
            const E x = k.from_code(a), y = k.from_code(b);
            const auto expect = naive_mul(padded(x.coeffs(), 4), padded(y.coeffs(), 4), m, 3);
            ASSERT_EQ(padded((x * y).coeffs(), 4), expect) << a << " * " << b;
            std::vector<std::uint64_t> sum(4);
            for (std::size_t j = 0; j < 4; ++j)
                sum[j] = (padded(x.coeffs(), 4)[j] + padded(y.coeffs(), 4)[j]) % 3;
            ASSERT_EQ(padded((x + y).coeffs(), 4), sum);
        }
}

TEST(FiniteField, FieldAxiomsOnRandomTriples)
{
    gen g(11);
    for (const F& k : {f81(), f41(), make_finite_field(5, 3), make_finite_field(7, 2)}) {
        for (int t = 0; t < 300; ++t) {
            const E a = g.element(k), b = g.element(k), c = g.element(k);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a - a, k.zero());
            if (!a.is_zero()) {
                ASSERT_EQ(a / a, k.one());
                ASSERT_EQ(a * a.inverse(), k.one());
            }
        }
    }
}

TEST(FiniteField, DivisionByZeroThrows)
{
    const F k = f41();
    try {
        (void)(k.one() / k.zero());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::division_by_zero);
    }
}

TEST(FiniteField, RootOfUnityIsFirstElementOfExactOrder)
{
    const F k = f81();
    // brute force: first code whose order (smallest r with x^r = 1) is 5
    std::optional<std::uint64_t> first;
    for (std::uint64_t c = 1; c < k.size() && !first; ++c) {
        E x = k.from_code(c), p = x;
        int order = 1;
        while (!p.is_one()) {
            p = p * x;
            ++order;
        }
        if (order == 5)
            first = c;
    }
    ASSERT_TRUE(first);
    EXPECT_EQ(root_of_unity(k, 5).code(), *first);
    EXPECT_TRUE(has_exact_order(root_of_unity(f41(), 4), 4));
    EXPECT_THROW(root_of_unity(f41(), 3), error); // 3 does not divide 40
    EXPECT_THROW(root_of_unity(f81(), 3), error); // order divisible by p
}

TEST(Cyclotomic, DimensionAndGenerator)
{
    const auto k = q20();
    EXPECT_EQ(k.degree(), 8u); // phi(20) = 8
    const auto z = k.generator();
    EXPECT_EQ(pow(z, 10) * pow(z, 10), k.one());
    EXPECT_FALSE(pow(z, 10).is_one());
    EXPECT_EQ(pow(z, 10), -k.one());
    EXPECT_EQ(root_of_unity(k, 5), pow(z, 4));
    EXPECT_EQ(root_of_unity(k, 4), pow(z, 5));
    EXPECT_EQ(pow(root_of_unity(k, 4), 2), -k.one());
    EXPECT_TRUE(has_exact_order(root_of_unity(k, 5), 5));
    EXPECT_THROW(root_of_unity(k, 3), error);
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples)
{
    const auto k = q20();
    gen g(5);
    for (int t = 0; t < 60; ++t) {
        const auto a = g.cyclotomic(k), b = g.cyclotomic(k), c = g.cyclotomic(k);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), k.one());
            ASSERT_EQ((b / a) * a, b);
        }
    }
}

TEST(FieldDescription, RoundTripsThroughMakeField)
{
    for (const auto& d : {describe(f81()), describe(f41())}) {
        const any_field k = make_field(d);
        const auto again = describe(std::get<F>(k));
        EXPECT_EQ(again.p, d.p);
        EXPECT_EQ(again.ext_degree, d.ext_degree);
        EXPECT_EQ(again.modulus, d.modulus);
        EXPECT_TRUE(std::get<F>(k) == std::get<F>(make_field(d))); // registry shares the spec
    }
    field_description c;
    c.kind = field_kind::cyclotomic;
    c.conductor = 20;
    EXPECT_EQ(std::get<cyclotomic_field>(make_field(c)).degree(), 8u);
}
