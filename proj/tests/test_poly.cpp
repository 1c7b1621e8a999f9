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
using P = poly<F>;

TEST(Poly, DivisionIdentity)
{
    gen g(7);
    const F k = f41();
    for (int t = 0; t < 300; ++t) {
        const P a = g.polynomial(k, 12);
        P b = g.polynomial(k, 6);
        if (b.is_zero())
            continue;
        const auto [q, r] = a.divmod(b);
        ASSERT_EQ(q * b + r, a);
        ASSERT_LT(r.degree(), b.degree());
    }
}

TEST(Poly, GcdDividesAndIsMonic)
{
    gen g(8);
    const F k = f81();
    for (int t = 0; t < 200; ++t) {
        const P common = g.polynomial(k, 3);
        const P a = g.polynomial(k, 5) * common;
        const P b = g.polynomial(k, 5) * common;
        if (a.is_zero() || b.is_zero())
            continue;
        const P d = gcd(a, b);
        ASSERT_TRUE(d.lead().is_one());
        ASSERT_TRUE((a % d).is_zero());
        ASSERT_TRUE((b % d).is_zero());
        if (!common.is_zero()) {
            ASSERT_TRUE((d % common.monic()).is_zero());
        }
    }
}

TEST(Poly, EvaluationIsARingHomomorphism)
{
    gen g(9);
    const F k = f41();
    for (int t = 0; t < 200; ++t) {
        const P a = g.polynomial(k, 8), b = g.polynomial(k, 8);
        const E x = g.element(k);
        ASSERT_EQ((a * b)(x), a(x) * b(x));
        ASSERT_EQ((a + b)(x), a(x) + b(x));
    }
}

TEST(Poly, TaylorShiftAndRootMultiplicity)
{
    const F k = f41();
    const E r = k.from_int(7);
    const P h = pow(P::linear_root(r), 3) * P::linear_root(k.from_int(2));
    EXPECT_EQ(h.root_multiplicity(r), 3);
    EXPECT_EQ(h.root_multiplicity(k.from_int(2)), 1);
    EXPECT_EQ(h.root_multiplicity(k.from_int(3)), 0);
    // h(x + r) has x^3 as its lowest term
    const P s = h.taylor_shift(r);
    EXPECT_TRUE(s.coeff(0).is_zero());
    EXPECT_TRUE(s.coeff(2).is_zero());
    EXPECT_FALSE(s.coeff(3).is_zero());
    gen g(10);
    for (int t = 0; t < 50; ++t) {
        const P a = g.polynomial(k, 7);
        const E c = g.element(k), x = g.element(k);
        ASSERT_EQ(a.taylor_shift(c)(x), a(x + c));
    }
}

TEST(Poly, ReversedSwapsZeroAndInfinity)
{
    const F k = f41();
    const P h(k, {k.zero(), k.one(), k.from_int(3)}); // x + 3x^2
    const P rev = h.reversed(4);                      // x^4 h(1/x) = x^3 + 3x^2
    EXPECT_EQ(rev, P(k, {k.zero(), k.zero(), k.from_int(3), k.one()}));
}
