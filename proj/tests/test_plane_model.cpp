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
using R = rational_function<F>;
using PP = plane_point<F>;

namespace {

struct built {
    configuration<F> cfg;
    criterion_report<F> report;
    plane_model<F> model;
};

built build(const configuration<F>& cfg)
{
    auto rep = check(cfg);
    auto model = build_model(cfg, rep);
    return {cfg, std::move(rep), std::move(model)};
}

std::vector<built> all_curves()
{
    const reference<F> r81(f81());
    const reference<F> r41(f41());
    return {build(r81.curve1()), build(r41.curve2()), build(r41.curve3())};
}

// Compares the measured (alpha, beta) with the report's predicted orders.
void expect_orders_agree(const built& b)
{
    for (const auto& e : b.report.order_table) {
        const auto seq = order_sequence_at(b.model, e.point);
        SCOPED_TRACE(to_text(e.point) + " role " + to_string(e.role));
        EXPECT_EQ(e.line_order, b.model.form_order(b.model.c, e.point));
        switch (e.role) {
        case order_role::over_p1:
        case order_role::over_p2:
            EXPECT_EQ(seq.alpha, e.second.value());
            break;
        case order_role::over_p1_osculating:
            EXPECT_EQ(seq.alpha, e.second.value());
            EXPECT_EQ(seq.beta, e.third.value());
            break;
        case order_role::on_line:
            EXPECT_TRUE(e.line_order == seq.alpha || e.line_order == seq.beta);
            break;
        }
    }
}

} // namespace

TEST(BuildModel, DegreesAndImages)
{
    const auto curves = all_curves();
    const std::vector<int> degrees{14, 16, 28};
    for (std::size_t j = 0; j < curves.size(); ++j) {
        const auto& m = curves[j].model;
        const F& k = m.field();
        EXPECT_EQ(m.degree, degrees[j]);
        EXPECT_EQ(std::max({m.a.degree(), m.b.degree(), m.c.degree()}), m.degree);
        EXPECT_EQ(gcd(gcd(m.a, m.b), m.c).degree(), 0);
        EXPECT_EQ(m.image(m.p1), PP(k.zero(), k.one(), k.zero()));
        EXPECT_EQ(m.image(m.p2), PP(k.one(), k.zero(), k.zero()));
        EXPECT_EQ(R(m.a, m.c), m.f);
        EXPECT_EQ(R(m.b, m.c), m.g);
    }
}

TEST(BuildModel, Curve2UsesPoleFiberOfC5)
{
    const reference<F> r(f41());
    const auto b = build(r.curve2());
    const F& k = r.k;
    std::vector<E> c(6, k.zero());
    c[0] = -k.one();
    c[5] = k.one();
    EXPECT_EQ(b.model.f, R(poly<F>(k, c)).reciprocal());
}

TEST(BuildModel, RefusesFailingReport)
{
    const reference<F> r(f41());
    auto cfg = r.curve2();
    cfg.p2 = r.q(r.k.one());
    EXPECT_THROW(build_model(cfg, check(cfg)), error);
}

TEST(BuildModel, TrivialConic)
{
    const F k = f41();
    const auto triv = generate(k, std::vector<M>{});
    const configuration<F> cfg{k, triv, triv, at<F>(k.zero()), Pt::infinity(k)};
    const auto b = build(cfg);
    EXPECT_TRUE(b.report.degree_warning);
    EXPECT_EQ(b.model.degree, 2);
    // (x : 1/x : 1) ~ (x^2 : 1 : x)
    EXPECT_EQ(b.model.f, R::x(k));
    EXPECT_EQ(b.model.g, R::x(k).reciprocal());
    const E t = k.from_int(3);
    EXPECT_EQ(b.model.image(at<F>(t)), PP(t * t, k.one(), t));
    // a generic line meets it in two simple points
    const auto pb = line_pullback(b.model, k.zero(), k.one(), -k.from_int(5) * k.one() / k.from_int(6));
    EXPECT_EQ(pb.degree(), 2);
    EXPECT_TRUE(verify_galois(b.model, cfg, b.report).ok());
}

TEST(LinePullback, LineAtInfinityIsD)
{
    for (const auto& b : all_curves()) {
        const F& k = b.model.field();
        const auto pb = line_pullback(b.model, k.zero(), k.zero(), k.one());
        EXPECT_EQ(pb.residual.degree(), 0);
        EXPECT_EQ(pb.rational, b.report.d_lhs);
        EXPECT_EQ(pb.rational, b.report.d_rhs);
    }
}

TEST(LinePullback, Curve3Coefficients)
{
    const reference<F> r(f41());
    const auto b = build(r.curve3());
    const auto pb = line_pullback(b.model, r.z(), r.z(), r.o());
    for (const auto& q : orbit(r.a4(), r.inf()))
        EXPECT_EQ(pb.rational.multiplicity(q), 4) << to_text(q);
    for (std::uint64_t j = 1; j <= 4; ++j)
        EXPECT_EQ(pb.rational.multiplicity(r.q(pow(r.xi, j))), 1);
    EXPECT_EQ(pb.rational.degree(), 28);
}

TEST(LinePullback, RandomLinesConserveDegree)
{
    gen g(71);
    for (const auto& b : all_curves()) {
        const F& k = b.model.field();
        int done = 0;
        while (done < 100) {
            const E x = g.element(k), y = g.element(k), z = g.element(k);
            if (x.is_zero() && y.is_zero() && z.is_zero())
                continue;
            ASSERT_EQ(line_pullback(b.model, x, y, z).degree(), b.model.degree);
            ++done;
        }
    }
}

TEST(LinePullback, ZeroFormRejected)
{
    const reference<F> r(f41());
    const auto b = build(r.curve2());
    EXPECT_THROW(line_pullback(b.model, r.z(), r.z(), r.z()), error);
}

TEST(OrderSequence, PredictionsAgree)
{
    for (const auto& b : all_curves())
        expect_orders_agree(b);
}

TEST(OrderSequence, ReferenceValues)
{
    const reference<F> r41(f41());
    EXPECT_EQ(order_sequence_at(build(r41.curve2()).model, r41.q(r41.k.one())), (order_sequence{1, 2}));
    EXPECT_EQ(order_sequence_at(build(r41.curve3()).model, r41.q(r41.k.one())), (order_sequence{3, 4}));
}

TEST(OrderSequence, Curve1)
{
    const reference<F> r(f81());
    const auto b = build(r.curve1());
    for (const auto& e : b.report.order_table) {
        const auto seq = order_sequence_at(b.model, e.point);
        if (e.point == r.q(r.k.one())) {
            // G1.P2 and G2.P1 meet only at Q_1, with equal stabilizer orders 2
            EXPECT_EQ(e.role, order_role::on_line);
            EXPECT_EQ(seq, (order_sequence{1, 2}));
        } else {
            EXPECT_EQ(seq.alpha, 2) << to_text(e.point);
        }
    }
}

TEST(OrderSequence, RandomPassingConfigurations)
{
    gen g(72);
    const F k = make_finite_field(13, 1);
    const auto pool = cyclic_subgroups(k, 4);
    int tested = 0;
    for (int t = 0; t < 2000 && tested < 40; ++t) {
        const configuration<F> cfg{k, pool[g.below(pool.size())], pool[g.below(pool.size())], g.point(k), g.point(k)};
        if (cfg.p1 == cfg.p2)
            continue;
        const auto rep = check(cfg);
        if (!rep.passes() || rep.degree < 3)
            continue;
        const built b{cfg, rep, build_model(cfg, rep)};
        expect_orders_agree(b);
        EXPECT_TRUE(verify_galois(b.model, cfg, rep).ok());
        ++tested;
    }
    EXPECT_EQ(tested, 40);
}

TEST(Tangency, FiberIntersectionMatchesFlags)
{
    for (const auto& b : all_curves()) {
        const F& k = b.model.field();
        const auto pts = rational_points(k);
        const auto f1 = fiber(b.model, b.model.image(b.model.p1), pts);
        const auto f2 = fiber(b.model, b.model.image(b.model.p2), pts);
        const int m1 = multiplicity_from_fiber(b.model, f1);
        const int m2 = multiplicity_from_fiber(b.model, f2);
        EXPECT_EQ(m1, b.report.m_p1);
        EXPECT_EQ(m2, b.report.m_p2);
        // the line through phi(P1) and phi(P2) is Z = 0
        const int i1 = intersection_multiplicity(b.model, f1, k.zero(), k.zero(), k.one());
        const int i2 = intersection_multiplicity(b.model, f2, k.zero(), k.zero(), k.one());
        EXPECT_EQ(m1 < i1, b.report.tangent_at_p1);
        EXPECT_EQ(m2 < i2, b.report.tangent_at_p2);
    }
}

TEST(VerifyGalois, References)
{
    for (const auto& b : all_curves()) {
        const auto v = verify_galois(b.model, b.cfg, b.report);
        EXPECT_TRUE(v.ok());
        EXPECT_TRUE(v.invariance && v.map_degrees && v.ramification && v.divisor_identity);
    }
}

TEST(VerifyGalois, WrongFunctionNamesElement)
{
    const reference<F> r(f81());
    auto b = build(r.curve1());
    b.model.f = R::x(r.k);
    const auto v = verify_galois(b.model, b.cfg, b.report);
    EXPECT_FALSE(v.invariance);
    ASSERT_FALSE(v.issues.empty());
    EXPECT_EQ(v.issues.front().kind, galois_issue_kind::invariance_failure);
    EXPECT_NE(v.issues.front().witness.find("f not invariant under"), std::string::npos);
    EXPECT_FALSE(v.map_degrees);
}

TEST(VerifyGalois, Curve2OverCyclotomicField)
{
    const reference<cyclotomic_field> r(q20());
    const auto cfg = r.curve2();
    const auto rep = check(cfg);
    const auto model = build_model(cfg, rep);
    EXPECT_EQ(model.degree, 16);
    EXPECT_TRUE(verify_galois(model, cfg, rep).ok());
    EXPECT_EQ(order_sequence_at(model, r.q(r.o())), (order_sequence{1, 2}));
}
