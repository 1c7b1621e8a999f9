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
 * @file criterion.hpp
 * @brief The two-Galois-point criterion for P^1 and the geometry it predicts.
 *
 * Given finite G1, G2 < PGL(2) and points P1 != P2, with O = G1.P2 u G2.P1:
 *
 *   (a) k(x)^G1 and k(x)^G2 are rational            (always true on P^1)
 *   (b) G1 n G2 = {1}
 *   (c) Bs_P1 >= P1 and Bs_P2 >= P2
 *   (d) Bs_P1 + sum_{s in G1} s(P2) = Bs_P2 + sum_{t in G2} t(P1)   (= D)
 *
 * When all hold, phi = (f : g : 1) embeds P^1 with degree deg D, phi(P1) = (0:1:0),
 * phi(P2) = (1:0:0), and the line L through them pulls back to D. The report also
 * predicts multiplicities at both points and, for each point of O lying over phi(P1)
 * or phi(P2), the second and (on osculating points) third order of the linear system
 * of lines.
 */

#ifndef GALOIS_FORGE_CRITERION_HPP
#define GALOIS_FORGE_CRITERION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois_forge/divisors.hpp"

namespace galois_forge {

template <exact_field Field>
struct configuration {
    Field field;
    subgroup<Field> g1;
    subgroup<Field> g2;
    proj_point<Field> p1;
    proj_point<Field> p2;

    /// (G2, G1, P2, P1)
    configuration swapped() const { return {field, g2, g1, p2, p1}; }
};

/// Where a point of supp(D) lands and which orders the criterion predicts there.
enum class order_role {
    over_p1,            ///< in G2.P1 \ G1.P2, maps to phi(P1)
    over_p1_osculating, ///< in G1.P2 n G2.P1 with |G2(P1)| > |G1(P2)|: L osculates
    over_p2,            ///< in G1.P2 \ G2.P1, maps to phi(P2)
    on_line,            ///< in G1.P2 n G2.P1 with equal stabilizer orders: a third point of L,
                        ///< where nothing is predicted beyond ord(phi*L) = |G1(P2)|
};

inline std::string to_string(order_role r)
{
    switch (r) {
    case order_role::over_p1:
        return "over_p1";
    case order_role::over_p1_osculating:
        return "over_p1_osculating";
    case order_role::over_p2:
        return "over_p2";
    case order_role::on_line:
        return "on_line";
    }
    return "unknown";
}

template <exact_field Field>
struct order_prediction {
    proj_point<Field> point;
    order_role role;
    int line_order = 0; ///< multiplicity of Q in D = phi*L
    std::optional<int> second;
    std::optional<int> third;
};

template <exact_field Field>
struct criterion_report {
    using point = proj_point<Field>;

    bool cond_a = true;
    std::string cond_a_note = "k(x)^G is rational for every finite G (Lueroth)";

    bool cond_b = false;
    std::optional<moebius<Field>> cond_b_witness; ///< common non-identity element

    bool cond_c = false;
    std::optional<point> cond_c_witness; ///< point where Bs_P1 >= P1 or Bs_P2 >= P2 breaks
    std::string cond_c_detail;

    bool cond_d = false;
    divisor<Field> cond_d_difference; ///< lhs - rhs, zero when (d) holds

    base_divisors<Field> bs;
    divisor<Field> d_lhs; ///< Bs_P1 + sum G1.P2
    divisor<Field> d_rhs; ///< Bs_P2 + sum G2.P1

    std::int64_t degree = 0; ///< |G1| + deg Bs_P1
    std::int64_t m_p1 = 0;
    std::int64_t m_p2 = 0;
    bool tangent_at_p1 = false;
    bool tangent_at_p2 = false;
    bool degree_warning = false; ///< degree < 4
    std::vector<order_prediction<Field>> order_table;

    group_fingerprint fp1;
    group_fingerprint fp2;
    std::size_t order_g1 = 0;
    std::size_t order_g2 = 0;

    bool passes() const { return cond_a && cond_b && cond_c && cond_d; }
};

namespace detail {

template <exact_field Field>
void check_same_field(const configuration<Field>& cfg)
{
    const Field& f = cfg.field;
    if (!(cfg.g1.field() == f) || !(cfg.g2.field() == f) || !(cfg.p1.field() == f) || !(cfg.p2.field() == f))
        throw error(errc::field_mismatch, "configuration mixes coefficient fields");
}

} // namespace detail

template <exact_field Field>
criterion_report<Field> check(const configuration<Field>& cfg)
{
    using point = proj_point<Field>;
    detail::check_same_field(cfg);
    if (cfg.p1 == cfg.p2)
        throw error(errc::points_equal, "P1 and P2 must be different points");

    criterion_report<Field> r;
    r.order_g1 = cfg.g1.order();
    r.order_g2 = cfg.g2.order();
    r.fp1 = fingerprint(cfg.g1);
    r.fp2 = fingerprint(cfg.g2);

    r.cond_b_witness = common_nontrivial_element(cfg.g1, cfg.g2);
    r.cond_b = !r.cond_b_witness.has_value();

    r.bs = bs_divisors(cfg.g1, cfg.g2, cfg.p1, cfg.p2);
    const auto& od = r.bs.orbits;
    const std::int64_t s1 = od.stab_g1_p2; // |G1(P2)|
    const std::int64_t s2 = od.stab_g2_p1; // |G2(P1)|

    if (auto bad = first_violation(r.bs.bs_p1, divisor<Field>(cfg.p1))) {
        r.cond_c_witness = *bad;
        r.cond_c_detail = "Bs_P1 >= P1 fails: multiplicity " + std::to_string(r.bs.bs_p1.multiplicity(*bad));
    } else if (auto bad2 = first_violation(r.bs.bs_p2, divisor<Field>(cfg.p2))) {
        r.cond_c_witness = *bad2;
        r.cond_c_detail = "Bs_P2 >= P2 fails: multiplicity " + std::to_string(r.bs.bs_p2.multiplicity(*bad2));
    }
    r.cond_c = !r.cond_c_witness.has_value();

    r.d_lhs = r.bs.bs_p1 + orbit_sum(cfg.g1, cfg.p2);
    r.d_rhs = r.bs.bs_p2 + orbit_sum(cfg.g2, cfg.p1);
    r.cond_d_difference = r.d_lhs - r.d_rhs;
    r.cond_d = r.cond_d_difference.is_zero();

    r.degree = static_cast<std::int64_t>(cfg.g1.order()) + r.bs.bs_p1.degree();
    if (r.cond_d && r.degree != static_cast<std::int64_t>(cfg.g2.order()) + r.bs.bs_p2.degree())
        throw error(errc::degree_mismatch, "degree clause violated although (d) holds");
    r.degree_warning = r.degree < 4;

    const auto n_outside_g1p2 = static_cast<std::int64_t>(od.all.size() - od.g1_p2.size());
    const auto n_outside_g2p1 = static_cast<std::int64_t>(od.all.size() - od.g2_p1.size());
    const auto n_common = static_cast<std::int64_t>(od.common.size());
    r.m_p1 = s2 * n_outside_g1p2 + (s2 - s1) * n_common;
    r.m_p2 = s1 * n_outside_g2p1;
    r.tangent_at_p1 = n_common > 0 && s2 > s1;
    r.tangent_at_p2 = false;

    if (r.passes()) {
        for (const point& q : od.all) {
            const bool in1 = od.in_g1_p2(q);
            const bool in2 = od.in_g2_p1(q);
            order_prediction<Field> e{q, order_role::over_p1, static_cast<int>(r.d_lhs.multiplicity(q)), std::nullopt,
                                      std::nullopt};
            if (in2 && !in1) {
                e.second = static_cast<int>(s2);
            } else if (in1 && !in2) {
                e.role = order_role::over_p2;
                e.second = static_cast<int>(s1);
            } else if (s2 > s1) {
                e.role = order_role::over_p1_osculating;
                e.second = static_cast<int>(s2 - s1);
                e.third = static_cast<int>(s2);
            } else {
                e.role = order_role::on_line;
            }
            r.order_table.push_back(std::move(e));
        }
    }
    return r;
}

template <exact_field Field>
std::pair<criterion_report<Field>, criterion_report<Field>> both_orientations(const configuration<Field>& cfg)
{
    return {check(cfg), check(cfg.swapped())};
}

// ---------------------------------------------------------------------------
// One inner point P plus an outer point, with eta in G2 relating the two.
// ---------------------------------------------------------------------------

template <exact_field Field>
struct inner_outer_report {
    using point = proj_point<Field>;

    moebius<Field> eta;
    point p;
    point eta_p;
    divisor<Field> bs_p;

    bool cond_b = false;
    std::optional<moebius<Field>> cond_b_witness;
    bool cond_c = false; ///< Bs_P >= P
    std::optional<point> cond_c_witness;
    bool cond_d = false; ///< Bs_P + sum_{G1} s(eta(P)) = sum_{G2} t(P)
    divisor<Field> cond_d_difference;

    bool passes() const { return cond_b && cond_c && cond_d; }
};

/// Bs_P = |G2(P)| * sum over (G2.P) - (G1.eta(P))  +  (|G2(P)| - |G1(eta(P))|) * sum over G1.eta(P).
template <exact_field Field>
inner_outer_report<Field> check_inner_outer(const Field& field, const subgroup<Field>& g1, const subgroup<Field>& g2,
                                            const moebius<Field>& eta, const proj_point<Field>& p)
{
    if (!(g1.field() == field) || !(g2.field() == field) || !(p.field() == field) || !(eta.field() == field))
        throw error(errc::field_mismatch, "inner/outer data mixes coefficient fields");
    if (!g2.contains(eta))
        throw error(errc::eta_not_in_g2, "eta must be an element of G2");

    inner_outer_report<Field> r{eta, p, eta.apply(p), {}, false, std::nullopt, false, std::nullopt, false, {}};
    const auto orbit2 = orbit(g2, p);
    const auto orbit1 = orbit(g1, r.eta_p);
    const auto s2 = static_cast<std::int64_t>(g2.order() / orbit2.size());
    const auto s1 = static_cast<std::int64_t>(g1.order() / orbit1.size());
    for (const auto& q : orbit2)
        if (!std::binary_search(orbit1.begin(), orbit1.end(), q))
            r.bs_p.add(q, s2);
    for (const auto& q : orbit1)
        r.bs_p.add(q, s2 - s1);

    r.cond_b_witness = common_nontrivial_element(g1, g2);
    r.cond_b = !r.cond_b_witness.has_value();
    r.cond_c_witness = first_violation(r.bs_p, divisor<Field>(p));
    r.cond_c = !r.cond_c_witness.has_value();
    r.cond_d_difference = r.bs_p + orbit_sum(g1, r.eta_p) - orbit_sum(g2, p);
    r.cond_d = r.cond_d_difference.is_zero();
    return r;
}

/// Every (eta, P) with eta in G2 (closure order) and P in `points` (given order) that passes.
template <exact_field Field>
std::vector<inner_outer_report<Field>> scan_inner_outer(const Field& field, const subgroup<Field>& g1,
                                                        const subgroup<Field>& g2,
                                                        const std::vector<proj_point<Field>>& points)
{
    std::vector<inner_outer_report<Field>> out;
    for (const auto& eta : g2.elements())
        for (const auto& p : points) {
            auto r = check_inner_outer(field, g1, g2, eta, p);
            if (r.passes())
                out.push_back(std::move(r));
        }
    return out;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_CRITERION_HPP
