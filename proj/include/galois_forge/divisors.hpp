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

#ifndef GALOIS_FORGE_DIVISORS_HPP
#define GALOIS_FORGE_DIVISORS_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include "galois_forge/pgl2.hpp"

namespace galois_forge {

/// Finite formal integer combination of points of the projective line.
/// Zero multiplicities are never stored, so equality is map equality.
template <exact_field Field>
class divisor {
public:
    using point = proj_point<Field>;
    using map_type = std::map<point, std::int64_t>;

    divisor() = default;
    explicit divisor(const point& p, std::int64_t mult = 1) { add(p, mult); }

    void add(const point& p, std::int64_t mult)
    {
        if (mult == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(p, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::int64_t multiplicity(const point& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    std::int64_t degree() const
    {
        std::int64_t d = 0;
        for (const auto& [p, m] : terms_)
            d += m;
        return d;
    }

    const map_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::vector<point> support() const
    {
        std::vector<point> s;
        for (const auto& [p, m] : terms_)
            s.push_back(p);
        return s;
    }

    divisor& operator+=(const divisor& o)
    {
        for (const auto& [p, m] : o.terms_)
            add(p, m);
        return *this;
    }
    divisor& operator-=(const divisor& o)
    {
        for (const auto& [p, m] : o.terms_)
            add(p, -m);
        return *this;
    }
    friend divisor operator+(divisor a, const divisor& b) { return a += b; }
    friend divisor operator-(divisor a, const divisor& b) { return a -= b; }
    friend bool operator==(const divisor& a, const divisor& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

/// A point where d1 >= d2 fails, if any.
template <exact_field Field>
std::optional<proj_point<Field>> first_violation(const divisor<Field>& d1, const divisor<Field>& d2)
{
    const auto diff = d1 - d2;
    for (const auto& [p, m] : diff.terms())
        if (m < 0)
            return p;
    return std::nullopt;
}

/// d1 >= d2: every multiplicity of d1 is at least the one of d2 (absent = 0).
template <exact_field Field>
bool geq(const divisor<Field>& d1, const divisor<Field>& d2)
{
    return !first_violation(d1, d2).has_value();
}

/// Sum over sigma in g of sigma(q): multiplicity |g(q)| on every orbit point.
template <exact_field Field>
divisor<Field> orbit_sum(const subgroup<Field>& g, const proj_point<Field>& q)
{
    divisor<Field> d;
    for (const auto& m : g.elements())
        d.add(m.apply(q), 1);
    return d;
}

template <exact_field Field>
divisor<Field> sum_of_points(const std::vector<proj_point<Field>>& pts, std::int64_t mult = 1)
{
    divisor<Field> d;
    for (const auto& p : pts)
        d.add(p, mult);
    return d;
}

/// Orbit and stabilizer data entering the two base divisors.
template <exact_field Field>
struct orbit_data {
    using point = proj_point<Field>;

    std::vector<point> g1_p2;     ///< G1 . P2
    std::vector<point> g2_p1;     ///< G2 . P1
    std::vector<point> all;       ///< O = G1.P2 u G2.P1, sorted
    std::vector<point> common;    ///< G1.P2 n G2.P1
    std::int64_t stab_g1_p2 = 0;  ///< |G1(P2)|
    std::int64_t stab_g2_p1 = 0;  ///< |G2(P1)|

    bool in_g1_p2(const point& p) const { return std::binary_search(g1_p2.begin(), g1_p2.end(), p); }
    bool in_g2_p1(const point& p) const { return std::binary_search(g2_p1.begin(), g2_p1.end(), p); }
};

template <exact_field Field>
orbit_data<Field> make_orbit_data(std::vector<proj_point<Field>> g1_p2, std::int64_t stab_g1_p2,
                                  std::vector<proj_point<Field>> g2_p1, std::int64_t stab_g2_p1)
{
    orbit_data<Field> od;
    od.g1_p2 = std::move(g1_p2);
    od.g2_p1 = std::move(g2_p1);
    od.stab_g1_p2 = stab_g1_p2;
    od.stab_g2_p1 = stab_g2_p1;
    std::set_union(od.g1_p2.begin(), od.g1_p2.end(), od.g2_p1.begin(), od.g2_p1.end(), std::back_inserter(od.all));
    std::set_intersection(od.g1_p2.begin(), od.g1_p2.end(), od.g2_p1.begin(), od.g2_p1.end(),
                          std::back_inserter(od.common));
    return od;
}

template <exact_field Field>
orbit_data<Field> make_orbit_data(const subgroup<Field>& g1, const subgroup<Field>& g2, const proj_point<Field>& p1,
                                  const proj_point<Field>& p2)
{
    auto o12 = orbit(g1, p2);
    auto o21 = orbit(g2, p1);
    const auto s12 = static_cast<std::int64_t>(g1.order() / o12.size());
    const auto s21 = static_cast<std::int64_t>(g2.order() / o21.size());
    return make_orbit_data(std::move(o12), s12, std::move(o21), s21);
}

template <exact_field Field>
struct base_divisors {
    divisor<Field> bs_p1;
    divisor<Field> bs_p2;
    orbit_data<Field> orbits;
};

/// Bs_{P1} = |G2(P1)| * sum over O \ G1.P2  +  (|G2(P1)| - |G1(P2)|) * sum over G1.P2 n G2.P1,
/// Bs_{P2} = |G1(P2)| * sum over O \ G2.P1.
/// Negative coefficients are kept so the positivity test can reject them.
template <exact_field Field>
base_divisors<Field> bs_divisors(const orbit_data<Field>& od)
{
    base_divisors<Field> out;
    out.orbits = od;
    for (const auto& q : od.all) {
        const bool in1 = od.in_g1_p2(q);
        const bool in2 = od.in_g2_p1(q);
        if (!in1)
            out.bs_p1.add(q, od.stab_g2_p1);
        else if (in2)
            out.bs_p1.add(q, od.stab_g2_p1 - od.stab_g1_p2);
        if (!in2)
            out.bs_p2.add(q, od.stab_g1_p2);
    }
    return out;
}

template <exact_field Field>
base_divisors<Field> bs_divisors(const subgroup<Field>& g1, const subgroup<Field>& g2, const proj_point<Field>& p1,
                                 const proj_point<Field>& p2)
{
    if (p1 == p2)
        throw error(errc::points_equal, "P1 and P2 must be different points");
    return bs_divisors(make_orbit_data(g1, g2, p1, p2));
}

} // namespace galois_forge

#endif // GALOIS_FORGE_DIVISORS_HPP
