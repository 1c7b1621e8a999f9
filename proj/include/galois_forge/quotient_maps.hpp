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
 * @file quotient_maps.hpp
 * @brief Rational functions in one variable and quotient maps P^1 -> P^1 / G.
 *
 * For a finite G in PGL(2) the polynomial
 *
 *     prod_{sigma in G} (T - sigma(x))
 *
 * is the minimal polynomial of x over the fixed field k(x)^G. Each coefficient is a
 * rational function of degree at most |G|, and any nonconstant one generates
 * k(x)^G (its degree is then forced to be exactly |G|). invariant_generator takes
 * the first nonconstant elementary symmetric function of the images sigma(x) and
 * checks degree and invariance before returning it.
 */

#ifndef GALOIS_FORGE_QUOTIENT_MAPS_HPP
#define GALOIS_FORGE_QUOTIENT_MAPS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "galois_forge/divisors.hpp"

namespace galois_forge {

/// Reduced quotient num/den with den monic and gcd(num, den) = 1.
template <exact_field Field>
class rational_function {
public:
    using element = typename Field::element;
    using poly_type = poly<Field>;

    rational_function(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit rational_function(poly_type num) : num_(std::move(num)), den_(poly_type::constant(num_.field(), num_.field().one())) {}

    static rational_function x(const Field& f) { return rational_function(poly_type::x(f)); }
    static rational_function constant(const element& c) { return rational_function(poly_type::constant(c.field(), c)); }

    const poly_type& num() const noexcept { return num_; }
    const poly_type& den() const noexcept { return den_; }
    const Field& field() const noexcept { return num_.field(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// max(deg num, deg den); 0 for constants.
    int map_degree() const noexcept { return std::max({num_.degree(), den_.degree(), 0}); }

    friend rational_function operator+(const rational_function& a, const rational_function& b)
    {
        return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator-(const rational_function& a, const rational_function& b)
    {
        return rational_function(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator*(const rational_function& a, const rational_function& b)
    {
        return rational_function(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational_function operator/(const rational_function& a, const rational_function& b)
    {
        if (b.is_zero())
            throw error(errc::division_by_zero, "division by the zero rational function");
        return rational_function(a.num_ * b.den_, a.den_ * b.num_);
    }
    rational_function reciprocal() const { return rational_function(den_, num_); }

    /// Equality by cross-multiplication.
    friend bool operator==(const rational_function& a, const rational_function& b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Value at q as a point of the target projective line.
    proj_point<Field> value_at(const proj_point<Field>& q) const
    {
        const Field& f = field();
        if (num_.is_zero())
            return proj_point<Field>::affine(f.zero());
        if (!q.is_infinity())
            return proj_point<Field>(num_(q.a()), den_(q.a()));
        const auto d = static_cast<std::size_t>(map_degree());
        return proj_point<Field>(num_.coeff(d), den_.coeff(d));
    }

private:
    void reduce()
    {
        if (den_.is_zero())
            throw error(errc::division_by_zero, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = poly_type::constant(num_.field(), num_.field().one());
            return;
        }
        const poly_type g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const element inv = num_.field().one() / den_.lead();
        num_ = inv * num_;
        den_ = inv * den_;
    }

    poly_type num_;
    poly_type den_;
};

/// r(m(x)) where m(x) = (m00 x + m01) / (m10 x + m11).
template <exact_field Field>
rational_function<Field> compose_moebius(const rational_function<Field>& r, const moebius<Field>& m)
{
    using P = poly<Field>;
    const Field& f = r.field();
    const auto n = static_cast<std::size_t>(r.map_degree());
    const P top(f, {m(0, 1), m(0, 0)});
    const P bottom(f, {m(1, 1), m(1, 0)});
    std::vector<P> top_pow{P::constant(f, f.one())}, bottom_pow{P::constant(f, f.one())};
    for (std::size_t i = 1; i <= n; ++i) {
        top_pow.push_back(top_pow.back() * top);
        bottom_pow.push_back(bottom_pow.back() * bottom);
    }
    auto substitute = [&](const P& p) {
        P acc(f);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (!p.coeffs()[i].is_zero())
                acc += p.coeffs()[i] * (top_pow[i] * bottom_pow[n - i]);
        return acc;
    };
    return rational_function<Field>(substitute(r.num()), substitute(r.den()));
}

/// Order (valuation) of r at q.
template <exact_field Field>
int ord_at(const rational_function<Field>& r, const proj_point<Field>& q)
{
    if (r.is_zero())
        throw error(errc::zero_function, "order of the zero function is undefined");
    if (q.is_infinity())
        return r.den().degree() - r.num().degree();
    return r.num().root_multiplicity(q.a()) - r.den().root_multiplicity(q.a());
}

/// Local degree of r : P^1 -> P^1 at q.
template <exact_field Field>
int ramification_index(const rational_function<Field>& r, const proj_point<Field>& q)
{
    const auto v = r.value_at(q);
    if (v.is_infinity())
        return -ord_at(r, q);
    return ord_at(r - rational_function<Field>::constant(v.a()), q);
}

/// First nonconstant elementary symmetric function of {sigma(x) : sigma in g}.
template <exact_field Field>
rational_function<Field> invariant_generator(const subgroup<Field>& g)
{
    using P = poly<Field>;
    using R = rational_function<Field>;
    const Field& f = g.field();
    const std::size_t n = g.order();

    // coefficients in T of prod_sigma (T (m10 x + m11) - (m00 x + m01))
    std::vector<P> coeff{P::constant(f, f.one())};
    for (const auto& m : g.elements()) {
        const P top(f, {m(0, 1), m(0, 0)});
        const P bottom(f, {m(1, 1), m(1, 0)});
        std::vector<P> next(coeff.size() + 1, P(f));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] += coeff[k] * bottom;
            next[k] -= coeff[k] * top;
        }
        coeff = std::move(next);
    }

    for (std::size_t j = 1; j <= n; ++j) {
        R e(coeff[n - j], coeff[n]);
        if (j % 2 == 1)
            e = R(-e.num(), e.den());
        if (e.is_constant())
            continue;
        if (e.map_degree() != static_cast<int>(n))
            throw error(errc::degree_mismatch, "symmetric function of degree " + std::to_string(e.map_degree())
                                                   + " for a group of order " + std::to_string(n));
        for (const auto& m : g.elements())
            if (!(compose_moebius(e, m) == e))
                throw error(errc::degree_mismatch, "symmetric function is not invariant");
        return e;
    }
    throw error(errc::no_nonconstant_symmetric_function, "all symmetric functions are constant");
}

/// G-invariant generator whose pole divisor is exactly orbit_sum(g, q).
template <exact_field Field>
rational_function<Field> generator_with_pole_fiber(const subgroup<Field>& g, const proj_point<Field>& q)
{
    using R = rational_function<Field>;
    const R pi = invariant_generator(g);
    const auto v = pi.value_at(q);
    const R f = v.is_infinity() ? pi : (pi - R::constant(v.a())).reciprocal();

    if (f.map_degree() != static_cast<int>(g.order()))
        throw error(errc::pole_divisor_mismatch, "generator has degree " + std::to_string(f.map_degree()));
    const auto poles = orbit_sum(g, q);
    std::int64_t total = 0;
    for (const auto& [p, mult] : poles.terms()) {
        if (ord_at(f, p) != -mult)
            throw error(errc::pole_divisor_mismatch, "pole order differs from the stabilizer order");
        total += mult;
    }
    // the pole divisor has degree map_degree, so no poles remain outside the orbit
    if (total != f.map_degree())
        throw error(errc::pole_divisor_mismatch, "poles outside the orbit");
    return f;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_QUOTIENT_MAPS_HPP
