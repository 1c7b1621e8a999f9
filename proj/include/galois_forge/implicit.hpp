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
 * @file implicit.hpp
 * @brief Implicit equation of a plane model, as an independent check of its singularities.
 *
 * For phi = (A : B : C) of degree d, the resultant in t of the degree-d forms
 *
 *     Z A(t) - X C(t),   Z B(t) - Y C(t)
 *
 * is c * Z^d * F(X, Y, Z)^k where F is the image curve and k the degree of phi onto
 * it. The Z^d factor comes from the common zeros of the two forms along Z = 0.
 * Setting Z = 1 removes it, so R(X, Y) = Res_t(A - X C, B - Y C) has total degree d.
 *
 * R is sampled on a (d+1) x (d+1) grid, each value being a Sylvester determinant
 * over the coefficient field, and recovered by tensor-product interpolation. The
 * result is accepted only if phi is birational (k = 1, checked on a generic fiber),
 * deg F = d, and F(A, B, C) vanishes identically.
 */

#ifndef GALOIS_FORGE_IMPLICIT_HPP
#define GALOIS_FORGE_IMPLICIT_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "galois_forge/plane_model.hpp"

namespace galois_forge {

/// Homogeneous F(X, Y, Z); terms keyed by exponent, iterated in graded-lex order
/// (X^d first). The first coefficient is normalized to 1.
template <exact_field Field>
struct implicit_curve {
    using element = typename Field::element;
    using exponent = std::array<int, 3>;

    std::map<exponent, element, std::greater<exponent>> terms;
    int degree = 0;

    element eval(const element& x, const element& y, const element& z) const
    {
        element acc = x.field().zero();
        for (const auto& [e, c] : terms)
            acc += c * pow(x, static_cast<std::uint64_t>(e[0])) * pow(y, static_cast<std::uint64_t>(e[1]))
                   * pow(z, static_cast<std::uint64_t>(e[2]));
        return acc;
    }
};

namespace detail {

template <class E>
E determinant(std::vector<std::vector<E>> m)
{
    const std::size_t n = m.size();
    E det = m.empty() ? E() : m[0][0].field().one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero())
            ++piv;
        if (piv == n)
            return det.field().zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const E inv = det.field().one() / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero())
                continue;
            const E factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

/// Resultant of two polynomials taken with formal degree d each.
template <exact_field Field>
typename Field::element sylvester_resultant(const poly<Field>& p, const poly<Field>& q, std::size_t d)
{
    using E = typename Field::element;
    const Field& k = p.field();
    const std::size_t n = 2 * d;
    std::vector<std::vector<E>> m(n, std::vector<E>(n, k.zero()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            m[i][i + j] = p.coeff(d - j);
            m[d + i][i + j] = q.coeff(d - j);
        }
    return determinant(std::move(m));
}

/// Newton interpolation through (xs[i], ys[i]).
template <exact_field Field>
poly<Field> interpolate(const Field& k, const std::vector<typename Field::element>& xs,
                        std::vector<typename Field::element> ys)
{
    const std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    poly<Field> acc(k);
    for (std::size_t i = n; i-- > 0;)
        acc = acc * poly<Field>::linear_root(xs[i]) + poly<Field>::constant(k, ys[i]);
    return acc;
}

template <exact_field Field>
std::vector<typename Field::element> sample_points(const Field& k, std::size_t count)
{
    std::vector<typename Field::element> out;
    if constexpr (std::is_same_v<Field, finite_field>) {
        if (k.size() < count)
            throw error(errc::invalid_argument, "field has fewer than " + std::to_string(count)
                                                    + " elements; interpolation needs a larger field");
        for (std::uint64_t c = 0; c < count; ++c)
            out.push_back(k.from_code(c));
    } else {
        for (std::size_t c = 0; c < count; ++c)
            out.push_back(k.from_int(static_cast<std::int64_t>(c)));
    }
    return out;
}

} // namespace detail

/// Some parameter value t0 has fiber exactly {t0}, counted with multiplicity 1.
template <exact_field Field>
bool is_birational(const plane_model<Field>& model, std::size_t tries = 64)
{
    using P = poly<Field>;
    std::size_t count = tries;
    if constexpr (std::is_same_v<Field, finite_field>)
        count = static_cast<std::size_t>(std::min<std::uint64_t>(tries, model.field().size()));
    const auto ts = detail::sample_points(model.field(), count);
    const std::array<const P*, 3> forms{&model.a, &model.b, &model.c};
    for (const auto& t0 : ts) {
        const auto img = model.image(proj_point<Field>::affine(t0));
        std::size_t j = 0;
        while (img[j].is_zero())
            ++j;
        std::vector<P> lines;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != j)
                lines.push_back(img[j] * (*forms[i]) - img[i] * (*forms[j]));
        if (lines[0].degree() < model.degree && lines[1].degree() < model.degree)
            continue; // infinity shares the image
        if (gcd(lines[0], lines[1]).degree() == 1)
            return true;
    }
    return false;
}

/// True iff F(A(t), B(t), C(t)) is the zero polynomial.
template <exact_field Field>
bool vanishes_on(const implicit_curve<Field>& curve, const plane_model<Field>& model)
{
    using P = poly<Field>;
    const Field& k = model.field();
    const int d = curve.degree;
    std::vector<P> c_pow{P::constant(k, k.one())};
    for (int i = 1; i <= d; ++i)
        c_pow.push_back(c_pow.back() * model.c);
    // F = sum_i X^i G_i(Y, Z), each G_i by Horner in Y, then Horner in X.
    std::vector<std::vector<typename Field::element>> coeff(
        static_cast<std::size_t>(d + 1), std::vector<typename Field::element>(static_cast<std::size_t>(d + 1), k.zero()));
    for (const auto& [e, c] : curve.terms)
        coeff[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = c;
    P total(k);
    for (int i = d; i >= 0; --i) {
        const int m = d - i;
        P g(k);
        for (int j = m; j >= 0; --j)
            g = g * model.b + coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * c_pow[static_cast<std::size_t>(m - j)];
        total = total * model.a + g;
    }
    return total.is_zero();
}

template <exact_field Field>
implicit_curve<Field> implicitize(const plane_model<Field>& model)
{
    using E = typename Field::element;
    using P = poly<Field>;
    const Field& k = model.field();
    const auto d = static_cast<std::size_t>(model.degree);
    if (d == 0)
        throw error(errc::invalid_argument, "constant map has no implicit curve");
    if (!is_birational(model))
        throw error(errc::extraneous_factor_irremovable,
                    "no generic fiber of size one found; the map is not birational onto its image");

    const auto grid = detail::sample_points(k, d + 1);
    // by_x[a] = coefficients in Y of R(grid[a], Y)
    std::vector<P> by_x;
    for (const E& x : grid) {
        const P px = model.a - x * model.c;
        std::vector<E> values;
        for (const E& y : grid)
            values.push_back(detail::sylvester_resultant(px, model.b - y * model.c, d));
        by_x.push_back(detail::interpolate(k, grid, std::move(values)));
    }

    implicit_curve<Field> curve;
    curve.degree = static_cast<int>(d);
    int top = -1;
    for (std::size_t j = 0; j <= d; ++j) {
        std::vector<E> column;
        for (const auto& p : by_x)
            column.push_back(p.coeff(j));
        const P in_x = detail::interpolate(k, grid, std::move(column));
        for (std::size_t i = 0; i < in_x.coeffs().size(); ++i) {
            if (in_x.coeffs()[i].is_zero())
                continue;
            if (i + j > d)
                throw error(errc::extraneous_factor_irremovable, "interpolated equation exceeds the model degree");
            top = std::max(top, static_cast<int>(i + j));
            curve.terms[{static_cast<int>(i), static_cast<int>(j), static_cast<int>(d - i - j)}] = in_x.coeffs()[i];
        }
    }
    if (top != static_cast<int>(d))
        throw error(errc::extraneous_factor_irremovable, "implicit degree " + std::to_string(top) + " differs from "
                                                             + std::to_string(d));

    const E inv = k.one() / curve.terms.begin()->second;
    for (auto& [e, c] : curve.terms)
        c = c * inv;
    if (!vanishes_on(curve, model))
        throw error(errc::extraneous_factor_irremovable, "F(A, B, C) does not vanish");
    return curve;
}

/// Lowest total degree of F in an affine chart centered at pt (0 if pt is off the curve).
template <exact_field Field>
int multiplicity_at(const implicit_curve<Field>& curve, const plane_point<Field>& pt)
{
    using E = typename Field::element;
    const Field& k = pt[0].field();
    std::size_t j = 0;
    while (pt[j].is_zero())
        ++j;
    const std::size_t u = j == 0 ? 1 : 0;
    const std::size_t v = j == 2 ? 1 : 2;
    const auto n = static_cast<std::size_t>(curve.degree);

    // binom[i][r] and powers of the translation in the field
    std::vector<std::vector<E>> binom(n + 1, std::vector<E>(n + 1, k.zero()));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = k.one();
        for (std::size_t r = 1; r <= i; ++r)
            binom[i][r] = binom[i - 1][r - 1] + (r <= i - 1 ? binom[i - 1][r] : k.zero());
    }
    auto powers = [&](const E& a) {
        std::vector<E> p{k.one()};
        for (std::size_t i = 1; i <= n; ++i)
            p.push_back(p.back() * a);
        return p;
    };
    const auto pu = powers(pt[u]);
    const auto pv = powers(pt[v]);

    // (U + a)^eu (V + b)^ev = sum binom(eu, r) a^(eu-r) U^r * binom(ev, s) b^(ev-s) V^s
    std::vector<std::vector<E>> local(n + 1, std::vector<E>(n + 1, k.zero()));
    for (const auto& [e, c] : curve.terms) {
        const auto eu = static_cast<std::size_t>(e[u]);
        const auto ev = static_cast<std::size_t>(e[v]);
        for (std::size_t r = 0; r <= eu; ++r) {
            const E cr = c * binom[eu][r] * pu[eu - r];
            if (cr.is_zero())
                continue;
            for (std::size_t s = 0; s <= ev; ++s)
                local[r][s] += cr * binom[ev][s] * pv[ev - s];
        }
    }
    for (std::size_t total = 0; total <= n; ++total)
        for (std::size_t r = 0; r <= total; ++r)
            if (!local[r][total - r].is_zero())
                return static_cast<int>(total);
    throw error(errc::invalid_argument, "zero polynomial has no multiplicity");
}

} // namespace galois_forge

#endif // GALOIS_FORGE_IMPLICIT_HPP
