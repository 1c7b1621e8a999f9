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

#ifndef GALOIS_FORGE_POLY_HPP
#define GALOIS_FORGE_POLY_HPP

#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "galois_forge/exact_fields.hpp"

namespace galois_forge {

/// What the algorithms need from a coefficient field handle.
template <class F>
concept exact_field = requires(const F& f, const typename F::element& a, std::int64_t n) {
    { f.zero() } -> std::same_as<typename F::element>;
    { f.one() } -> std::same_as<typename F::element>;
    { f.from_int(n) } -> std::same_as<typename F::element>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { a + a } -> std::same_as<typename F::element>;
    { a - a } -> std::same_as<typename F::element>;
    { a * a } -> std::same_as<typename F::element>;
    { a / a } -> std::same_as<typename F::element>;
    { -a } -> std::same_as<typename F::element>;
    { a == a } -> std::convertible_to<bool>;
    { a < a } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.field() } -> std::same_as<F>;
};

/// Dense univariate polynomial, little-endian, no trailing zero coefficient.
template <exact_field Field>
class poly {
public:
    using element = typename Field::element;

    explicit poly(Field field) : field_(field) {}
    poly(Field field, std::vector<element> coeffs) : field_(field), c_(std::move(coeffs)) { normalize(); }

    static poly constant(Field field, const element& c) { return poly(field, {c}); }
    static poly x(Field field) { return poly(field, {field.zero(), field.one()}); }
    /// x - a
    static poly linear_root(const element& a) { return poly(a.field(), {-a, a.field().one()}); }

    const Field& field() const noexcept { return field_; }
    const std::vector<element>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    element lead() const { return c_.empty() ? field_.zero() : c_.back(); }

    element operator()(const element& v) const
    {
        element acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * v + c_[i];
        return acc;
    }

    poly operator-() const
    {
        poly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    poly& operator+=(const poly& o)
    {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        normalize();
        return *this;
    }

    poly& operator-=(const poly& o)
    {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }

    friend poly operator*(const poly& a, const poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return poly(a.field_);
        std::vector<element> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return poly(a.field_, std::move(r));
    }
    poly& operator*=(const poly& o) { return *this = *this * o; }

    friend poly operator*(const element& s, poly a)
    {
        if (s.is_zero())
            return poly(a.field_);
        for (auto& c : a.c_)
            c = s * c;
        a.normalize();
        return a;
    }

    friend bool operator==(const poly& a, const poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; throws on division by the zero polynomial.
    std::pair<poly, poly> divmod(const poly& d) const
    {
        if (d.is_zero())
            throw error(errc::division_by_zero, "polynomial division by zero");
        if (c_.size() < d.c_.size())
            return {poly(field_), *this};
        std::vector<element> r = c_;
        std::vector<element> q(c_.size() - d.c_.size() + 1, field_.zero());
        const element inv = field_.one() / d.lead();
        const std::size_t shift = d.c_.size() - 1;
        for (std::size_t k = r.size(); k-- > shift;) {
            if (r[k].is_zero())
                continue;
            const element c = r[k] * inv;
            q[k - shift] = c;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                r[k - shift + j] -= c * d.c_[j];
        }
        r.resize(shift);
        return {poly(field_, std::move(q)), poly(field_, std::move(r))};
    }

    friend poly operator/(const poly& a, const poly& b) { return a.divmod(b).first; }
    friend poly operator%(const poly& a, const poly& b) { return a.divmod(b).second; }

    poly monic() const
    {
        if (is_zero())
            return *this;
        return (field_.one() / lead()) * (*this);
    }

    /// p(x + a)
    poly taylor_shift(const element& a) const
    {
        std::vector<element> r = c_;
        const std::size_t n = r.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j)
                r[j - 1] += a * r[j];
        return poly(field_, std::move(r));
    }

    /// x^n p(1/x), the reversal with respect to formal degree n >= degree().
    poly reversed(std::size_t n) const
    {
        std::vector<element> r(n + 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[n - i] = c_[i];
        return poly(field_, std::move(r));
    }

    /// Multiplicity of the root a (0 if p(a) != 0). Undefined for the zero polynomial.
    int root_multiplicity(const element& a) const
    {
        poly s = taylor_shift(a);
        int k = 0;
        while (k < static_cast<int>(s.c_.size()) && s.c_[k].is_zero())
            ++k;
        return k;
    }

private:
    void normalize()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    Field field_;
    std::vector<element> c_;
};

template <exact_field Field>
poly<Field> gcd(poly<Field> a, poly<Field> b)
{
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <exact_field Field>
poly<Field> pow(poly<Field> base, unsigned e)
{
    poly<Field> result = poly<Field>::constant(base.field(), base.field().one());
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e > 0)
            base *= base;
    }
    return result;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_POLY_HPP
