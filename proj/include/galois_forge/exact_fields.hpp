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
 * @file exact_fields.hpp
 * @brief Exact coefficient fields: F_p, F_p[z]/(m(z)) and Q[z]/(Phi_n(z)).
 *
 * A field is described by an immutable spec object. Specs are interned: calling
 * make_finite_field / make_cyclotomic_field twice with the same description hands
 * back the same spec, so field equality is pointer equality and specs outlive every
 * element that refers to them.
 *
 * Field handles (`finite_field`, `cyclotomic_field`) are cheap to copy. Elements
 * hold a pointer to their spec and a canonical coefficient representation:
 *
 * - finite kind: the coefficient vector (c_0, ..., c_{n-1}) of c_0 + c_1 z + ... is
 *   packed into the integer code c_0 + c_1 p + ... + c_{n-1} p^{n-1}. The code order
 *   is the canonical enumeration order used for modulus and root selection.
 * - cyclotomic kind: phi(n) reduced rationals, little-endian in powers of z.
 */

#ifndef GALOIS_FORGE_EXACT_FIELDS_HPP
#define GALOIS_FORGE_EXACT_FIELDS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "galois_forge/error.hpp"

namespace galois_forge {

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<u64> prime_factors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 invmod(u64 a, u64 p)
{
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 r0 = static_cast<__int128>(p), r1 = static_cast<__int128>(a % p);
    __int128 t0 = 0, t1 = 1;
    if (r1 == 0)
        throw error(errc::division_by_zero, "inverse of zero");
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0)
        t0 += static_cast<__int128>(p);
    return static_cast<u64>(t0);
}

/// Dense polynomials over F_p, little-endian, no trailing zeros.
using fp_poly = std::vector<u64>;

inline void trim(fp_poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline fp_poly fp_sub(fp_poly a, const fp_poly& b, u64 p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline fp_poly fp_mul(const fp_poly& a, const fp_poly& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    fp_poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(r);
    return r;
}

inline std::pair<fp_poly, fp_poly> fp_divmod(fp_poly a, const fp_poly& b, u64 p)
{
    if (b.empty())
        throw error(errc::division_by_zero, "polynomial division by zero");
    trim(a);
    if (a.size() < b.size())
        return {{}, a};
    fp_poly q(a.size() - b.size() + 1, 0);
    const u64 lead_inv = invmod(b.back(), p);
    const std::size_t shift = b.size() - 1;
    for (std::size_t k = a.size(); k-- > shift;) {
        const u64 c = mulmod(a[k], lead_inv, p);
        q[k - shift] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) {
                u64& slot = a[k - shift + j];
                slot = (slot + p - mulmod(c, b[j], p)) % p;
            }
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

inline fp_poly fp_gcd(fp_poly a, fp_poly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& c : a)
            c = mulmod(c, inv, p);
    }
    return a;
}

inline fp_poly fp_powmod(fp_poly base, u64 e, const fp_poly& m, u64 p)
{
    fp_poly result{1};
    base = fp_divmod(base, m, p).second;
    while (e > 0) {
        if (e & 1)
            result = fp_divmod(fp_mul(result, base, p), m, p).second;
        base = fp_divmod(fp_mul(base, base, p), m, p).second;
        e >>= 1;
    }
    return result;
}

/// Irreducibility over F_p of a monic polynomial (Rabin-style distinct-degree check).
inline bool fp_is_irreducible(const fp_poly& m, u64 p)
{
    const std::size_t n = m.size() - 1;
    if (n == 0)
        return false;
    if (n == 1)
        return true;
    fp_poly h{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = fp_powmod(h, p, m, p);
        fp_poly g = fp_gcd(fp_sub(h, fp_poly{0, 1}, p), m, p);
        if (g.size() > 1)
            return false;
    }
    return true;
}

/// Dense polynomials over Q.
using q_poly = std::vector<mpq_class>;

inline void trim(q_poly& a)
{
    while (!a.empty() && sgn(a.back()) == 0)
        a.pop_back();
}

inline std::pair<q_poly, q_poly> q_divmod(q_poly a, const q_poly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {{}, a};
    q_poly q(a.size() - b.size() + 1);
    const mpq_class lead_inv = 1 / b.back();
    const std::size_t shift = b.size() - 1;
    for (std::size_t k = a.size(); k-- > shift;) {
        mpq_class c = a[k] * lead_inv;
        q[k - shift] = c;
        if (sgn(c) != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[k - shift + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

inline q_poly q_mul(const q_poly& a, const q_poly& b)
{
    if (a.empty() || b.empty())
        return {};
    q_poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline q_poly q_sub(q_poly a, const q_poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

inline u64 euler_phi(u64 n)
{
    u64 result = n;
    for (u64 p : prime_factors(n))
        result = result / p * (p - 1);
    return result;
}

/// n-th cyclotomic polynomial with integer coefficients, little-endian.
inline std::vector<mpz_class> cyclotomic_polynomial(unsigned n)
{
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    q_poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto phi_d = cyclotomic_polynomial(d);
        q_poly den(phi_d.begin(), phi_d.end());
        num = q_divmod(num, den).first;
    }
    std::vector<mpz_class> out;
    out.reserve(num.size());
    for (auto& c : num)
        out.push_back(c.get_num());
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

/// Immutable description of F_p[z]/(m(z)), with log/exp tables for small orders.
struct finite_field_spec {
    static constexpr std::uint64_t table_limit = std::uint64_t{1} << 20;

    std::uint64_t p = 0;
    unsigned degree = 1;
    std::uint64_t order = 0;              // p^degree
    std::vector<std::uint64_t> modulus;   // monic, little-endian, size degree + 1
    std::vector<std::uint64_t> p_pow;     // p^i for i <= degree
    std::vector<std::uint32_t> exp_table; // exp_table[i] = g^i for a primitive g
    std::vector<std::uint32_t> log_table;

    bool has_tables() const noexcept { return !exp_table.empty(); }

    std::vector<std::uint64_t> digits(std::uint64_t code) const
    {
        std::vector<std::uint64_t> d(degree);
        for (unsigned i = 0; i < degree; ++i) {
            d[i] = code % p;
            code /= p;
        }
        return d;
    }

    std::uint64_t encode(const std::vector<std::uint64_t>& d) const
    {
        std::uint64_t code = 0;
        for (unsigned i = 0; i < degree && i < d.size(); ++i)
            code += (d[i] % p) * p_pow[i];
        return code;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        if (degree == 1)
            return (a + b) % p;
        std::uint64_t out = 0;
        for (unsigned i = 0; i < degree; ++i) {
            out += ((a % p + b % p) % p) * p_pow[i];
            a /= p;
            b /= p;
        }
        return out;
    }

    std::uint64_t neg(std::uint64_t a) const
    {
        if (degree == 1)
            return a == 0 ? 0 : p - a;
        std::uint64_t out = 0;
        for (unsigned i = 0; i < degree; ++i) {
            const std::uint64_t d = a % p;
            out += (d == 0 ? 0 : p - d) * p_pow[i];
            a /= p;
        }
        return out;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const
    {
        if (degree == 1)
            return detail::mulmod(a, b, p);
        auto r = detail::fp_mul(digits(a), digits(b), p);
        r = detail::fp_divmod(r, modulus, p).second;
        return encode(r);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        if (a == 0 || b == 0)
            return 0;
        if (has_tables()) {
            const std::uint64_t s = std::uint64_t{log_table[a]} + log_table[b];
            return exp_table[s % (order - 1)];
        }
        return mul_poly(a, b);
    }

    /// Inverse by extended gcd against the modulus.
    std::uint64_t inv(std::uint64_t a) const
    {
        if (a == 0)
            throw error(errc::division_by_zero, "inverse of zero in F_" + std::to_string(order));
        if (degree == 1)
            return detail::invmod(a, p);
        detail::fp_poly r0 = modulus, r1 = digits(a);
        detail::trim(r1);
        detail::fp_poly s0{}, s1{1};
        while (!r1.empty()) {
            auto [q, r] = detail::fp_divmod(r0, r1, p);
            r0 = std::move(r1);
            r1 = std::move(r);
            auto s2 = detail::fp_sub(s0, detail::fp_mul(q, s1, p), p);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        const std::uint64_t c = detail::invmod(r0[0], p);
        for (auto& x : s0)
            x = detail::mulmod(x, c, p);
        return encode(s0);
    }
};

class finite_field {
public:
    using spec_type = finite_field_spec;

    class element {
    public:
        element() = default;
        element(const finite_field_spec* spec, std::uint64_t code) : spec_(spec), code_(code) {}

        finite_field field() const { return finite_field(spec_); }
        std::uint64_t code() const noexcept { return code_; }
        std::vector<std::uint64_t> coeffs() const { return spec_->digits(code_); }
        bool is_zero() const noexcept { return code_ == 0; }
        bool is_one() const noexcept { return code_ == 1; }

        element operator-() const { return {spec_, spec_->neg(code_)}; }
        element& operator+=(const element& o) { check(o); code_ = spec_->add(code_, o.code_); return *this; }
        element& operator-=(const element& o) { check(o); code_ = spec_->sub(code_, o.code_); return *this; }
        element& operator*=(const element& o) { check(o); code_ = spec_->mul(code_, o.code_); return *this; }
        element& operator/=(const element& o) { check(o); code_ = spec_->mul(code_, spec_->inv(o.code_)); return *this; }
        friend element operator+(element a, const element& b) { return a += b; }
        friend element operator-(element a, const element& b) { return a -= b; }
        friend element operator*(element a, const element& b) { return a *= b; }
        friend element operator/(element a, const element& b) { return a /= b; }

        element inverse() const { return {spec_, spec_->inv(code_)}; }

        friend bool operator==(const element& a, const element& b) noexcept
        {
            return a.spec_ == b.spec_ && a.code_ == b.code_;
        }
        friend bool operator<(const element& a, const element& b) noexcept { return a.code_ < b.code_; }

        const finite_field_spec* spec() const noexcept { return spec_; }

    private:
        void check(const element& o) const
        {
            if (spec_ != o.spec_ || spec_ == nullptr)
                throw error(errc::spec_mismatch, "operands belong to different fields");
        }

        const finite_field_spec* spec_ = nullptr;
        std::uint64_t code_ = 0;
    };

    finite_field() = default;
    explicit finite_field(const finite_field_spec* spec) : spec_(spec) {}

    element zero() const { return {spec_, 0}; }
    element one() const { return {spec_, 1}; }
    element from_int(std::int64_t v) const
    {
        const auto p = static_cast<std::int64_t>(spec_->p);
        std::int64_t r = v % p;
        if (r < 0)
            r += p;
        return {spec_, static_cast<std::uint64_t>(r)};
    }
    element from_mpz(const mpz_class& v) const
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(spec_->p));
        return {spec_, r.get_ui()};
    }
    /// The class of z. In a prime field with the auto modulus this is 0.
    element generator() const
    {
        if (spec_->degree == 1)
            return {spec_, (spec_->p - spec_->modulus[0]) % spec_->p};
        return {spec_, spec_->p};
    }
    element from_code(std::uint64_t code) const
    {
        if (code >= spec_->order)
            throw error(errc::invalid_argument, "element code out of range");
        return {spec_, code};
    }
    element from_coeffs(const std::vector<std::uint64_t>& c) const { return {spec_, spec_->encode(c)}; }

    std::uint64_t characteristic() const { return spec_->p; }
    std::uint64_t size() const { return spec_->order; }
    unsigned degree() const { return spec_->degree; }
    bool is_finite() const noexcept { return true; }
    const finite_field_spec& spec() const { return *spec_; }
    const finite_field_spec* spec_ptr() const noexcept { return spec_; }

    std::string name() const
    {
        if (spec_->degree == 1)
            return "F_" + std::to_string(spec_->p);
        return "F_" + std::to_string(spec_->p) + "^" + std::to_string(spec_->degree);
    }

    friend bool operator==(const finite_field& a, const finite_field& b) noexcept { return a.spec_ == b.spec_; }

private:
    const finite_field_spec* spec_ = nullptr;
};

// ---------------------------------------------------------------------------
// Cyclotomic fields
// ---------------------------------------------------------------------------

struct cyclotomic_spec {
    unsigned conductor = 1;
    unsigned dim = 1;                  // phi(conductor)
    std::vector<mpz_class> modulus;    // Phi_n, monic, size dim + 1
};

class cyclotomic_field {
public:
    using spec_type = cyclotomic_spec;

    class element {
    public:
        element() = default;
        element(const cyclotomic_spec* spec, std::vector<mpq_class> c) : spec_(spec), c_(std::move(c)) {}

        cyclotomic_field field() const { return cyclotomic_field(spec_); }
        const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
        bool is_zero() const
        {
            return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
        }
        bool is_one() const
        {
            if (c_.empty() || c_[0] != 1)
                return false;
            return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
        }

        element operator-() const
        {
            element r = *this;
            for (auto& x : r.c_)
                x = -x;
            return r;
        }
        element& operator+=(const element& o)
        {
            check(o);
            for (std::size_t i = 0; i < c_.size(); ++i)
                c_[i] += o.c_[i];
            return *this;
        }
        element& operator-=(const element& o)
        {
            check(o);
            for (std::size_t i = 0; i < c_.size(); ++i)
                c_[i] -= o.c_[i];
            return *this;
        }
        element& operator*=(const element& o)
        {
            check(o);
            const std::size_t n = spec_->dim;
            std::vector<mpq_class> r(2 * n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (sgn(c_[i]) == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(o.c_[j]) != 0)
                        r[i + j] += c_[i] * o.c_[j];
            }
            for (std::size_t k = r.size(); k-- > n;) {
                if (sgn(r[k]) == 0)
                    continue;
                const mpq_class c = r[k];
                for (std::size_t j = 0; j <= n; ++j)
                    r[k - n + j] -= c * spec_->modulus[j];
            }
            r.resize(n);
            c_ = std::move(r);
            return *this;
        }
        element& operator/=(const element& o)
        {
            check(o);
            return *this *= o.inverse();
        }
        friend element operator+(element a, const element& b) { return a += b; }
        friend element operator-(element a, const element& b) { return a -= b; }
        friend element operator*(element a, const element& b) { return a *= b; }
        friend element operator/(element a, const element& b) { return a /= b; }

        /// Inverse by extended gcd against Phi_n over Q.
        element inverse() const
        {
            if (is_zero())
                throw error(errc::division_by_zero, "inverse of zero in Q(zeta_"
                                                        + std::to_string(spec_->conductor) + ")");
            detail::q_poly r0(spec_->modulus.begin(), spec_->modulus.end());
            detail::q_poly r1 = c_;
            detail::trim(r1);
            detail::q_poly s0{}, s1{mpq_class(1)};
            while (!r1.empty()) {
                auto [q, r] = detail::q_divmod(r0, r1);
                r0 = std::move(r1);
                r1 = std::move(r);
                auto s2 = detail::q_sub(s0, detail::q_mul(q, s1));
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            const mpq_class c = 1 / r0[0];
            std::vector<mpq_class> out(spec_->dim);
            for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i)
                out[i] = s0[i] * c;
            return {spec_, std::move(out)};
        }

        friend bool operator==(const element& a, const element& b)
        {
            return a.spec_ == b.spec_ && a.c_ == b.c_;
        }
        friend bool operator<(const element& a, const element& b)
        {
            for (std::size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
                if (a.c_[i] < b.c_[i])
                    return true;
                if (b.c_[i] < a.c_[i])
                    return false;
            }
            return a.c_.size() < b.c_.size();
        }

        const cyclotomic_spec* spec() const noexcept { return spec_; }

    private:
        void check(const element& o) const
        {
            if (spec_ != o.spec_ || spec_ == nullptr)
                throw error(errc::spec_mismatch, "operands belong to different fields");
        }

        const cyclotomic_spec* spec_ = nullptr;
        std::vector<mpq_class> c_;
    };

    cyclotomic_field() = default;
    explicit cyclotomic_field(const cyclotomic_spec* spec) : spec_(spec) {}

    element zero() const { return {spec_, std::vector<mpq_class>(spec_->dim)}; }
    element one() const { return from_int(1); }
    element from_int(std::int64_t v) const { return from_rational(mpq_class(static_cast<long>(v))); }
    element from_mpz(const mpz_class& v) const { return from_rational(mpq_class(v)); }
    element from_rational(const mpq_class& v) const
    {
        std::vector<mpq_class> c(spec_->dim);
        c[0] = v;
        c[0].canonicalize();
        return {spec_, std::move(c)};
    }
    element generator() const
    {
        if (spec_->dim == 1)
            return from_mpz(-spec_->modulus[0]);
        std::vector<mpq_class> c(spec_->dim);
        c[1] = 1;
        return {spec_, std::move(c)};
    }
    element from_coeffs(std::vector<mpq_class> c) const
    {
        c.resize(spec_->dim);
        return {spec_, std::move(c)};
    }

    std::uint64_t characteristic() const { return 0; }
    std::uint64_t size() const { return 0; }
    unsigned conductor() const { return spec_->conductor; }
    unsigned degree() const { return spec_->dim; }
    bool is_finite() const noexcept { return false; }
    const cyclotomic_spec& spec() const { return *spec_; }
    const cyclotomic_spec* spec_ptr() const noexcept { return spec_; }

    std::string name() const { return "Q(zeta_" + std::to_string(spec_->conductor) + ")"; }

    friend bool operator==(const cyclotomic_field& a, const cyclotomic_field& b) noexcept
    {
        return a.spec_ == b.spec_;
    }

private:
    const cyclotomic_spec* spec_ = nullptr;
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

enum class field_kind { finite, cyclotomic };

struct field_description {
    field_kind kind = field_kind::finite;
    std::uint64_t p = 0;
    unsigned ext_degree = 1;
    std::vector<std::uint64_t> modulus; ///< empty selects the first irreducible monic
    unsigned conductor = 0;
};

using any_field = std::variant<finite_field, cyclotomic_field>;

namespace detail {

class spec_registry {
public:
    static spec_registry& instance()
    {
        static spec_registry registry;
        return registry;
    }

    template <class Spec, class Make>
    const Spec* intern(std::map<std::string, std::unique_ptr<Spec>>& table, const std::string& key, Make&& make)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = table.find(key);
        if (it != table.end())
            return it->second.get();
        auto spec = std::make_unique<Spec>(make());
        const Spec* raw = spec.get();
        table.emplace(key, std::move(spec));
        return raw;
    }

    std::map<std::string, std::unique_ptr<finite_field_spec>> finite;
    std::map<std::string, std::unique_ptr<cyclotomic_spec>> cyclotomic;

private:
    std::mutex mutex_;
};

inline void build_tables(finite_field_spec& s)
{
    if (s.order > finite_field_spec::table_limit || s.order < 3)
        return;
    const std::uint64_t n = s.order - 1;
    const auto factors = prime_factors(n);
    auto slow_pow = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e > 0) {
            if (e & 1)
                r = s.mul_poly(r, a);
            a = s.mul_poly(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t g = 0;
    for (std::uint64_t c = 2; c < s.order && g == 0; ++c) {
        bool primitive = true;
        for (auto f : factors)
            if (slow_pow(c, n / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            g = c;
    }
    if (g == 0)
        return;
    s.exp_table.resize(n);
    s.log_table.assign(s.order, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        s.exp_table[i] = static_cast<std::uint32_t>(x);
        s.log_table[x] = static_cast<std::uint32_t>(i);
        x = s.mul_poly(x, g);
    }
}

} // namespace detail

/// F_p[z]/(modulus). An empty modulus selects the first monic irreducible polynomial of
/// the requested degree in code order of its lower coefficients.
inline finite_field make_finite_field(std::uint64_t p, unsigned ext_degree, std::vector<std::uint64_t> modulus = {})
{
    if (!detail::is_prime(p) || p >= (std::uint64_t{1} << 31))
        throw error(errc::non_prime_characteristic, std::to_string(p) + " is not a supported prime");
    if (ext_degree < 1)
        throw error(errc::invalid_argument, "extension degree must be at least 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < ext_degree; ++i) {
        if (order > (std::uint64_t{1} << 62) / p)
            throw error(errc::invalid_argument, "field order exceeds 2^62");
        order *= p;
    }
    if (modulus.empty()) {
        const std::uint64_t lower = order; // p^ext_degree choices of lower coefficients
        for (std::uint64_t code = 0; code < lower; ++code) {
            detail::fp_poly cand(ext_degree + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < ext_degree; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[ext_degree] = 1;
            if (detail::fp_is_irreducible(cand, p)) {
                modulus = cand;
                break;
            }
        }
    } else {
        if (modulus.size() != ext_degree + 1 || modulus.back() != 1)
            throw error(errc::invalid_argument, "modulus must be monic of degree " + std::to_string(ext_degree));
        for (auto c : modulus)
            if (c >= p)
                throw error(errc::invalid_argument, "modulus coefficient out of range");
        if (!detail::fp_is_irreducible(modulus, p))
            throw error(errc::reducible_modulus, "supplied modulus is reducible over F_" + std::to_string(p));
    }

    std::string key = std::to_string(p) + ":" + std::to_string(ext_degree) + ":";
    for (auto c : modulus)
        key += std::to_string(c) + ",";
    auto& reg = detail::spec_registry::instance();
    const finite_field_spec* spec = reg.intern(reg.finite, key, [&] {
        finite_field_spec s;
        s.p = p;
        s.degree = ext_degree;
        s.order = order;
        s.modulus = modulus;
        s.p_pow.resize(ext_degree + 1);
        s.p_pow[0] = 1;
        for (unsigned i = 1; i <= ext_degree; ++i)
            s.p_pow[i] = s.p_pow[i - 1] * p;
        detail::build_tables(s);
        return s;
    });
    return finite_field(spec);
}

inline cyclotomic_field make_cyclotomic_field(unsigned conductor)
{
    if (conductor < 1)
        throw error(errc::invalid_argument, "conductor must be at least 1");
    auto& reg = detail::spec_registry::instance();
    const cyclotomic_spec* spec = reg.intern(reg.cyclotomic, std::to_string(conductor), [&] {
        cyclotomic_spec s;
        s.conductor = conductor;
        s.modulus = detail::cyclotomic_polynomial(conductor);
        s.dim = static_cast<unsigned>(s.modulus.size() - 1);
        return s;
    });
    return cyclotomic_field(spec);
}

inline any_field make_field(const field_description& d)
{
    switch (d.kind) {
    case field_kind::finite: return make_finite_field(d.p, d.ext_degree, d.modulus);
    case field_kind::cyclotomic: return make_cyclotomic_field(d.conductor);
    }
    throw error(errc::unsupported_kind, "unknown field kind");
}

inline field_description describe(const finite_field& f)
{
    field_description d;
    d.kind = field_kind::finite;
    d.p = f.characteristic();
    d.ext_degree = f.degree();
    d.modulus = f.spec().modulus;
    return d;
}

inline field_description describe(const cyclotomic_field& f)
{
    field_description d;
    d.kind = field_kind::cyclotomic;
    d.conductor = f.conductor();
    return d;
}

// ---------------------------------------------------------------------------
// Generic helpers
// ---------------------------------------------------------------------------

template <class E>
    requires requires(const E& x) {
        { x.field().one() } -> std::same_as<E>;
    }
E pow(E base, std::uint64_t e)
{
    E result = base.field().one();
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

/// Exact multiplicative order test: x^r = 1 and x^(r/s) != 1 for each prime s | r.
template <class E>
bool has_exact_order(const E& x, std::uint64_t r)
{
    if (x.is_zero() || !pow(x, r).is_one())
        return false;
    for (auto s : detail::prime_factors(r))
        if (pow(x, r / s).is_one())
            return false;
    return true;
}

/// First element of exact multiplicative order r in code order.
inline finite_field::element root_of_unity(const finite_field& f, std::uint64_t r)
{
    if (r == 0 || r % f.characteristic() == 0 || (f.size() - 1) % r != 0)
        throw error(errc::no_such_root, f.name() + " has no element of order " + std::to_string(r));
    for (std::uint64_t code = 1; code < f.size(); ++code) {
        auto x = f.from_code(code);
        if (has_exact_order(x, r))
            return x;
    }
    throw error(errc::no_such_root, f.name() + " has no element of order " + std::to_string(r));
}

/// z^(n/r) when r | n; for odd n also (-z)^(2n/r) when r | 2n.
inline cyclotomic_field::element root_of_unity(const cyclotomic_field& f, std::uint64_t r)
{
    const std::uint64_t n = f.conductor();
    if (r == 0)
        throw error(errc::no_such_root, "order must be positive");
    if (n % r == 0)
        return pow(f.generator(), n / r);
    if (n % 2 == 1 && (2 * n) % r == 0)
        return pow(-f.generator(), 2 * n / r);
    throw error(errc::no_such_root, f.name() + " has no element of order " + std::to_string(r));
}

} // namespace galois_forge

#endif // GALOIS_FORGE_EXACT_FIELDS_HPP
