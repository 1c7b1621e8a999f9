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
 * @file pgl2.hpp
 * @brief Points of the projective line, Moebius maps, and finite subgroups of PGL(2).
 *
 * Everything here is compared through canonical forms:
 * - a point (a : b) is scaled so that b = 1, or is (1 : 0) at infinity;
 * - a matrix is scaled so that its first nonzero entry in row-major order is 1.
 *
 * Subgroups are produced by breadth-first closure of a generator list and are
 * fingerprinted by (order, sorted multiset of element orders), which is enough to
 * tell apart the small groups this toolkit works with.
 */

#ifndef GALOIS_FORGE_PGL2_HPP
#define GALOIS_FORGE_PGL2_HPP

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galois_forge/poly.hpp"

namespace galois_forge {

template <exact_field Field>
class proj_point {
public:
    using element = typename Field::element;

    proj_point(element a, element b) : a_(std::move(a)), b_(std::move(b))
    {
        if (a_.is_zero() && b_.is_zero())
            throw error(errc::invalid_argument, "(0 : 0) is not a point of the projective line");
        if (b_.is_zero()) {
            a_ = a_.field().one();
        } else if (!b_.is_one()) {
            a_ = a_ / b_;
            b_ = b_.field().one();
        }
    }

    static proj_point affine(const element& a) { return proj_point(a, a.field().one()); }
    static proj_point infinity(const Field& f) { return proj_point(f.one(), f.zero()); }

    const element& a() const noexcept { return a_; }
    const element& b() const noexcept { return b_; }
    bool is_infinity() const { return b_.is_zero(); }
    Field field() const { return a_.field(); }

    friend bool operator==(const proj_point& p, const proj_point& q) { return p.a_ == q.a_ && p.b_ == q.b_; }
    friend bool operator!=(const proj_point& p, const proj_point& q) { return !(p == q); }
    /// Affine points by coordinate representation, infinity last.
    friend bool operator<(const proj_point& p, const proj_point& q)
    {
        if (p.is_infinity() != q.is_infinity())
            return q.is_infinity();
        return p.a_ < q.a_;
    }

private:
    element a_;
    element b_;
};

/// Element of PGL(2) acting by x -> (m00 x + m01) / (m10 x + m11).
template <exact_field Field>
class moebius {
public:
    using element = typename Field::element;
    using point = proj_point<Field>;

    moebius(element m00, element m01, element m10, element m11) : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)}
    {
        if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero())
            throw error(errc::invalid_argument, "singular matrix is not an element of PGL(2)");
        canonicalize();
    }

    static moebius identity(const Field& f) { return moebius(f.one(), f.zero(), f.zero(), f.one()); }

    const element& operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
    const std::array<element, 4>& entries() const noexcept { return m_; }
    Field field() const { return m_[0].field(); }

    point apply(const point& q) const
    {
        return point(m_[0] * q.a() + m_[1] * q.b(), m_[2] * q.a() + m_[3] * q.b());
    }

    bool is_identity() const { return m_[1].is_zero() && m_[2].is_zero() && m_[3].is_one(); }

    moebius inverse() const { return moebius(m_[3], -m_[1], -m_[2], m_[0]); }

    /// Composition: (a * b)(x) = a(b(x)).
    friend moebius operator*(const moebius& a, const moebius& b)
    {
        const auto& x = a.m_;
        const auto& y = b.m_;
        return moebius(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                       x[2] * y[1] + x[3] * y[3]);
    }

    friend bool operator==(const moebius& a, const moebius& b) { return a.m_ == b.m_; }
    friend bool operator<(const moebius& a, const moebius& b)
    {
        return std::lexicographical_compare(a.m_.begin(), a.m_.end(), b.m_.begin(), b.m_.end());
    }

private:
    void canonicalize()
    {
        for (const auto& e : m_) {
            if (e.is_zero())
                continue;
            if (!e.is_one()) {
                const element inv = e.field().one() / e;
                for (auto& x : m_)
                    x = x * inv;
            }
            return;
        }
    }

    std::array<element, 4> m_;
};

/// Closure cap used when none is given; `GALOIS_FORGE_CAP` overrides the default 10000.
inline std::size_t default_closure_cap()
{
    if (const char* env = std::getenv("GALOIS_FORGE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 10000;
}

/// A finite subgroup of PGL(2). Elements are kept in closure (BFS) order with the
/// identity first; membership queries go through a sorted index.
template <exact_field Field>
class subgroup {
public:
    using element_type = moebius<Field>;

    subgroup(Field field, std::vector<element_type> elements, std::vector<element_type> generators)
        : field_(field), elements_(std::move(elements)), generators_(std::move(generators)), sorted_(elements_)
    {
        std::sort(sorted_.begin(), sorted_.end());
    }

    const Field& field() const noexcept { return field_; }
    const std::vector<element_type>& elements() const noexcept { return elements_; }
    const std::vector<element_type>& generators() const noexcept { return generators_; }
    std::size_t order() const noexcept { return elements_.size(); }

    bool contains(const element_type& m) const { return std::binary_search(sorted_.begin(), sorted_.end(), m); }

    /// Elements in ascending order.
    const std::vector<element_type>& sorted_elements() const noexcept { return sorted_; }

    /// Same element set, regardless of generators or enumeration order.
    bool same_elements(const subgroup& o) const { return sorted_ == o.sorted_; }

private:
    Field field_;
    std::vector<element_type> elements_;
    std::vector<element_type> generators_;
    std::vector<element_type> sorted_;
};

/// Every point of P^1(F_q): affine points by element code, then infinity.
inline std::vector<proj_point<finite_field>> rational_points(const finite_field& f)
{
    std::vector<proj_point<finite_field>> out;
    out.reserve(f.size() + 1);
    for (std::uint64_t c = 0; c < f.size(); ++c)
        out.push_back(proj_point<finite_field>::affine(f.from_code(c)));
    out.push_back(proj_point<finite_field>::infinity(f));
    return out;
}

/// Breadth-first closure of `gens` under composition. Throws not_finite_within_cap
/// when more than `cap` distinct elements appear.
template <exact_field Field>
subgroup<Field> generate(const Field& field, const std::vector<moebius<Field>>& gens,
                         std::size_t cap = default_closure_cap())
{
    using M = moebius<Field>;
    for (const auto& g : gens)
        if (!(g.field() == field))
            throw error(errc::field_mismatch, "generator over a different field");
    std::vector<M> elements{M::identity(field)};
    std::set<M> seen{elements.front()};
    std::deque<M> frontier{elements.front()};
    while (!frontier.empty()) {
        const M cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            M next = g * cur;
            if (seen.insert(next).second) {
                if (elements.size() >= cap)
                    throw error(errc::not_finite_within_cap,
                                "closure exceeds " + std::to_string(cap) + " elements");
                elements.push_back(next);
                frontier.push_back(std::move(next));
            }
        }
    }
    return subgroup<Field>(field, std::move(elements), gens);
}

/// G . q, sorted and deduplicated.
template <exact_field Field>
std::vector<proj_point<Field>> orbit(const subgroup<Field>& g, const proj_point<Field>& q)
{
    std::vector<proj_point<Field>> out;
    out.reserve(g.order());
    for (const auto& m : g.elements())
        out.push_back(m.apply(q));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <exact_field Field>
subgroup<Field> stabilizer(const subgroup<Field>& g, const proj_point<Field>& q)
{
    std::vector<moebius<Field>> fix;
    for (const auto& m : g.elements())
        if (m.apply(q) == q)
            fix.push_back(m);
    auto gens = fix;
    return subgroup<Field>(g.field(), std::move(fix), std::move(gens));
}

/// |G(q)| without materializing the subgroup.
template <exact_field Field>
std::size_t stabilizer_order(const subgroup<Field>& g, const proj_point<Field>& q)
{
    return static_cast<std::size_t>(
        std::count_if(g.elements().begin(), g.elements().end(), [&](const auto& m) { return m.apply(q) == q; }));
}

/// G1 and G2 share only the identity.
template <exact_field Field>
bool intersect_trivial(const subgroup<Field>& g1, const subgroup<Field>& g2)
{
    if (std::gcd(g1.order(), g2.order()) == 1)
        return true;
    const auto& small = g1.order() <= g2.order() ? g1 : g2;
    const auto& large = g1.order() <= g2.order() ? g2 : g1;
    for (const auto& m : small.elements())
        if (!m.is_identity() && large.contains(m))
            return false;
    return true;
}

/// First non-identity element common to both groups, if any.
template <exact_field Field>
std::optional<moebius<Field>> common_nontrivial_element(const subgroup<Field>& g1, const subgroup<Field>& g2)
{
    for (const auto& m : g1.elements())
        if (!m.is_identity() && g2.contains(m))
            return m;
    return std::nullopt;
}

template <exact_field Field>
std::size_t element_order(const moebius<Field>& m, std::size_t cap = default_closure_cap())
{
    moebius<Field> acc = m;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (acc.is_identity())
            return k;
        acc = acc * m;
    }
    throw error(errc::not_finite_within_cap, "element order exceeds " + std::to_string(cap));
}

struct group_fingerprint {
    std::size_t order = 0;
    std::vector<std::size_t> element_orders; ///< sorted ascending

    friend bool operator==(const group_fingerprint&, const group_fingerprint&) = default;

    std::size_t count_of_order(std::size_t k) const
    {
        return static_cast<std::size_t>(std::count(element_orders.begin(), element_orders.end(), k));
    }
};

namespace detail {

inline group_fingerprint dihedral_fingerprint(std::size_t m)
{
    group_fingerprint fp;
    fp.order = 2 * m;
    for (std::size_t k = 0; k < m; ++k)
        fp.element_orders.push_back(m / std::gcd(k, m));
    for (std::size_t k = 0; k < m; ++k)
        fp.element_orders.push_back(2);
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    return fp;
}

inline group_fingerprint fingerprint_from_counts(std::size_t order,
                                                 std::initializer_list<std::pair<std::size_t, std::size_t>> counts)
{
    group_fingerprint fp;
    fp.order = order;
    for (auto [k, n] : counts)
        fp.element_orders.insert(fp.element_orders.end(), n, k);
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    return fp;
}

} // namespace detail

/// Name of a fingerprint when it determines the group among groups of order <= 24,
/// otherwise "unidentified".
///
///   cyclic             -> "Z/nZ"
///   (6, {1,2,2,2,3,3}) -> "S3" (= AGL(1,F_3) = D_3)
///   dihedral 2m, m>=4  -> "D_m"
///   (12, {1,2^3,3^8})  -> "A4"
///   (24, {1,2^9,3^8,4^6}) -> "S4"
///   exponent p, order p^k -> "(Z/pZ)^k"
inline std::string group_name(const group_fingerprint& fp)
{
    if (fp.order == 0)
        return "unidentified";
    if (fp.order == 1)
        return "trivial";
    if (!fp.element_orders.empty() && fp.element_orders.back() == fp.order)
        return "Z/" + std::to_string(fp.order) + "Z";
    if (fp.order > 24)
        return "unidentified";
    if (fp == detail::dihedral_fingerprint(3))
        return "S3";
    if (fp.order % 2 == 0 && fp.order >= 8 && fp == detail::dihedral_fingerprint(fp.order / 2))
        return "D_" + std::to_string(fp.order / 2);
    if (fp == detail::fingerprint_from_counts(12, {{1, 1}, {2, 3}, {3, 8}}))
        return "A4";
    if (fp == detail::fingerprint_from_counts(24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}))
        return "S4";
    const std::size_t e = fp.element_orders.back();
    if (detail::is_prime(e) && fp.count_of_order(e) == fp.order - 1) {
        std::size_t k = 0;
        for (std::size_t n = fp.order; n > 1 && n % e == 0; n /= e)
            ++k;
        return "(Z/" + std::to_string(e) + "Z)^" + std::to_string(k);
    }
    return "unidentified";
}

template <exact_field Field>
group_fingerprint fingerprint(const subgroup<Field>& g)
{
    group_fingerprint fp;
    fp.order = g.order();
    for (const auto& m : g.elements())
        fp.element_orders.push_back(element_order(m, g.order()));
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    return fp;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_PGL2_HPP
