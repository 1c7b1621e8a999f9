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
 * @file plane_model.hpp
 * @brief The map phi = (f : g : 1) and first-principles checks of its geometry.
 *
 * A model stores phi as three binary forms A, B, C of a common degree d, written as
 * univariate polynomials in t with the form's value at (1 : 0) being the t^d
 * coefficient. Pullbacks of lines, order sequences and fibers are all computed on
 * the parameter line from these forms, without reference to the criterion's
 * predictions.
 */

#ifndef GALOIS_FORGE_PLANE_MODEL_HPP
#define GALOIS_FORGE_PLANE_MODEL_HPP

#include <array>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "galois_forge/criterion.hpp"
#include "galois_forge/format.hpp"
#include "galois_forge/quotient_maps.hpp"

namespace galois_forge {

/// Point of P^2, scaled so that its first nonzero coordinate is 1.
template <exact_field Field>
class plane_point {
public:
    using element = typename Field::element;

    plane_point(element x, element y, element z) : c_{std::move(x), std::move(y), std::move(z)}
    {
        for (const auto& e : c_) {
            if (e.is_zero())
                continue;
            if (!e.is_one()) {
                const element inv = e.field().one() / e;
                for (auto& v : c_)
                    v = v * inv;
            }
            return;
        }
        throw error(errc::invalid_argument, "(0 : 0 : 0) is not a point of the plane");
    }

    const element& operator[](std::size_t i) const { return c_[i]; }
    const std::array<element, 3>& coords() const noexcept { return c_; }

    friend bool operator==(const plane_point& a, const plane_point& b) { return a.c_ == b.c_; }
    friend bool operator!=(const plane_point& a, const plane_point& b) { return !(a == b); }

private:
    std::array<element, 3> c_;
};

template <exact_field Field>
struct plane_model {
    using element = typename Field::element;
    using point = proj_point<Field>;

    rational_function<Field> f;
    rational_function<Field> g;
    poly<Field> a; ///< X = A, Y = B, Z = C as binary forms of degree `degree`
    poly<Field> b;
    poly<Field> c;
    int degree = 0;
    point p1;
    point p2;

    const Field& field() const { return a.field(); }

    /// Value of a degree-`degree` form at q.
    element eval_form(const poly<Field>& h, const point& q) const
    {
        if (q.is_infinity())
            return h.coeff(static_cast<std::size_t>(degree));
        return h(q.a());
    }

    plane_point<Field> image(const point& q) const
    {
        return plane_point<Field>(eval_form(a, q), eval_form(b, q), eval_form(c, q));
    }

    /// x A + y B + z C
    poly<Field> line_form(const element& x, const element& y, const element& z) const
    {
        return x * a + y * b + z * c;
    }

    /// Vanishing order at q of a form of degree `degree` (which must be nonzero).
    int form_order(const poly<Field>& h, const point& q) const
    {
        if (h.is_zero())
            throw error(errc::line_contains_curve, "form vanishes identically");
        if (q.is_infinity())
            return degree - h.degree();
        return h.root_multiplicity(q.a());
    }
};

/// Clears denominators of (f : g : 1) into coprime forms. No checks against a report.
template <exact_field Field>
plane_model<Field> make_model(const rational_function<Field>& f, const rational_function<Field>& g,
                              const proj_point<Field>& p1, const proj_point<Field>& p2)
{
    const poly<Field> h = gcd(f.den(), g.den());
    poly<Field> c = f.den() * (g.den() / h);
    poly<Field> a = f.num() * (c / f.den());
    poly<Field> b = g.num() * (c / g.den());
    const poly<Field> common = gcd(gcd(a, b), c);
    if (common.degree() > 0) {
        a = a / common;
        b = b / common;
        c = c / common;
    }
    const int d = std::max({a.degree(), b.degree(), c.degree()});
    return plane_model<Field>{f, g, std::move(a), std::move(b), std::move(c), d, p1, p2};
}

/// phi = (f : g : 1) with (f)_inf = sum_{G1} s(P2) and (g)_inf = sum_{G2} t(P1).
template <exact_field Field>
plane_model<Field> build_model(const configuration<Field>& cfg, const criterion_report<Field>& report)
{
    if (!report.passes())
        throw error(errc::invalid_argument, "cannot build a model from a failing configuration");
    const auto f = generator_with_pole_fiber(cfg.g1, cfg.p2);
    const auto g = generator_with_pole_fiber(cfg.g2, cfg.p1);
    auto model = make_model(f, g, cfg.p1, cfg.p2);
    if (model.degree != report.degree)
        throw error(errc::degree_mismatch, "model has degree " + std::to_string(model.degree) + ", criterion predicts "
                                               + std::to_string(report.degree));
    const Field& k = cfg.field;
    if (model.image(cfg.p1) != plane_point<Field>(k.zero(), k.one(), k.zero()))
        throw error(errc::image_not_as_predicted, "phi(P1) is not (0:1:0)");
    if (model.image(cfg.p2) != plane_point<Field>(k.one(), k.zero(), k.zero()))
        throw error(errc::image_not_as_predicted, "phi(P2) is not (1:0:0)");
    return model;
}

// ---------------------------------------------------------------------------
// Pullbacks of lines
// ---------------------------------------------------------------------------

/// Zeros of a line form on the parameter line. Roots outside the coefficient field
/// (or outside the candidate list, when the field is too large to scan) stay in
/// `residual`, so rational.degree() + residual.degree() always equals the model degree.
template <exact_field Field>
struct pullback {
    divisor<Field> rational;
    poly<Field> residual;

    std::int64_t degree() const { return rational.degree() + residual.degree(); }
};

namespace detail {

constexpr std::uint64_t scan_limit = std::uint64_t{1} << 20;

template <exact_field Field>
std::vector<typename Field::element> root_candidates(const Field& field,
                                                     const std::vector<proj_point<Field>>& extra)
{
    std::vector<typename Field::element> out;
    if constexpr (std::is_same_v<Field, finite_field>) {
        if (field.size() <= scan_limit) {
            for (std::uint64_t code = 0; code < field.size(); ++code)
                out.push_back(field.from_code(code));
            return out;
        }
    }
    for (const auto& p : extra)
        if (!p.is_infinity())
            out.push_back(p.a());
    return out;
}

} // namespace detail

/// Divisor of zeros of x A + y B + z C.
template <exact_field Field>
pullback<Field> line_pullback(const plane_model<Field>& model, const typename Field::element& x,
                              const typename Field::element& y, const typename Field::element& z,
                              const std::vector<proj_point<Field>>& candidates = {})
{
    poly<Field> h = model.line_form(x, y, z);
    if (h.is_zero())
        throw error(errc::line_contains_curve, "the line contains the whole image");
    const Field& k = model.field();
    pullback<Field> out{{}, poly<Field>(k)};
    if (h.degree() < model.degree)
        out.rational.add(proj_point<Field>::infinity(k), model.degree - h.degree());
    for (const auto& r : detail::root_candidates(k, candidates)) {
        if (h.degree() <= 0)
            break;
        if (!h(r).is_zero())
            continue;
        const poly<Field> lin = poly<Field>::linear_root(r);
        int m = 0;
        for (;;) {
            auto [q, rem] = h.divmod(lin);
            if (!rem.is_zero())
                break;
            h = std::move(q);
            ++m;
        }
        out.rational.add(proj_point<Field>::affine(r), m);
    }
    out.residual = h.monic();
    return out;
}

// ---------------------------------------------------------------------------
// Order sequences
// ---------------------------------------------------------------------------

struct order_sequence {
    int alpha = 0;
    int beta = 0;
    friend bool operator==(const order_sequence&, const order_sequence&) = default;
};

/// (alpha, beta) at q from the pencil of lines through phi(q).
template <exact_field Field>
order_sequence order_sequence_at(const plane_model<Field>& model, const proj_point<Field>& q)
{
    using P = poly<Field>;
    const auto img = model.image(q);
    std::size_t j = 0;
    while (img[j].is_zero())
        ++j;

    // lines e_i * P_j - e_j * P_i for the two indices i != j
    const std::array<const P*, 3> forms{&model.a, &model.b, &model.c};
    std::vector<P> local;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == j)
            continue;
        P h = img[j] * (*forms[i]) - img[i] * (*forms[j]);
        if (h.is_zero())
            throw error(errc::line_contains_curve, "a line through the image point contains the curve");
        local.push_back(q.is_infinity() ? h.reversed(static_cast<std::size_t>(model.degree)) : h.taylor_shift(q.a()));
    }
    auto low = [](const P& h) {
        int k = 0;
        while (h.coeffs()[static_cast<std::size_t>(k)].is_zero())
            ++k;
        return k;
    };
    const int o0 = low(local[0]);
    const int o1 = low(local[1]);
    if (o0 != o1)
        return {std::min(o0, o1), std::max(o0, o1)};
    const auto k = static_cast<std::size_t>(o0);
    const P combo = local[0].coeffs()[k] * local[1] - local[1].coeffs()[k] * local[0];
    if (combo.is_zero())
        throw error(errc::line_contains_curve, "a line through the image point contains the curve");
    return {o0, low(combo)};
}

/// Parameter points among `candidates` (all rational points by default, when scannable) mapping to `target`.
template <exact_field Field>
std::vector<proj_point<Field>> fiber(const plane_model<Field>& model, const plane_point<Field>& target,
                                     const std::vector<proj_point<Field>>& candidates)
{
    std::vector<proj_point<Field>> out;
    for (const auto& q : candidates)
        if (model.image(q) == target)
            out.push_back(q);
    return out;
}

/// m_{phi(P)} as the sum of alpha over the fiber.
template <exact_field Field>
int multiplicity_from_fiber(const plane_model<Field>& model, const std::vector<proj_point<Field>>& fib)
{
    int m = 0;
    for (const auto& q : fib)
        m += order_sequence_at(model, q).alpha;
    return m;
}

/// I_{phi(P)}(phi(X), L) as the sum over the fiber of ord of the pullback of L.
template <exact_field Field>
int intersection_multiplicity(const plane_model<Field>& model, const std::vector<proj_point<Field>>& fib,
                              const typename Field::element& x, const typename Field::element& y,
                              const typename Field::element& z)
{
    const auto h = model.line_form(x, y, z);
    int total = 0;
    for (const auto& q : fib)
        total += model.form_order(h, q);
    return total;
}

// ---------------------------------------------------------------------------
// Galois verification
// ---------------------------------------------------------------------------

enum class galois_issue_kind { invariance_failure, degree_failure, divisor_identity_failure };

inline std::string to_string(galois_issue_kind k)
{
    switch (k) {
    case galois_issue_kind::invariance_failure:
        return "InvarianceFailure";
    case galois_issue_kind::degree_failure:
        return "DegreeFailure";
    case galois_issue_kind::divisor_identity_failure:
        return "DivisorIdentityFailure";
    }
    return "Unknown";
}

struct galois_issue {
    galois_issue_kind kind;
    std::string witness;
};

struct galois_verification {
    bool invariance = true;     ///< f o s = f on G1, g o t = g on G2
    bool map_degrees = true;    ///< deg f = |G1|, deg g = |G2|
    bool ramification = true;   ///< e_Q(f) = |G1(Q)|, e_Q(g) = |G2(Q)| on O
    bool divisor_identity = true;
    std::vector<galois_issue> issues;

    bool ok() const { return issues.empty(); }
};

template <exact_field Field>
galois_verification verify_galois(const plane_model<Field>& model, const configuration<Field>& cfg,
                                  const criterion_report<Field>& report)
{
    galois_verification v;
    auto name_m = [](const moebius<Field>& m) { return to_text(m); };
    auto name_p = [](const proj_point<Field>& p) { return to_text(p); };

    auto invariance = [&](const rational_function<Field>& r, const subgroup<Field>& grp, const char* which) {
        for (std::size_t i = 0; i < grp.order(); ++i)
            if (!(compose_moebius(r, grp.elements()[i]) == r)) {
                v.invariance = false;
                v.issues.push_back({galois_issue_kind::invariance_failure,
                                    std::string(which) + " not invariant under " + name_m(grp.elements()[i])});
                return;
            }
    };
    invariance(model.f, cfg.g1, "f");
    invariance(model.g, cfg.g2, "g");

    if (model.f.map_degree() != static_cast<int>(cfg.g1.order())) {
        v.map_degrees = false;
        v.issues.push_back({galois_issue_kind::degree_failure, "deg f = " + std::to_string(model.f.map_degree())
                                                                   + " but |G1| = " + std::to_string(cfg.g1.order())});
    }
    if (model.g.map_degree() != static_cast<int>(cfg.g2.order())) {
        v.map_degrees = false;
        v.issues.push_back({galois_issue_kind::degree_failure, "deg g = " + std::to_string(model.g.map_degree())
                                                                   + " but |G2| = " + std::to_string(cfg.g2.order())});
    }

    for (const auto& q : report.bs.orbits.all) {
        const int e1 = ramification_index(model.f, q);
        const int e2 = ramification_index(model.g, q);
        const auto s1 = static_cast<int>(stabilizer_order(cfg.g1, q));
        const auto s2 = static_cast<int>(stabilizer_order(cfg.g2, q));
        if (e1 != s1 || e2 != s2) {
            v.ramification = false;
            v.issues.push_back({galois_issue_kind::degree_failure,
                                "ramification at " + name_p(q) + ": e(f) = " + std::to_string(e1) + ", |G1(Q)| = "
                                    + std::to_string(s1) + ", e(g) = " + std::to_string(e2)
                                    + ", |G2(Q)| = " + std::to_string(s2)});
        }
    }

    const Field& k = cfg.field;
    const auto z_pull = line_pullback(model, k.zero(), k.zero(), k.one(), report.bs.orbits.all);
    if (!(report.d_lhs == report.d_rhs)) {
        v.divisor_identity = false;
        v.issues.push_back({galois_issue_kind::divisor_identity_failure, "Bs_P1 + sum G1.P2 != Bs_P2 + sum G2.P1"});
    }
    if (z_pull.residual.degree() > 0 || !(z_pull.rational == report.d_lhs)) {
        v.divisor_identity = false;
        std::string w = "pullback of Z=0 differs from D";
        if (auto bad = first_violation(report.d_lhs, z_pull.rational))
            w += " at " + name_p(*bad);
        else if (auto bad2 = first_violation(z_pull.rational, report.d_lhs))
            w += " at " + name_p(*bad2);
        v.issues.push_back({galois_issue_kind::divisor_identity_failure, w});
    }
    return v;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_PLANE_MODEL_HPP
