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
 * @file search.hpp
 * @brief Exhaustive search for passing configurations over a finite space.
 *
 * Space documents:
 *
 *     {"schema": "1",
 *      "field": {"kind": "finite", "p": 7},
 *      "roots": {},
 *      "groups": [[gen, gen], [gen]]                     explicit pool, one generator list per group
 *             or {"cyclic_max_order": 6, "sample": 40, "seed": 1},
 *      "points": "all" or [point, ...],
 *      "limits": {"max_group_order": 60, "max_results": 100, "max_configurations": 2000000},
 *      "dedup": false}
 *
 * The pool keeps groups in the order given (cyclic pools: by smallest generator in
 * matrix order), dropping repeated element sets. Each unordered pair of pool groups
 * is combined with every ordered pair of distinct points and checked in both
 * orientations, so every (G1, G2, P1, P2) drawn from the space is visited once.
 * Pairs are distributed over threads; results are merged in enumeration order.
 */

#ifndef GALOIS_FORGE_SEARCH_HPP
#define GALOIS_FORGE_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "galois_forge/io.hpp"

namespace galois_forge {

inline constexpr std::size_t default_max_configurations = 2'000'000;

struct cyclic_pool {
    std::size_t max_order = 0;
    std::optional<std::size_t> sample;
    std::uint64_t seed = 0;
};

/// Unresolved space document.
struct search_config {
    json_document source;
    field_description field;
    std::vector<std::pair<std::string, std::uint64_t>> roots;
    std::optional<cyclic_pool> cyclic; ///< unset: explicit pool under /groups
    bool all_points = false;
    std::optional<std::size_t> max_group_order;
    std::optional<std::size_t> max_results;
    std::size_t max_configurations = default_max_configurations;
    bool dedup = false;
};

template <exact_field Field>
struct search_space {
    Field field;
    std::vector<subgroup<Field>> groups;
    std::vector<proj_point<Field>> points;
    std::optional<std::size_t> max_results;
    std::size_t max_configurations = default_max_configurations;
    bool dedup = false;
};

template <exact_field Field>
struct catalog_entry {
    std::size_t index = 0; ///< enumeration index of the (pair, P, P') triple
    bool swapped = false;  ///< true for the (G', G, P', P) orientation
    configuration<Field> cfg;
    criterion_report<Field> report;
};

template <exact_field Field>
struct catalog {
    std::size_t groups = 0;
    std::size_t points = 0;
    std::size_t configurations = 0; ///< (G1, G2, P1, P2) tuples covered
    bool truncated = false;         ///< max_results cut the list
    std::vector<catalog_entry<Field>> entries;
};

inline search_config parse_search_config(std::string text)
{
    search_config sc;
    sc.source = load_json(std::move(text));
    const json_document& d = sc.source;
    check_schema(d);
    const json& doc = d.doc;
    sc.field = detail::parse_field_description(d, detail::member(d, doc, "", "field"), "/field");
    sc.roots = detail::parse_roots(d, doc);

    const json& groups = detail::member(d, doc, "", "groups");
    if (groups.is_array()) {
        for (std::size_t i = 0; i < groups.size(); ++i)
            detail::check_matrix_list(d, groups[i], "/groups/" + std::to_string(i));
    } else if (groups.is_object()) {
        cyclic_pool cp;
        cp.max_order = detail::positive_integer(d, detail::member(d, groups, "/groups", "cyclic_max_order"),
                                                "/groups/cyclic_max_order");
        if (groups.contains("sample"))
            cp.sample = detail::positive_integer(d, groups.at("sample"), "/groups/sample");
        if (groups.contains("seed")) {
            if (!groups.at("seed").is_number_unsigned())
                d.loc.fail("/groups/seed", "seed must be a non-negative integer");
            cp.seed = groups.at("seed").get<std::uint64_t>();
        }
        sc.cyclic = cp;
    } else {
        d.loc.fail("/groups", "groups must be a list of generator lists or a cyclic pool object");
    }

    const json& points = detail::member(d, doc, "", "points");
    if (points.is_string()) {
        if (points.get<std::string>() != "all")
            d.loc.fail("/points", "points must be \"all\" or a list of points");
        sc.all_points = true;
    } else if (points.is_array()) {
        for (std::size_t i = 0; i < points.size(); ++i)
            detail::check_point(d, points[i], "/points/" + std::to_string(i));
    } else {
        d.loc.fail("/points", "points must be \"all\" or a list of points");
    }

    if (doc.contains("limits")) {
        const json& l = doc.at("limits");
        if (!l.is_object())
            d.loc.fail("/limits", "limits must be an object");
        if (l.contains("max_group_order"))
            sc.max_group_order = detail::positive_integer(d, l.at("max_group_order"), "/limits/max_group_order");
        if (l.contains("max_results"))
            sc.max_results = detail::positive_integer(d, l.at("max_results"), "/limits/max_results");
        if (l.contains("max_configurations"))
            sc.max_configurations = detail::positive_integer(d, l.at("max_configurations"), "/limits/max_configurations");
    }
    if (doc.contains("dedup")) {
        if (!doc.at("dedup").is_boolean())
            d.loc.fail("/dedup", "dedup must be true or false");
        sc.dedup = doc.at("dedup").get<bool>();
    }
    return sc;
}

/// Every element of PGL(2, F_q), in canonical form (first nonzero entry 1).
inline std::vector<moebius<finite_field>> all_moebius(const finite_field& f)
{
    using M = moebius<finite_field>;
    std::vector<M> out;
    const auto q = f.size();
    for (std::uint64_t b = 0; b < q; ++b)
        for (std::uint64_t c = 0; c < q; ++c)
            for (std::uint64_t d = 0; d < q; ++d) {
                const auto eb = f.from_code(b), ec = f.from_code(c), ed = f.from_code(d);
                if (!(ed - eb * ec).is_zero())
                    out.emplace_back(f.one(), eb, ec, ed);
            }
    for (std::uint64_t c = 1; c < q; ++c)
        for (std::uint64_t d = 0; d < q; ++d)
            out.emplace_back(f.zero(), f.one(), f.from_code(c), f.from_code(d));
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct cyclic subgroups of PGL(2, F_q) of order 2..max_order.
inline std::vector<subgroup<finite_field>> cyclic_subgroups(const finite_field& f, std::size_t max_order)
{
    using M = moebius<finite_field>;
    std::vector<subgroup<finite_field>> out;
    std::set<std::vector<M>> seen;
    for (const M& m : all_moebius(f)) {
        if (m.is_identity())
            continue;
        M cur = m;
        std::size_t n = 1;
        while (!cur.is_identity() && n <= max_order) {
            cur = m * cur;
            ++n;
        }
        if (n > max_order)
            continue;
        auto g = generate(f, {m});
        if (seen.insert(g.sorted_elements()).second)
            out.push_back(std::move(g));
    }
    return out;
}

template <exact_field Field>
search_space<Field> realize_space(const search_config& sc, const Field& field)
{
    const json_document& d = sc.source;
    const json& doc = d.doc;
    search_space<Field> sp{field, {}, {}, sc.max_results, sc.max_configurations, sc.dedup};
    auto roots = realize_roots(d, field, sc.roots);

    std::vector<subgroup<Field>> pool;
    if (sc.cyclic) {
        if constexpr (std::is_same_v<Field, finite_field>) {
            pool = cyclic_subgroups(field, sc.cyclic->max_order);
            if (sc.cyclic->sample && *sc.cyclic->sample < pool.size()) {
                std::vector<subgroup<Field>> picked;
                std::mt19937_64 rng(sc.cyclic->seed);
                std::sample(pool.begin(), pool.end(), std::back_inserter(picked), *sc.cyclic->sample, rng);
                pool = std::move(picked);
            }
        } else {
            d.loc.fail("/groups", "cyclic pools need a finite field");
        }
    } else {
        const json& groups = doc.at("groups");
        const std::size_t cap = default_closure_cap();
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const std::string ptr = "/groups/" + std::to_string(i);
            pool.push_back(realize_group(d, field, realize_matrices(d, field, roots, groups[i], ptr), cap, ptr));
        }
    }
    for (auto& g : pool) {
        if (sc.max_group_order && g.order() > *sc.max_group_order)
            continue;
        const bool repeated = std::any_of(sp.groups.begin(), sp.groups.end(),
                                          [&](const subgroup<Field>& h) { return h.same_elements(g); });
        if (!repeated)
            sp.groups.push_back(std::move(g));
    }

    if (sc.all_points) {
        if constexpr (std::is_same_v<Field, finite_field>)
            sp.points = rational_points(field);
        else
            d.loc.fail("/points", "\"all\" needs a finite field");
    } else {
        const json& pts = doc.at("points");
        std::set<proj_point<Field>> seen;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto p = realize_point(d, field, roots, pts[i], "/points/" + std::to_string(i));
            if (seen.insert(p).second)
                sp.points.push_back(std::move(p));
        }
    }
    return sp;
}

/// Number of (G1, G2, P1, P2) tuples the space covers.
template <exact_field Field>
std::size_t space_size(const search_space<Field>& sp)
{
    const std::size_t n = sp.groups.size();
    const std::size_t m = sp.points.size();
    if (n < 2 || m < 2)
        return 0;
    return n * (n - 1) * m * (m - 1);
}

template <exact_field Field>
catalog<Field> run_search(const search_space<Field>& sp, unsigned threads = std::thread::hardware_concurrency())
{
    catalog<Field> out;
    out.groups = sp.groups.size();
    out.points = sp.points.size();
    out.configurations = space_size(sp);
    if (out.configurations > sp.max_configurations)
        throw error(errc::space_too_large, std::to_string(out.configurations) + " configurations exceed the budget of "
                                               + std::to_string(sp.max_configurations));
    if (out.configurations == 0)
        return out;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < sp.groups.size(); ++i)
        for (std::size_t j = i + 1; j < sp.groups.size(); ++j)
            pairs.emplace_back(i, j);
    const std::size_t m = sp.points.size();
    const std::size_t per_pair = m * (m - 1);

    std::vector<std::vector<catalog_entry<Field>>> found(pairs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t k = next++; k < pairs.size(); k = next++) {
            const auto& g1 = sp.groups[pairs[k].first];
            const auto& g2 = sp.groups[pairs[k].second];
            if (!intersect_trivial(g1, g2))
                continue; // (b) fails in both orientations
            std::size_t idx = k * per_pair;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    if (a == b)
                        continue;
                    configuration<Field> cfg{sp.field, g1, g2, sp.points[a], sp.points[b]};
                    auto r = check(cfg);
                    if (r.passes())
                        found[k].push_back({idx, false, cfg, std::move(r)});
                    auto sw = cfg.swapped();
                    auto rs = check(sw);
                    if (rs.passes())
                        found[k].push_back({idx, true, std::move(sw), std::move(rs)});
                    ++idx;
                }
        }
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    using key_t = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::size_t, std::vector<std::size_t>,
                             std::size_t, std::vector<std::size_t>>;
    std::set<key_t> keys;
    for (auto& bucket : found)
        for (auto& e : bucket) {
            if (sp.dedup) {
                key_t key{e.report.degree,    e.report.m_p1,   e.report.m_p2,
                          e.report.fp1.order, e.report.fp1.element_orders,
                          e.report.fp2.order, e.report.fp2.element_orders};
                if (!keys.insert(std::move(key)).second)
                    continue;
            }
            if (sp.max_results && out.entries.size() >= *sp.max_results) {
                out.truncated = true;
                return out;
            }
            out.entries.push_back(std::move(e));
        }
    return out;
}

template <exact_field Field>
json to_json(const catalog<Field>& c, const Field& field)
{
    json entries = json::array();
    for (const auto& e : c.entries)
        entries.push_back(json{{"index", e.index},
                               {"orientation", e.swapped ? "swapped" : "one"},
                               {"config", config_json(e.cfg)},
                               {"report", to_json(e.report, e.cfg)}});
    return json{{"schema", schema_version},
                {"field", to_json(describe(field))},
                {"groups", c.groups},
                {"points", c.points},
                {"configurations", c.configurations},
                {"passing", c.entries.size()},
                {"truncated", c.truncated},
                {"entries", entries}};
}

} // namespace galois_forge

#endif // GALOIS_FORGE_SEARCH_HPP
