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
 * @file commands.hpp
 * @brief The check, construct, search and verify-paper commands.
 *
 * Commands take document text and write to the given streams, so the CLI and the
 * tests drive exactly the same code. Exit codes: 0 pass, 1 a condition or
 * verification failed, 2 the input was rejected.
 */

#ifndef GALOIS_FORGE_COMMANDS_HPP
#define GALOIS_FORGE_COMMANDS_HPP

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "galois_forge/fixtures.hpp"
#include "galois_forge/search.hpp"

namespace galois_forge {

enum exit_code : int { exit_pass = 0, exit_fail = 1, exit_input = 2 };

template <class F>
decltype(auto) with_field(const any_field& field, F&& fn)
{
    return std::visit([&](const auto& k) -> decltype(auto) { return fn(k); }, field);
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct check_options {
    std::optional<std::string> orientation; ///< overrides the config
    std::optional<std::string> output;      ///< overrides the config
};

inline int cmd_check(const std::string& text, const check_options& opts, std::ostream& out, std::ostream& err)
{
    try {
        const run_config rc = parse_run_config(text);
        const std::string orientation = opts.orientation.value_or(rc.options.orientation);
        const std::string output = opts.output.value_or(rc.options.output);
        if (orientation != "one" && orientation != "both")
            throw error(errc::invalid_argument, "orientation must be one or both");
        if (output != "json" && output != "text")
            throw error(errc::invalid_argument, "output must be json or text");
        const any_field field = realize_field(rc.source, rc.field);
        return with_field(field, [&](const auto& k) {
            const auto rz = realize(rc, k);
            const auto r = check(rz.cfg);
            bool ok = r.passes();
            if (orientation == "one") {
                if (output == "json")
                    out << to_json(r, rz.cfg).dump(2) << "\n";
                else
                    out << to_text(r, rz.cfg);
            } else {
                const auto sw = rz.cfg.swapped();
                const auto rs = check(sw);
                ok = ok && rs.passes();
                if (output == "json") {
                    json j{{"schema", schema_version},
                           {"passes", ok},
                           {"one", to_json(r, rz.cfg)},
                           {"swapped", to_json(rs, sw)}};
                    out << j.dump(2) << "\n";
                } else {
                    out << "== orientation (G1, G2, P1, P2)\n" << to_text(r, rz.cfg);
                    out << "\n== orientation (G2, G1, P2, P1)\n" << to_text(rs, sw);
                }
            }
            return ok ? exit_pass : exit_fail;
        });
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

/// Oracle orders next to the predicted ones.
template <exact_field Field>
struct order_check {
    order_prediction<Field> prediction;
    order_sequence oracle;
    bool agrees = false;
};

template <exact_field Field>
std::vector<order_check<Field>> check_orders(const plane_model<Field>& model, const criterion_report<Field>& report)
{
    std::vector<order_check<Field>> out;
    for (const auto& e : report.order_table) {
        order_check<Field> c{e, order_sequence_at(model, e.point), false};
        switch (e.role) {
        case order_role::over_p1:
        case order_role::over_p2:
            c.agrees = e.second && c.oracle.alpha == *e.second;
            break;
        case order_role::over_p1_osculating:
            c.agrees = e.second && e.third && c.oracle.alpha == *e.second && c.oracle.beta == *e.third;
            break;
        case order_role::on_line:
            // nothing predicted; L passes through phi(Q), so its order is alpha or beta
            c.agrees = e.line_order == c.oracle.alpha || e.line_order == c.oracle.beta;
            break;
        }
        out.push_back(std::move(c));
    }
    return out;
}

template <exact_field Field>
json to_json(const std::vector<order_check<Field>>& checks)
{
    json j = json::array();
    for (const auto& c : checks)
        j.push_back(json{{"point", to_json(c.prediction.point)},
                         {"role", to_string(c.prediction.role)},
                         {"line_order", c.prediction.line_order},
                         {"predicted_second", c.prediction.second ? json(*c.prediction.second) : json(nullptr)},
                         {"predicted_third", c.prediction.third ? json(*c.prediction.third) : json(nullptr)},
                         {"alpha", c.oracle.alpha},
                         {"beta", c.oracle.beta},
                         {"agrees", c.agrees}});
    return j;
}

/// Implicit curve and its multiplicities at phi(P1) = (0:1:0) and phi(P2) = (1:0:0).
template <exact_field Field>
struct implicit_check {
    std::optional<implicit_curve<Field>> curve;
    std::string failure;
    int m_p1 = 0;
    int m_p2 = 0;
    bool ok = false;
};

template <exact_field Field>
implicit_check<Field> check_implicit(const plane_model<Field>& model, const criterion_report<Field>& report)
{
    implicit_check<Field> out;
    try {
        out.curve = implicitize(model);
    } catch (const error& e) {
        out.failure = e.what();
        return out;
    }
    const Field& k = model.field();
    out.m_p1 = multiplicity_at(*out.curve, plane_point<Field>(k.zero(), k.one(), k.zero()));
    out.m_p2 = multiplicity_at(*out.curve, plane_point<Field>(k.one(), k.zero(), k.zero()));
    out.ok = out.curve->degree == report.degree && out.m_p1 == report.m_p1 && out.m_p2 == report.m_p2;
    if (!out.ok)
        out.failure = "implicit curve disagrees with the report";
    return out;
}

struct construct_options {
    std::optional<bool> implicitize;     ///< overrides the config
    std::optional<std::string> out_dir; ///< write one file per artifact there
};

inline void write_file(const std::filesystem::path& path, const std::string& body)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw error(errc::invalid_argument, "cannot write " + path.string());
    f << body;
}

inline int cmd_construct(const std::string& text, const construct_options& opts, std::ostream& out,
                         std::ostream& err)
{
    try {
        const run_config rc = parse_run_config(text);
        const bool want_curve = opts.implicitize.value_or(rc.options.implicitize);
        const any_field field = realize_field(rc.source, rc.field);
        return with_field(field, [&](const auto& k) {
            const auto rz = realize(rc, k);
            const auto report = check(rz.cfg);
            const json report_json = to_json(report, rz.cfg);
            if (!report.passes()) {
                out << json{{"schema", schema_version}, {"passes", false}, {"report", report_json}}.dump(2) << "\n";
                err << "configuration fails the criterion; no model written\n";
                return exit_fail;
            }
            const auto model = build_model(rz.cfg, report);
            const auto verification = verify_galois(model, rz.cfg, report);
            const auto orders = check_orders(model, report);
            bool ok = verification.ok();
            for (const auto& c : orders)
                ok = ok && c.agrees;

            json summary{{"schema", schema_version}, {"passes", true}};
            json curve_json;
            if (want_curve) {
                const auto ic = check_implicit(model, report);
                ok = ok && ic.ok;
                curve_json = ic.curve ? to_json(*ic.curve) : json{{"schema", schema_version}};
                curve_json["multiplicity_p1"] = ic.m_p1;
                curve_json["multiplicity_p2"] = ic.m_p2;
                curve_json["ok"] = ic.ok;
                if (!ic.failure.empty())
                    curve_json["failure"] = ic.failure;
            }
            const json orders_json{{"schema", schema_version}, {"orders", to_json(orders)}};
            if (opts.out_dir) {
                const std::filesystem::path dir(*opts.out_dir);
                std::filesystem::create_directories(dir);
                write_file(dir / "report.json", report_json.dump(2) + "\n");
                write_file(dir / "model.json", to_json(model).dump(2) + "\n");
                write_file(dir / "verification.json", to_json(verification).dump(2) + "\n");
                write_file(dir / "orders.json", orders_json.dump(2) + "\n");
                if (want_curve)
                    write_file(dir / "curve.json", curve_json.dump(2) + "\n");
                summary["out_dir"] = dir.string();
                summary["degree"] = report.degree;
                summary["verified"] = ok;
            } else {
                summary["report"] = report_json;
                summary["model"] = to_json(model);
                summary["verification"] = to_json(verification);
                summary["orders"] = orders_json["orders"];
                if (want_curve)
                    summary["curve"] = curve_json;
                summary["verified"] = ok;
            }
            out << summary.dump(2) << "\n";
            return ok ? exit_pass : exit_fail;
        });
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

struct search_options {
    std::optional<std::size_t> max_results;
    std::optional<unsigned> threads;
};

inline int cmd_search(const std::string& text, const search_options& opts, std::ostream& out, std::ostream& err)
{
    try {
        search_config sc = parse_search_config(text);
        if (opts.max_results)
            sc.max_results = *opts.max_results;
        const any_field field = realize_field(sc.source, sc.field);
        return with_field(field, [&](const auto& k) {
            const auto sp = realize_space(sc, k);
            const auto cat = run_search(sp, opts.threads.value_or(std::thread::hardware_concurrency()));
            out << to_json(cat, k).dump(2) << "\n";
            return exit_pass;
        });
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

// ---------------------------------------------------------------------------
// verify-paper
// ---------------------------------------------------------------------------

struct comparison_row {
    std::string quantity;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct fixture_run {
    int number = 0;
    std::string field_name;
    std::vector<comparison_row> rows;
    std::vector<std::string> notes;
    double seconds = 0;

    bool ok() const
    {
        return std::all_of(rows.begin(), rows.end(), [](const comparison_row& r) { return r.ok; });
    }
};

namespace detail {

inline std::string list_text(const std::vector<std::size_t>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

inline std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

template <class T>
comparison_row compare(const std::string& what, const T& expected, const T& actual)
{
    std::ostringstream e, a;
    e << std::boolalpha << expected;
    a << std::boolalpha << actual;
    return {what, e.str(), a.str(), expected == actual};
}

template <exact_field Field>
std::vector<proj_point<Field>> resolve(point_set s, const orbit_data<Field>& od, const proj_point<Field>& q1)
{
    std::vector<proj_point<Field>> out;
    for (const auto& q : od.all) {
        const bool in1 = od.in_g1_p2(q);
        bool take = false;
        switch (s) {
        case point_set::all: take = true; break;
        case point_set::outside_g1p2: take = !in1; break;
        case point_set::g1p2: take = in1; break;
        case point_set::g1p2_without_q1: take = in1 && !(q == q1); break;
        case point_set::q1: take = q == q1; break;
        }
        if (take)
            out.push_back(q);
    }
    return out;
}

} // namespace detail

/// Recomputes one fixture in `field` and compares it with the stored expectation.
template <exact_field Field>
fixture_run run_fixture(const fixture& fx, const std::string& config_text, const Field& field)
{
    using detail::compare;
    const auto t0 = std::chrono::steady_clock::now();
    fixture_run run;
    run.number = fx.number;
    run.field_name = field.name();
    const fixture_expectation& ex = fx.expected;

    const run_config rc = parse_run_config(config_text);
    const auto rz = realize(rc, field);
    const auto r = check(rz.cfg);
    auto& rows = run.rows;
    rows.push_back(compare("criterion passes", true, r.passes()));
    rows.push_back(compare("degree", ex.degree, r.degree));
    rows.push_back(compare("m(phi(P1))", ex.m_p1, r.m_p1));
    rows.push_back(compare("m(phi(P2))", ex.m_p2, r.m_p2));
    rows.push_back(compare("|G1|", ex.g1_order, r.fp1.order));
    rows.push_back({"G1 element orders", detail::list_text(ex.g1_element_orders),
                    detail::list_text(r.fp1.element_orders), ex.g1_element_orders == r.fp1.element_orders});
    rows.push_back(compare<std::string>("G1 name", ex.g1_name, group_name(r.fp1)));
    rows.push_back(compare("|G2|", ex.g2_order, r.fp2.order));
    rows.push_back({"G2 element orders", detail::list_text(ex.g2_element_orders),
                    detail::list_text(r.fp2.element_orders), ex.g2_element_orders == r.fp2.element_orders});
    rows.push_back(compare<std::string>("G2 name", ex.g2_name, group_name(r.fp2)));
    rows.push_back(compare("L tangent at phi(P1)", ex.tangent_at_p1, r.tangent_at_p1));
    rows.push_back(compare("L tangent at phi(P2)", ex.tangent_at_p2, r.tangent_at_p2));
    if (!r.passes()) {
        run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return run;
    }

    const auto model = build_model(rz.cfg, r);
    const auto v = verify_galois(model, rz.cfg, r);
    rows.push_back(compare("Galois verification", true, v.ok()));

    const auto q1 = proj_point<Field>::affine(field.one());
    for (const auto& st : ex.orders) {
        for (const auto& q : detail::resolve(st.where, r.bs.orbits, q1)) {
            const auto oracle = order_sequence_at(model, q);
            const auto pred = std::find_if(r.order_table.begin(), r.order_table.end(),
                                           [&](const auto& e) { return e.point == q; });
            const std::string role = pred == r.order_table.end() ? "none" : to_string(pred->role);
            const std::string at = " at " + to_text(q) + " [" + to_string(st.where) + ", role " + role + "]";
            if (pred != r.order_table.end() && pred->role == order_role::on_line)
                run.notes.push_back(to_text(q) + " lies in G1.P2 n G2.P1 with |G1(P2)| = |G2(P1)| = "
                                    + std::to_string(r.bs.orbits.stab_g1_p2) + ": phi(" + to_text(q)
                                    + ") is a third point of L, outside the fibers of phi(P1) and phi(P2); "
                                      "measured (alpha, beta) = ("
                                    + std::to_string(oracle.alpha) + ", " + std::to_string(oracle.beta) + ")");
            if (st.second) {
                rows.push_back(compare("second order (oracle)" + at, *st.second, oracle.alpha));
                const std::optional<int> p = pred == r.order_table.end() ? std::nullopt : pred->second;
                rows.push_back({"second order (prediction)" + at, std::to_string(*st.second), detail::opt_text(p),
                                p == st.second});
            }
            if (st.third) {
                rows.push_back(compare("third order (oracle)" + at, *st.third, oracle.beta));
                const std::optional<int> p = pred == r.order_table.end() ? std::nullopt : pred->third;
                rows.push_back({"third order (prediction)" + at, std::to_string(*st.third), detail::opt_text(p),
                                p == st.third});
            }
        }
    }
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

/// Fixtures 1-3 over their default fields, plus 2 and 3 over Q(zeta_20) when `char0`.
inline std::vector<fixture_run> verify_paper_runs(bool char0)
{
    std::vector<fixture_run> runs;
    for (const auto& fx : paper_fixtures()) {
        const run_config rc = parse_run_config(fx.config);
        const any_field k = make_field(rc.field);
        runs.push_back(with_field(k, [&](const auto& f) { return run_fixture(fx, fx.config, f); }));
        if (char0 && fx.char0_config) {
            const run_config rc0 = parse_run_config(*fx.char0_config);
            const any_field k0 = make_field(rc0.field);
            runs.push_back(with_field(k0, [&](const auto& f) { return run_fixture(fx, *fx.char0_config, f); }));
        }
    }
    return runs;
}

inline int cmd_verify_paper(bool char0, std::ostream& out, std::ostream& err)
{
    try {
        const auto runs = verify_paper_runs(char0);
        bool all = true;
        std::vector<std::string> mismatches;
        for (const auto& run : runs) {
            out << "fixture " << run.number << " over " << run.field_name << " (" << std::fixed
                << std::setprecision(3) << run.seconds << " s)\n";
            for (const auto& row : run.rows) {
                out << "  " << (row.ok ? "ok  " : "DIFF") << "  " << row.quantity << ": expected " << row.expected
                    << ", got " << row.actual << "\n";
                if (!row.ok)
                    mismatches.push_back("fixture " + std::to_string(run.number) + " over " + run.field_name + ": "
                                         + row.quantity + " expected " + row.expected + ", got " + row.actual);
            }
            for (const auto& n : run.notes)
                out << "  note  " << n << "\n";
            all = all && run.ok();
        }
        out << "\n" << (all ? "all fixtures match" : std::to_string(mismatches.size()) + " mismatch(es)") << "\n";
        for (const auto& m : mismatches)
            out << "  " << m << "\n";
        return all ? exit_pass : exit_fail;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace galois_forge

#endif // GALOIS_FORGE_COMMANDS_HPP
