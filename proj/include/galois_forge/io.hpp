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
 * @file io.hpp
 * @brief Run configurations, JSON serialization and text rendering.
 *
 * Config documents are strict JSON:
 *
 *     {"schema": "1",
 *      "field": {"kind": "finite", "p": 3, "ext_degree": 4, "modulus": "auto"},
 *      "roots": {"xi": 5},
 *      "g1": [[["1","1"],["0","1"]], [["1","0"],["0","-1"]]],
 *      "g2": [[["xi","0"],["0","1"]], [["0","1"],["1","0"]]],
 *      "p1": ["xi", "1"],
 *      "p2": ["0", "1"],
 *      "options": {"orientation": "one", "implicitize": false, "cap": 10000, "output": "json"}}
 *
 * Matrix entries and point coordinates are element expressions (or plain integers);
 * "inf" is accepted for (1 : 0). Every rejected value is reported with the line and
 * column where it starts, or where the offending character sits inside a string.
 */

#ifndef GALOIS_FORGE_IO_HPP
#define GALOIS_FORGE_IO_HPP

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "galois_forge/format.hpp"
#include "galois_forge/implicit.hpp"

namespace galois_forge {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

// ---------------------------------------------------------------------------
// Source positions
// ---------------------------------------------------------------------------

/// Byte offsets of every value of an (already validated) JSON text, keyed by JSON pointer.
class json_locator {
public:
    json_locator() = default;
    explicit json_locator(std::string_view text) : text_(text)
    {
        skip_ws();
        if (pos_ < text_.size())
            value("");
    }

    std::optional<std::size_t> offset(const std::string& pointer) const
    {
        auto it = offsets_.find(pointer);
        if (it == offsets_.end())
            return std::nullopt;
        return it->second;
    }

    std::pair<std::size_t, std::size_t> line_column(std::size_t off) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < off && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    /// Throws parse_error at the value under `pointer`, shifted by `extra` bytes.
    [[noreturn]] void fail(const std::string& pointer, const std::string& what, std::size_t extra = 0) const
    {
        const auto off = offset(pointer);
        if (!off)
            throw parse_error(what + " at " + (pointer.empty() ? "/" : pointer), 0, 0);
        const auto [line, col] = line_column(*off + extra);
        throw parse_error(what + " at " + (pointer.empty() ? "/" : pointer), line, col);
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'
                                       || text_[pos_] == '\r'))
            ++pos_;
    }

    std::string string_token()
    {
        std::string out;
        ++pos_; // opening quote
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
                ++pos_;
                switch (text_[pos_]) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case 'u': out += "?"; pos_ += 4; break;
                default: out += text_[pos_];
                }
                ++pos_;
                continue;
            }
            out += text_[pos_++];
        }
        ++pos_; // closing quote
        return out;
    }

    static std::string escape_token(const std::string& key)
    {
        std::string out;
        for (char c : key) {
            if (c == '~')
                out += "~0";
            else if (c == '/')
                out += "~1";
            else
                out += c;
        }
        return out;
    }

    void value(const std::string& ptr)
    {
        skip_ws();
        offsets_[ptr] = pos_;
        if (pos_ >= text_.size())
            return;
        const char c = text_[pos_];
        if (c == '{') {
            ++pos_;
            for (;;) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] == '}') {
                    ++pos_;
                    return;
                }
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                const std::string key = string_token();
                skip_ws();
                ++pos_; // ':'
                value(ptr + "/" + escape_token(key));
            }
        }
        if (c == '[') {
            ++pos_;
            std::size_t idx = 0;
            for (;;) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] == ']') {
                    ++pos_;
                    return;
                }
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                value(ptr + "/" + std::to_string(idx++));
            }
        }
        if (c == '"') {
            string_token();
            return;
        }
        while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos)
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> offsets_;
};

/// Parsed JSON together with its text, for positioned diagnostics.
struct json_document {
    std::string text;
    json doc;
    json_locator loc;

    json_document() = default;
    json_document(const json_document& o) : text(o.text), doc(o.doc), loc(text) {}
    json_document& operator=(const json_document& o)
    {
        text = o.text;
        doc = o.doc;
        loc = json_locator(text);
        return *this;
    }
};

inline json_document load_json(std::string text)
{
    json_document d;
    d.text = std::move(text);
    try {
        d.doc = json::parse(d.text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t l = 1, c = 1;
        for (std::size_t i = 0; i < byte && i < d.text.size(); ++i) {
            if (d.text[i] == '\n') {
                ++l;
                c = 1;
            } else {
                ++c;
            }
        }
        std::string msg = e.what();
        // drop nlohmann's own "[json.exception.parse_error.101] parse error at line x, column y: " prefix
        if (auto colon = msg.find(": "); colon != std::string::npos)
            msg = msg.substr(colon + 2);
        throw parse_error("invalid JSON: " + msg, l, c);
    }
    d.loc = json_locator(d.text);
    return d;
}

/// Message of a nested parse failure without its "ParseError: " prefix.
inline std::string nested_message(const error& e)
{
    std::string m = e.what();
    const std::string prefix = std::string(to_string(errc::parse_error)) + ": ";
    if (e.code() == errc::parse_error && m.rfind(prefix, 0) == 0)
        m.erase(0, prefix.size());
    return m;
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

struct run_options {
    std::string orientation = "one"; ///< "one" or "both"
    bool implicitize = false;
    std::optional<std::size_t> cap; ///< closure cap; unset means default_closure_cap()
    std::string output = "json";    ///< "json" or "text"
};

struct run_config {
    json_document source;
    field_description field;
    std::vector<std::pair<std::string, std::uint64_t>> roots; ///< name -> multiplicative order
    run_options options;
};

namespace detail {

inline const json& member(const json_document& d, const json& obj, const std::string& ptr, const std::string& key)
{
    if (!obj.contains(key))
        d.loc.fail(ptr, "missing key \"" + key + "\"");
    return obj.at(key);
}

inline std::uint64_t positive_integer(const json_document& d, const json& v, const std::string& ptr)
{
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        d.loc.fail(ptr, "expected a positive integer");
    return v.get<std::uint64_t>();
}

inline field_description parse_field_description(const json_document& d, const json& f, const std::string& ptr)
{
    if (!f.is_object())
        d.loc.fail(ptr, "field must be an object");
    const json& kind = member(d, f, ptr, "kind");
    if (!kind.is_string())
        d.loc.fail(ptr + "/kind", "field kind must be a string");
    field_description out;
    const auto k = kind.get<std::string>();
    if (k == "finite") {
        out.kind = field_kind::finite;
        out.p = positive_integer(d, member(d, f, ptr, "p"), ptr + "/p");
        out.ext_degree = 1;
        if (f.contains("ext_degree"))
            out.ext_degree = static_cast<unsigned>(positive_integer(d, f.at("ext_degree"), ptr + "/ext_degree"));
        if (f.contains("modulus")) {
            const json& m = f.at("modulus");
            if (m.is_string()) {
                if (m.get<std::string>() != "auto")
                    d.loc.fail(ptr + "/modulus", "modulus must be \"auto\" or a coefficient list");
            } else if (m.is_array()) {
                for (std::size_t i = 0; i < m.size(); ++i) {
                    if (!m[i].is_number_unsigned())
                        d.loc.fail(ptr + "/modulus/" + std::to_string(i), "modulus coefficients are non-negative integers");
                    out.modulus.push_back(m[i].get<std::uint64_t>());
                }
            } else {
                d.loc.fail(ptr + "/modulus", "modulus must be \"auto\" or a coefficient list");
            }
        }
    } else if (k == "cyclotomic") {
        out.kind = field_kind::cyclotomic;
        out.conductor = static_cast<unsigned>(positive_integer(d, member(d, f, ptr, "conductor"), ptr + "/conductor"));
    } else {
        d.loc.fail(ptr + "/kind", std::string(to_string(errc::unsupported_kind)) + ": unknown field kind \"" + k + "\"");
    }
    return out;
}

inline void check_entry(const json_document& d, const json& v, const std::string& ptr)
{
    if (!v.is_string() && !v.is_number_integer())
        d.loc.fail(ptr, "expected an element expression (string) or an integer");
}

inline void check_matrix_list(const json_document& d, const json& list, const std::string& ptr)
{
    if (!list.is_array())
        d.loc.fail(ptr, "expected a list of 2x2 matrices");
    for (std::size_t m = 0; m < list.size(); ++m) {
        const std::string mp = ptr + "/" + std::to_string(m);
        const json& mat = list[m];
        if (!mat.is_array() || mat.size() != 2)
            d.loc.fail(mp, "matrix must be a 2x2 array");
        for (std::size_t r = 0; r < 2; ++r) {
            const std::string rp = mp + "/" + std::to_string(r);
            if (!mat[r].is_array() || mat[r].size() != 2)
                d.loc.fail(rp, "matrix row must have two entries");
            for (std::size_t c = 0; c < 2; ++c)
                check_entry(d, mat[r][c], rp + "/" + std::to_string(c));
        }
    }
}

inline void check_point(const json_document& d, const json& p, const std::string& ptr)
{
    if (p.is_string()) {
        if (p.get<std::string>() != "inf")
            d.loc.fail(ptr, "a point is [a, b] or \"inf\"");
        return;
    }
    if (!p.is_array() || p.size() != 2)
        d.loc.fail(ptr, "a point is [a, b] or \"inf\"");
    check_entry(d, p[0], ptr + "/0");
    check_entry(d, p[1], ptr + "/1");
}

inline std::vector<std::pair<std::string, std::uint64_t>> parse_roots(const json_document& d, const json& doc)
{
    std::vector<std::pair<std::string, std::uint64_t>> out;
    if (!doc.contains("roots"))
        return out;
    const json& r = doc.at("roots");
    if (!r.is_object())
        d.loc.fail("/roots", "roots must be an object of name -> order");
    for (auto it = r.begin(); it != r.end(); ++it) {
        const std::string& name = it.key();
        const bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')
                           && std::all_of(name.begin(), name.end(), [](char c) {
                                  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                              });
        if (!ident || name == "z")
            d.loc.fail("/roots/" + name, "invalid root name \"" + name + "\"");
        out.emplace_back(name, positive_integer(d, it.value(), "/roots/" + name));
    }
    return out;
}

} // namespace detail

inline void check_schema(const json_document& d)
{
    if (!d.doc.is_object())
        d.loc.fail("", "document must be a JSON object");
    if (d.doc.contains("schema")) {
        const json& s = d.doc.at("schema");
        if (!s.is_string() || s.get<std::string>() != schema_version)
            d.loc.fail("/schema", std::string("unsupported schema (expected \"") + schema_version + "\")");
    }
}

inline run_config parse_run_config(std::string text)
{
    run_config rc;
    rc.source = load_json(std::move(text));
    const json_document& d = rc.source;
    check_schema(d);
    const json& doc = d.doc;
    rc.field = detail::parse_field_description(d, detail::member(d, doc, "", "field"), "/field");
    rc.roots = detail::parse_roots(d, doc);
    detail::check_matrix_list(d, detail::member(d, doc, "", "g1"), "/g1");
    detail::check_matrix_list(d, detail::member(d, doc, "", "g2"), "/g2");
    detail::check_point(d, detail::member(d, doc, "", "p1"), "/p1");
    detail::check_point(d, detail::member(d, doc, "", "p2"), "/p2");
    if (doc.contains("options")) {
        const json& o = doc.at("options");
        if (!o.is_object())
            d.loc.fail("/options", "options must be an object");
        if (o.contains("orientation")) {
            const json& v = o.at("orientation");
            if (!v.is_string() || (v.get<std::string>() != "one" && v.get<std::string>() != "both"))
                d.loc.fail("/options/orientation", "orientation must be \"one\" or \"both\"");
            rc.options.orientation = v.get<std::string>();
        }
        if (o.contains("implicitize")) {
            if (!o.at("implicitize").is_boolean())
                d.loc.fail("/options/implicitize", "implicitize must be true or false");
            rc.options.implicitize = o.at("implicitize").get<bool>();
        }
        if (o.contains("cap"))
            rc.options.cap = static_cast<std::size_t>(detail::positive_integer(d, o.at("cap"), "/options/cap"));
        if (o.contains("output")) {
            const json& v = o.at("output");
            if (!v.is_string() || (v.get<std::string>() != "json" && v.get<std::string>() != "text"))
                d.loc.fail("/options/output", "output must be \"json\" or \"text\"");
            rc.options.output = v.get<std::string>();
        }
    }
    return rc;
}

/// Builds the coefficient field, reporting construction failures at /field.
inline any_field realize_field(const json_document& d, const field_description& desc, const std::string& ptr = "/field")
{
    try {
        return make_field(desc);
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        d.loc.fail(ptr, e.what());
    }
}

template <exact_field Field>
root_bindings<Field> realize_roots(const json_document& d, const Field& field,
                                   const std::vector<std::pair<std::string, std::uint64_t>>& roots)
{
    root_bindings<Field> out;
    for (const auto& [name, order] : roots) {
        try {
            out.emplace(name, root_of_unity(field, order));
        } catch (const error& e) {
            d.loc.fail("/roots/" + name, e.what());
        }
    }
    return out;
}

template <exact_field Field>
typename Field::element realize_element(const json_document& d, const Field& field, const root_bindings<Field>& roots,
                                        const json& v, const std::string& ptr)
{
    if (v.is_number_integer())
        return field.from_int(v.get<std::int64_t>());
    try {
        return parse_element(field, v.get<std::string>(), roots);
    } catch (const expression_error& e) {
        d.loc.fail(ptr, nested_message(e), 1 + e.offset()); // + 1 for the opening quote
    } catch (const error& e) {
        d.loc.fail(ptr, e.what());
    }
}

template <exact_field Field>
std::vector<moebius<Field>> realize_matrices(const json_document& d, const Field& field,
                                             const root_bindings<Field>& roots, const json& list,
                                             const std::string& ptr)
{
    std::vector<moebius<Field>> out;
    for (std::size_t m = 0; m < list.size(); ++m) {
        const std::string mp = ptr + "/" + std::to_string(m);
        auto at = [&](std::size_t r, std::size_t c) {
            return realize_element(d, field, roots, list[m][r][c], mp + "/" + std::to_string(r) + "/" + std::to_string(c));
        };
        try {
            out.emplace_back(at(0, 0), at(0, 1), at(1, 0), at(1, 1));
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            d.loc.fail(mp, e.what());
        }
    }
    return out;
}

template <exact_field Field>
proj_point<Field> realize_point(const json_document& d, const Field& field, const root_bindings<Field>& roots,
                                const json& p, const std::string& ptr)
{
    if (p.is_string())
        return proj_point<Field>::infinity(field);
    auto a = realize_element(d, field, roots, p[0], ptr + "/0");
    auto b = realize_element(d, field, roots, p[1], ptr + "/1");
    if (a.is_zero() && b.is_zero())
        d.loc.fail(ptr, "(0 : 0) is not a point");
    return proj_point<Field>(a, b);
}

template <exact_field Field>
subgroup<Field> realize_group(const json_document& d, const Field& field, const std::vector<moebius<Field>>& gens,
                              std::size_t cap, const std::string& ptr)
{
    try {
        return generate(field, gens, cap);
    } catch (const error& e) {
        d.loc.fail(ptr, e.what());
    }
}

template <exact_field Field>
struct realized_config {
    configuration<Field> cfg;
    root_bindings<Field> roots;
};

/// Resolves every expression of `rc` in `field` and closes both groups.
template <exact_field Field>
realized_config<Field> realize(const run_config& rc, const Field& field)
{
    const json_document& d = rc.source;
    const json& doc = d.doc;
    auto roots = realize_roots(d, field, rc.roots);
    const std::size_t cap = rc.options.cap.value_or(default_closure_cap());
    auto g1 = realize_group(d, field, realize_matrices(d, field, roots, doc.at("g1"), "/g1"), cap, "/g1");
    auto g2 = realize_group(d, field, realize_matrices(d, field, roots, doc.at("g2"), "/g2"), cap, "/g2");
    auto p1 = realize_point(d, field, roots, doc.at("p1"), "/p1");
    auto p2 = realize_point(d, field, roots, doc.at("p2"), "/p2");
    if (p1 == p2)
        d.loc.fail("/p2", std::string(to_string(errc::points_equal)) + ": P1 and P2 coincide");
    return {configuration<Field>{field, std::move(g1), std::move(g2), std::move(p1), std::move(p2)}, std::move(roots)};
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json to_json(const field_description& d)
{
    json j;
    if (d.kind == field_kind::finite) {
        j["kind"] = "finite";
        j["p"] = d.p;
        j["ext_degree"] = d.ext_degree;
        if (d.modulus.empty())
            j["modulus"] = "auto";
        else
            j["modulus"] = d.modulus;
    } else {
        j["kind"] = "cyclotomic";
        j["conductor"] = d.conductor;
    }
    return j;
}

template <exact_field Field>
json to_json(const proj_point<Field>& p)
{
    return json::array({to_expression(p.a()), to_expression(p.b())});
}

template <exact_field Field>
json to_json(const moebius<Field>& m)
{
    return json::array({json::array({to_expression(m(0, 0)), to_expression(m(0, 1))}),
                        json::array({to_expression(m(1, 0)), to_expression(m(1, 1))})});
}

template <exact_field Field>
json to_json(const divisor<Field>& d)
{
    json j = json::array();
    for (const auto& [p, m] : d.terms())
        j.push_back(json{{"point", to_json(p)}, {"mult", m}});
    return j;
}

template <exact_field Field>
json to_json(const poly<Field>& p)
{
    json j = json::array();
    for (const auto& c : p.coeffs())
        j.push_back(to_expression(c));
    return j;
}

template <exact_field Field>
json to_json(const rational_function<Field>& r)
{
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline json to_json(const group_fingerprint& fp)
{
    return json{{"order", fp.order}, {"element_orders", fp.element_orders}, {"name", group_name(fp)}};
}

template <exact_field Field>
json points_json(const std::vector<proj_point<Field>>& pts)
{
    json j = json::array();
    for (const auto& p : pts)
        j.push_back(to_json(p));
    return j;
}

template <exact_field Field>
json to_json(const plane_point<Field>& p)
{
    return json::array({to_expression(p[0]), to_expression(p[1]), to_expression(p[2])});
}

template <exact_field Field>
json to_json(const criterion_report<Field>& r, const configuration<Field>& cfg)
{
    const auto& od = r.bs.orbits;
    json j;
    j["schema"] = schema_version;
    j["field"] = to_json(describe(cfg.field));
    j["p1"] = to_json(cfg.p1);
    j["p2"] = to_json(cfg.p2);

    auto group = [](const subgroup<Field>& g, const group_fingerprint& fp) {
        json gj;
        json gens = json::array();
        for (const auto& m : g.generators())
            gens.push_back(to_json(m));
        gj["generators"] = gens;
        gj["order"] = g.order();
        gj["fingerprint"] = to_json(fp);
        return gj;
    };
    j["g1"] = group(cfg.g1, r.fp1);
    j["g2"] = group(cfg.g2, r.fp2);

    j["orbits"] = json{{"g1_p2", points_json(od.g1_p2)},
                       {"g2_p1", points_json(od.g2_p1)},
                       {"O", points_json(od.all)},
                       {"common", points_json(od.common)},
                       {"stab_g1_p2", od.stab_g1_p2},
                       {"stab_g2_p1", od.stab_g2_p1}};

    json conds;
    conds["a"] = json{{"holds", r.cond_a}, {"note", r.cond_a_note}};
    conds["b"] = json{{"holds", r.cond_b}, {"witness", r.cond_b_witness ? to_json(*r.cond_b_witness) : json(nullptr)}};
    conds["c"] = json{{"holds", r.cond_c},
                      {"witness", r.cond_c_witness ? to_json(*r.cond_c_witness) : json(nullptr)},
                      {"detail", r.cond_c_detail}};
    conds["d"] = json{{"holds", r.cond_d}, {"difference", to_json(r.cond_d_difference)}};
    j["conditions"] = conds;
    j["passes"] = r.passes();

    j["divisors"] = json{{"bs_p1", to_json(r.bs.bs_p1)},
                         {"bs_p2", to_json(r.bs.bs_p2)},
                         {"d_lhs", to_json(r.d_lhs)},
                         {"d_rhs", to_json(r.d_rhs)}};
    j["degree"] = r.degree;
    j["degree_warning"] = r.degree_warning;
    j["m_p1"] = r.m_p1;
    j["m_p2"] = r.m_p2;
    j["tangent_at_p1"] = r.tangent_at_p1;
    j["tangent_at_p2"] = r.tangent_at_p2;

    json table = json::array();
    for (const auto& e : r.order_table)
        table.push_back(json{{"point", to_json(e.point)},
                             {"role", to_string(e.role)},
                             {"line_order", e.line_order},
                             {"second", e.second ? json(*e.second) : json(nullptr)},
                             {"third", e.third ? json(*e.third) : json(nullptr)}});
    j["order_table"] = table;
    return j;
}

template <exact_field Field>
json to_json(const plane_model<Field>& m)
{
    json j;
    j["schema"] = schema_version;
    j["degree"] = m.degree;
    j["A"] = to_json(m.a);
    j["B"] = to_json(m.b);
    j["C"] = to_json(m.c);
    j["f"] = to_json(m.f);
    j["g"] = to_json(m.g);
    j["phi_p1"] = to_json(m.image(m.p1));
    j["phi_p2"] = to_json(m.image(m.p2));
    return j;
}

template <exact_field Field>
json to_json(const implicit_curve<Field>& c)
{
    json terms = json::array();
    for (const auto& [e, coeff] : c.terms)
        terms.push_back(json{{"exp", json::array({e[0], e[1], e[2]})}, {"coeff", to_expression(coeff)}});
    return json{{"schema", schema_version}, {"degree", c.degree}, {"terms", terms}};
}

inline json to_json(const galois_verification& v)
{
    json issues = json::array();
    for (const auto& i : v.issues)
        issues.push_back(json{{"kind", to_string(i.kind)}, {"witness", i.witness}});
    return json{{"schema", schema_version},
                {"ok", v.ok()},
                {"invariance", v.invariance},
                {"map_degrees", v.map_degrees},
                {"ramification", v.ramification},
                {"divisor_identity", v.divisor_identity},
                {"issues", issues}};
}

/// A config document reproducing `cfg` with z-expressions only (no named roots).
template <exact_field Field>
json config_json(const configuration<Field>& cfg)
{
    auto gens = [](const subgroup<Field>& g) {
        json l = json::array();
        for (const auto& m : g.generators())
            l.push_back(to_json(m));
        return l;
    };
    auto point = [](const proj_point<Field>& p) { return p.is_infinity() ? json("inf") : to_json(p); };
    json j;
    j["schema"] = schema_version;
    j["field"] = to_json(describe(cfg.field));
    j["g1"] = gens(cfg.g1);
    j["g2"] = gens(cfg.g2);
    j["p1"] = point(cfg.p1);
    j["p2"] = point(cfg.p2);
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

inline std::string fingerprint_text(const group_fingerprint& fp)
{
    std::string s = group_name(fp) + " (order " + std::to_string(fp.order) + "; element orders";
    for (auto o : fp.element_orders)
        s += " " + std::to_string(o);
    return s + ")";
}

template <exact_field Field>
std::string to_text(const criterion_report<Field>& r, const configuration<Field>& cfg)
{
    std::ostringstream os;
    auto yes = [](bool b) { return b ? "holds" : "FAILS"; };
    os << "field      " << cfg.field.name() << "\n";
    os << "G1         " << fingerprint_text(r.fp1) << "\n";
    os << "G2         " << fingerprint_text(r.fp2) << "\n";
    os << "P1         " << to_text(cfg.p1) << "\n";
    os << "P2         " << to_text(cfg.p2) << "\n";
    os << "|G1(P2)|   " << r.bs.orbits.stab_g1_p2 << "\n";
    os << "|G2(P1)|   " << r.bs.orbits.stab_g2_p1 << "\n";
    os << "\n";
    os << "(a) " << yes(r.cond_a) << "  " << r.cond_a_note << "\n";
    os << "(b) " << yes(r.cond_b);
    if (r.cond_b_witness)
        os << "  common element " << to_text(*r.cond_b_witness);
    os << "\n(c) " << yes(r.cond_c);
    if (r.cond_c_witness)
        os << "  at " << to_text(*r.cond_c_witness) << ": " << r.cond_c_detail;
    os << "\n(d) " << yes(r.cond_d);
    if (!r.cond_d)
        os << "  lhs - rhs = " << to_text(r.cond_d_difference);
    os << "\n\n";
    os << "Bs_P1 = " << to_text(r.bs.bs_p1) << "\n";
    os << "Bs_P2 = " << to_text(r.bs.bs_p2) << "\n";
    os << "Bs_P1 + sum G1.P2 = " << to_text(r.d_lhs) << "\n";
    os << "Bs_P2 + sum G2.P1 = " << to_text(r.d_rhs) << "\n\n";
    os << "degree " << r.degree << (r.degree_warning ? "  (warning: below 4)" : "") << "\n";
    os << "m(phi(P1)) = " << r.m_p1 << ", m(phi(P2)) = " << r.m_p2 << "\n";
    os << "L tangent at phi(P1): " << (r.tangent_at_p1 ? "yes" : "no")
       << ", at phi(P2): " << (r.tangent_at_p2 ? "yes" : "no") << "\n";
    if (!r.order_table.empty()) {
        os << "\n" << std::left << std::setw(28) << "point" << std::setw(20) << "role" << std::setw(8) << "ord_L"
           << std::setw(8) << "second" << "third\n";
        for (const auto& e : r.order_table)
            os << std::left << std::setw(28) << to_text(e.point) << std::setw(20) << to_string(e.role) << std::setw(8)
               << e.line_order << std::setw(8) << (e.second ? std::to_string(*e.second) : "-")
               << (e.third ? std::to_string(*e.third) : "-") << "\n";
    }
    os << "\n" << (r.passes() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace galois_forge

#endif // GALOIS_FORGE_IO_HPP
