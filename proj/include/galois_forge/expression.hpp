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

// Element expressions: integer literals, the generator `z`, named roots, + - * ^ ( ),
// and `/` (characteristic 0 only).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'z' | identifier | '(' expr ')'

#ifndef GALOIS_FORGE_EXPRESSION_HPP
#define GALOIS_FORGE_EXPRESSION_HPP

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "galois_forge/exact_fields.hpp"

namespace galois_forge {

/// Parse failure inside a single expression; `offset` is 0-based within the text.
class expression_error : public error {
public:
    expression_error(const std::string& what, std::size_t offset)
        : error(errc::parse_error, what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

template <class Field>
using root_bindings = std::map<std::string, typename Field::element>;

namespace detail {

template <class Field>
class expression_parser {
public:
    using element = typename Field::element;

    expression_parser(const Field& field, std::string_view text, const root_bindings<Field>& roots)
        : field_(field), text_(text), roots_(roots)
    {
    }

    element parse()
    {
        element v = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw expression_error(msg, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    element expr()
    {
        element v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    element term()
    {
        element v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else {
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '/') {
                    if (field_.characteristic() != 0)
                        fail("'/' is only available in characteristic 0");
                    ++pos_;
                    const std::size_t at = pos_;
                    element d = unary();
                    if (d.is_zero()) {
                        pos_ = at;
                        fail("division by zero");
                    }
                    v /= d;
                } else {
                    return v;
                }
            }
        }
    }

    element unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    element power()
    {
        element base = primary();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a non-negative integer exponent");
            mpz_class e = integer();
            if (!e.fits_ulong_p())
                fail("exponent too large");
            return galois_forge::pow(base, e.get_ui());
        }
        return base;
    }

    mpz_class integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    element primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            element v = expr();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return field_.from_mpz(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "z")
                return field_.generator();
            auto it = roots_.find(name);
            if (it == roots_.end()) {
                pos_ = start;
                fail("unknown name '" + name + "'");
            }
            return it->second;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Field field_;
    std::string_view text_;
    const root_bindings<Field>& roots_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class Field>
typename Field::element parse_element(const Field& field, std::string_view text,
                                      const root_bindings<Field>& roots = {})
{
    return detail::expression_parser<Field>(field, text, roots).parse();
}

/// Canonical expression for an element, accepted back by parse_element.
inline std::string to_expression(const finite_field::element& x)
{
    const auto d = x.coeffs();
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        const bool show_coeff = d[i] != 1 || i == 0;
        if (show_coeff)
            out += std::to_string(d[i]);
        if (i > 0) {
            if (show_coeff)
                out += "*";
            out += "z";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string to_expression(const cyclotomic_field::element& x)
{
    const auto& c = x.coeffs();
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0)
            continue;
        const mpq_class mag = abs(c[i]);
        if (sgn(c[i]) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const bool show_coeff = mag != 1 || i == 0;
        if (show_coeff)
            out += mag.get_str();
        if (i > 0) {
            if (show_coeff)
                out += "*";
            out += "z";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_EXPRESSION_HPP
