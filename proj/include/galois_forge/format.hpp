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

// Short human-readable renderings used in witnesses and text reports.

#ifndef GALOIS_FORGE_FORMAT_HPP
#define GALOIS_FORGE_FORMAT_HPP

#include <string>

#include "galois_forge/divisors.hpp"
#include "galois_forge/expression.hpp"

namespace galois_forge {

/// "Q_inf" or "Q_(a)" in the usual Q_a notation.
template <exact_field Field>
std::string to_text(const proj_point<Field>& p)
{
    if (p.is_infinity())
        return "Q_inf";
    return "Q_(" + to_expression(p.a()) + ")";
}

template <exact_field Field>
std::string to_text(const moebius<Field>& m)
{
    return "[[" + to_expression(m(0, 0)) + ", " + to_expression(m(0, 1)) + "], [" + to_expression(m(1, 0)) + ", "
           + to_expression(m(1, 1)) + "]]";
}

/// "2 Q_(0) + Q_(1) - Q_inf"
template <exact_field Field>
std::string to_text(const divisor<Field>& d)
{
    if (d.is_zero())
        return "0";
    std::string out;
    for (const auto& [p, m] : d.terms()) {
        const std::int64_t mag = m < 0 ? -m : m;
        if (out.empty())
            out += m < 0 ? "-" : "";
        else
            out += m < 0 ? " - " : " + ";
        if (mag != 1)
            out += std::to_string(mag) + " ";
        out += to_text(p);
    }
    return out;
}

} // namespace galois_forge

#endif // GALOIS_FORGE_FORMAT_HPP
