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

#ifndef GALOIS_FORGE_ERROR_HPP
#define GALOIS_FORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace galois_forge {

/// Failure categories raised by the library. Every thrown `error` carries one.
enum class errc {
    non_prime_characteristic,
    reducible_modulus,
    unsupported_kind,
    division_by_zero,
    spec_mismatch,
    no_such_root,
    not_finite_within_cap,
    points_equal,
    field_mismatch,
    eta_not_in_g2,
    zero_function,
    no_nonconstant_symmetric_function,
    pole_divisor_mismatch,
    degree_mismatch,
    image_not_as_predicted,
    line_contains_curve,
    extraneous_factor_irremovable,
    parse_error,
    space_too_large,
    invalid_argument,
};

inline const char* to_string(errc code) noexcept
{
    switch (code) {
    case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::unsupported_kind: return "UnsupportedKind";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::no_such_root: return "NoSuchRoot";
    case errc::not_finite_within_cap: return "NotFiniteWithinCap";
    case errc::points_equal: return "PointsEqual";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::eta_not_in_g2: return "EtaNotInG2";
    case errc::zero_function: return "ZeroFunction";
    case errc::no_nonconstant_symmetric_function: return "NoNonconstantSymmetricFunction";
    case errc::pole_divisor_mismatch: return "PoleDivisorMismatch";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::image_not_as_predicted: return "ImageNotAsPredicted";
    case errc::line_contains_curve: return "LineContainsCurve";
    case errc::extraneous_factor_irremovable: return "ExtraneousFactorIrremovable";
    case errc::parse_error: return "ParseError";
    case errc::space_too_large: return "SpaceTooLarge";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Parse failure with a position. `line`/`column` are 1-based; zero means unknown.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error(errc::parse_error, what + " (line " + std::to_string(line) + ", column "
                                       + std::to_string(column) + ")"),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace galois_forge

#endif // GALOIS_FORGE_ERROR_HPP
