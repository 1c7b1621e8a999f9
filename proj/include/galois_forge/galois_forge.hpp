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

/// @file galois_forge.hpp
/// @brief Everything at once.

#ifndef GALOIS_FORGE_GALOIS_FORGE_HPP
#define GALOIS_FORGE_GALOIS_FORGE_HPP

#include "galois_forge/error.hpp"
#include "galois_forge/exact_fields.hpp"
#include "galois_forge/expression.hpp"
#include "galois_forge/poly.hpp"
#include "galois_forge/pgl2.hpp"
#include "galois_forge/divisors.hpp"
#include "galois_forge/quotient_maps.hpp"
#include "galois_forge/criterion.hpp"
#include "galois_forge/plane_model.hpp"
#include "galois_forge/implicit.hpp"
#include "galois_forge/format.hpp"
#include "galois_forge/io.hpp"
#include "galois_forge/search.hpp"
#include "galois_forge/fixtures.hpp"
#include "galois_forge/commands.hpp"

#endif // GALOIS_FORGE_GALOIS_FORGE_HPP
