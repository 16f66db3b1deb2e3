// Copyright 2026 The gsys Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "gsys/cobongartz.hpp"
#include "gsys/explorer.hpp"
#include "gsys/gsystem.hpp"
#include "gsys/laurent_seed.hpp"
#include "gsys/matrix.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys {

using Json = nlohmann::json;

// Integers that do not fit in 64 bits are written as decimal strings and
// accepted back in that form.
Json json_of(const Int& x);
Json json_of(const IntVector& v);
Json json_of(const IntMatrix& m);
Json json_of(const MatrixSeed& seed);
Json json_of(const LaurentSeed& seed);
Json json_of(const CompletionResult& result);
Json json_of(const CanonicalSeed& node);
Json json_of(const ExchangeGraph& graph);
Json json_of(const GSystemReport& report);
Json json_of(const GCollection& collection);

// ParseError on malformed input.
Int int_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
MatrixSeed matrix_seed_from_json(const Json& j);
LaurentSeed laurent_seed_from_json(const Json& j);
GCollection gcollection_from_json(const Json& j);

// JSON text of a square skew-symmetrizable matrix.
ExchangeMatrix parse_exchange_matrix(std::string_view text);

}  // namespace gsys
