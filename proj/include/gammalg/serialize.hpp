/*
   Copyright 2026 The gammalg authors

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

#pragma once

#include <json.hpp>

#include "gammalg/coordinatize.hpp"
#include "gammalg/free_gamma.hpp"

namespace gammalg {

using Json = nlohmann::ordered_json;

// Polynomials: {"variables": [...], "terms": [{"exps": [...], "coeff": "..."}]}
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const FieldSpec& f);

// Structure constants:
// {"field": "...", "basis": [{"label","parity"}], "unit": [...]|null,
//  "table": [[[coeff,...],...],...]}
Json algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const Json& j);

// Elements: {"coords": ["...", ...]}
Json element_to_json(const AlgebraElement& e);
Vec element_coords_from_json(const Json& j, const FieldSpec& f, std::size_t dim);

// Bracket modules: {"D": {...}, "V": {"dim", "labels", "action"}, "bracket": [...]}
Json bracket_module_to_json(const BracketModule& m);
BracketModule bracket_module_from_json(const Json& j);

// S_n elements: {"terms": [{"pairs": [[i,j],...], "coeff": "..."}]} in
// descending monomial order.
Json selement_to_json(const SElement& s);
SElement selement_from_json(const Json& j, const FieldSpec& f, int n);

Json monomial_list_to_json(const std::vector<StandardMonomial>& list);

// Free normal forms:
// {"m","n","nc":[{"word",...,"coeff"}],"even":[...],"odd":[...]}
Json free_element_to_json(const FreeGammaElement& e);
FreeGammaElement free_element_from_json(const Json& j, const FieldSpec& f);

Json report_to_json(const IdentityReport& r);

/// Stable text rendering of an S_n element: "a(1,3)a(2,4) - a(1,2)a(3,4)".
std::string selement_text(const SElement& s);

/// Parses "a(1,4)a(2,3)" (optionally "1" for the empty monomial).
std::vector<IndexPair> parse_monomial_text(std::string_view text);

}  // namespace gammalg
