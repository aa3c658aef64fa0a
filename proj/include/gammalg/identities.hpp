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

#include <optional>
#include <string>
#include <vector>

#include "gammalg/algebra.hpp"

namespace gammalg {

/// Identities verifiable by exhaustive sweeps over basis tuples. Each kind
/// expands to multilinear conditions (plus the diagonal instances needed for
/// completeness in every characteristic); super kinds carry Koszul signs
/// computed from the declared parities.
enum class IdentityKind {
    LeftAlternative,
    RightAlternative,
    Flexible,
    Associative,
    SuperLeftAlternative,
    SuperRightAlternative,
    SuperAlternative,  // both super laws
    SuperCommutative,
    JordanSuper,
    GammaConditions,
    CayleyBimoduleLaw,
};

IdentityKind parse_identity_kind(std::string_view name);
std::string identity_kind_name(IdentityKind kind);

/// One verified condition: pass, or fail with the first witness tuple and
/// its nonzero value.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> witness;
    std::optional<AlgebraElement> value;
    std::string note;
};

struct IdentityReport {
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

/// Exhaustive multilinear check of the identity over all basis tuples of its
/// arity; on failure the report carries one witness tuple and its value.
IdentityReport check_identity(const StructureAlgebra& alg, IdentityKind kind);

}  // namespace gammalg
