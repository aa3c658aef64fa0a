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

#include "gammalg/identities.hpp"

#include "gammalg/gamma.hpp"

namespace gammalg {

namespace {

using Assoc = AlgebraElement (*)(const StructureAlgebra&, std::size_t, std::size_t, std::size_t);

AlgebraElement assoc(const StructureAlgebra& A, std::size_t i, std::size_t j, std::size_t k) {
    return associator(A.basis_element(i), A.basis_element(j), A.basis_element(k));
}

int parity(const StructureAlgebra& A, std::size_t i) { return A.basis(i).parity; }

Scalar koszul(const StructureAlgebra& A, int exponent) {
    return exponent % 2 == 0 ? Scalar::one(A.field()) : -Scalar::one(A.field());
}

void record_failure(CheckResult& res, const StructureAlgebra& A,
                    std::initializer_list<std::size_t> tuple, AlgebraElement value) {
    res.pass = false;
    for (auto t : tuple) res.witness.push_back(A.basis(t).label);
    res.value = std::move(value);
}

// (x,x,y) = 0: diagonal instances plus the linearization, which together are
// complete in every characteristic. In super mode the diagonal is required
// for even x only and the linearization carries the sign (-1)^{x̄z̄}.
CheckResult left_alternative_sweep(const StructureAlgebra& A, bool super) {
    CheckResult res;
    res.name = super ? "super-left-alternative" : "left-alternative";
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d && res.pass; ++i) {
        if (super && parity(A, i) == 1) continue;
        for (std::size_t k = 0; k < d && res.pass; ++k) {
            AlgebraElement v = assoc(A, i, i, k);
            if (!v.is_zero()) record_failure(res, A, {i, i, k}, std::move(v));
        }
    }
    for (std::size_t i = 0; i < d && res.pass; ++i) {
        for (std::size_t j = i + 1; j < d && res.pass; ++j) {
            const Scalar sign =
                super ? koszul(A, parity(A, i) * parity(A, j)) : Scalar::one(A.field());
            for (std::size_t k = 0; k < d && res.pass; ++k) {
                AlgebraElement v = assoc(A, i, j, k) + assoc(A, j, i, k).scaled(sign);
                if (!v.is_zero()) record_failure(res, A, {i, j, k}, std::move(v));
            }
        }
    }
    return res;
}

CheckResult right_alternative_sweep(const StructureAlgebra& A, bool super) {
    CheckResult res;
    res.name = super ? "super-right-alternative" : "right-alternative";
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d && res.pass; ++i) {
        if (super && parity(A, i) == 1) continue;
        for (std::size_t k = 0; k < d && res.pass; ++k) {
            AlgebraElement v = assoc(A, k, i, i);
            if (!v.is_zero()) record_failure(res, A, {k, i, i}, std::move(v));
        }
    }
    for (std::size_t i = 0; i < d && res.pass; ++i) {
        for (std::size_t j = i + 1; j < d && res.pass; ++j) {
            const Scalar sign =
                super ? koszul(A, parity(A, i) * parity(A, j)) : Scalar::one(A.field());
            for (std::size_t k = 0; k < d && res.pass; ++k) {
                AlgebraElement v = assoc(A, k, i, j) + assoc(A, k, j, i).scaled(sign);
                if (!v.is_zero()) record_failure(res, A, {k, i, j}, std::move(v));
            }
        }
    }
    return res;
}

CheckResult flexible_sweep(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "flexible";
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d && res.pass; ++i)
        for (std::size_t k = 0; k < d && res.pass; ++k) {
            AlgebraElement v = assoc(A, i, k, i);
            if (!v.is_zero()) record_failure(res, A, {i, k, i}, std::move(v));
        }
    for (std::size_t i = 0; i < d && res.pass; ++i)
        for (std::size_t j = i + 1; j < d && res.pass; ++j)
            for (std::size_t k = 0; k < d && res.pass; ++k) {
                AlgebraElement v = assoc(A, i, k, j) + assoc(A, j, k, i);
                if (!v.is_zero()) record_failure(res, A, {i, k, j}, std::move(v));
            }
    return res;
}

CheckResult associative_sweep(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "associative";
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d && res.pass; ++i)
        for (std::size_t j = 0; j < d && res.pass; ++j)
            for (std::size_t k = 0; k < d && res.pass; ++k) {
                AlgebraElement v = assoc(A, i, j, k);
                if (!v.is_zero()) record_failure(res, A, {i, j, k}, std::move(v));
            }
    return res;
}

CheckResult super_commutative_sweep(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "super-commutative";
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d && res.pass; ++i)
        for (std::size_t j = i; j < d && res.pass; ++j) {
            const Scalar sign = koszul(A, parity(A, i) * parity(A, j));
            AlgebraElement v = A.basis_element(i) * A.basis_element(j) -
                               (A.basis_element(j) * A.basis_element(i)).scaled(sign);
            if (!v.is_zero()) record_failure(res, A, {i, j}, std::move(v));
        }
    return res;
}

// (xy,z,t) + (-1)^{ȳz̄+ȳt̄+z̄t̄}(xt,z,y) + (-1)^{x̄(ȳ+z̄+t̄)+z̄t̄}(yt,z,x) = 0
CheckResult jordan_super_sweep(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "jordan-super";
    const std::size_t d = A.dim();
    for (std::size_t x = 0; x < d && res.pass; ++x)
        for (std::size_t y = 0; y < d && res.pass; ++y)
            for (std::size_t z = 0; z < d && res.pass; ++z)
                for (std::size_t t = 0; t < d && res.pass; ++t) {
                    const int px = parity(A, x), py = parity(A, y), pz = parity(A, z),
                              pt = parity(A, t);
                    AlgebraElement bx = A.basis_element(x), by = A.basis_element(y),
                                   bz = A.basis_element(z), bt = A.basis_element(t);
                    AlgebraElement v =
                        associator(bx * by, bz, bt) +
                        associator(bx * bt, bz, by).scaled(koszul(A, py * pz + py * pt + pz * pt)) +
                        associator(by * bt, bz, bx)
                            .scaled(koszul(A, px * (py + pz + pt) + pz * pt));
                    if (!v.is_zero()) record_failure(res, A, {x, y, z, t}, std::move(v));
                }
    return res;
}

// a·v = v·ā for a in the identified M2 block (labels e11,e12,e21,e22) and v odd.
CheckResult cayley_law_sweep(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "cayley-bimodule-law";
    const char* labels[4] = {"e11", "e12", "e21", "e22"};
    std::size_t idx[4];
    for (int k = 0; k < 4; ++k) {
        auto found = A.index_of(labels[k]);
        if (!found) throw CheckError("no identified M2 block (missing basis label e11..e22)");
        idx[k] = *found;
    }
    // symplectic involution on the block: e11<->e22, e12->-e12, e21->-e21
    auto bar = [&](int k) {
        switch (k) {
            case 0: return A.basis_element(idx[3]);
            case 3: return A.basis_element(idx[0]);
            default: return -A.basis_element(idx[k]);
        }
    };
    for (int k = 0; k < 4 && res.pass; ++k) {
        for (std::size_t v : A.odd_indices()) {
            AlgebraElement val =
                A.basis_element(idx[k]) * A.basis_element(v) - A.basis_element(v) * bar(k);
            if (!val.is_zero()) {
                record_failure(res, A, {idx[k], v}, std::move(val));
                break;
            }
        }
    }
    return res;
}

}  // namespace

IdentityKind parse_identity_kind(std::string_view name) {
    if (name == "left-alternative") return IdentityKind::LeftAlternative;
    if (name == "right-alternative") return IdentityKind::RightAlternative;
    if (name == "flexible") return IdentityKind::Flexible;
    if (name == "associative") return IdentityKind::Associative;
    if (name == "super-left-alternative") return IdentityKind::SuperLeftAlternative;
    if (name == "super-right-alternative") return IdentityKind::SuperRightAlternative;
    if (name == "super-alternative") return IdentityKind::SuperAlternative;
    if (name == "super-commutative") return IdentityKind::SuperCommutative;
    if (name == "jordan-super") return IdentityKind::JordanSuper;
    if (name == "gamma-conditions") return IdentityKind::GammaConditions;
    if (name == "cayley-bimodule-law") return IdentityKind::CayleyBimoduleLaw;
    throw ParseError("unknown identity kind '" + std::string(name) + "'");
}

std::string identity_kind_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::LeftAlternative: return "left-alternative";
        case IdentityKind::RightAlternative: return "right-alternative";
        case IdentityKind::Flexible: return "flexible";
        case IdentityKind::Associative: return "associative";
        case IdentityKind::SuperLeftAlternative: return "super-left-alternative";
        case IdentityKind::SuperRightAlternative: return "super-right-alternative";
        case IdentityKind::SuperAlternative: return "super-alternative";
        case IdentityKind::SuperCommutative: return "super-commutative";
        case IdentityKind::JordanSuper: return "jordan-super";
        case IdentityKind::GammaConditions: return "gamma-conditions";
        case IdentityKind::CayleyBimoduleLaw: return "cayley-bimodule-law";
    }
    throw ParseError("unknown identity kind");
}

IdentityReport check_identity(const StructureAlgebra& alg, IdentityKind kind) {
    IdentityReport report;
    switch (kind) {
        case IdentityKind::LeftAlternative:
            report.checks.push_back(left_alternative_sweep(alg, false));
            break;
        case IdentityKind::RightAlternative:
            report.checks.push_back(right_alternative_sweep(alg, false));
            break;
        case IdentityKind::Flexible:
            report.checks.push_back(flexible_sweep(alg));
            break;
        case IdentityKind::Associative:
            report.checks.push_back(associative_sweep(alg));
            break;
        case IdentityKind::SuperLeftAlternative:
            report.checks.push_back(left_alternative_sweep(alg, true));
            break;
        case IdentityKind::SuperRightAlternative:
            report.checks.push_back(right_alternative_sweep(alg, true));
            break;
        case IdentityKind::SuperAlternative:
            report.checks.push_back(left_alternative_sweep(alg, true));
            report.checks.push_back(right_alternative_sweep(alg, true));
            break;
        case IdentityKind::SuperCommutative:
            report.checks.push_back(super_commutative_sweep(alg));
            break;
        case IdentityKind::JordanSuper:
            report.checks.push_back(jordan_super_sweep(alg));
            break;
        case IdentityKind::GammaConditions:
            return verify_gamma_conditions(alg);
        case IdentityKind::CayleyBimoduleLaw:
            report.checks.push_back(cayley_law_sweep(alg));
            break;
    }
    return report;
}

}  // namespace gammalg
