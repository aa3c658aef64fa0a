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

#include <array>

#include "gammalg/algebra.hpp"

namespace gammalg {

/// 2x2 matrix units over the field.
StructureAlgebra make_m2(const FieldSpec& f);

/// The 6-dimensional simple alternative superalgebra B(4,2) = M2 + Cay with
/// m1^2 = e21, m2^2 = -e12, m1*m2 = -e11, m2*m1 = e22 and the Cay action
/// e_ij*m_k = delta_ik m_j, m*a = abar*m.
StructureAlgebra make_b42(const FieldSpec& f);

/// The 3-dimensional superalgebra B(1,2): F + (Fx + Fy), x^2 = y^2 = 0,
/// xy = -yx = 1.
StructureAlgebra make_b12(const FieldSpec& f);

/// Split null extension S = M2 + Cay with Cay^2 = 0.
StructureAlgebra make_split_null(const FieldSpec& f);

/// Split octonions by Cayley-Dickson doubling of M2 with parameter
/// v_sq = v^2 != 0:  a*b = ab, a*(vb) = v(abar b), (vb)*a = v(ab),
/// (va)*(vb) = (b abar) v^2.
StructureAlgebra make_split_octonions(const FieldSpec& f, const Scalar& v_sq);

/// Grassmann algebra on k anticommuting generators with its Z2-grading.
StructureAlgebra make_grassmann(const FieldSpec& f, unsigned k);

/// Catalog entry by name: M2, B42, B12, Cay-split-null, octonion-split,
/// grassmann(k). v_sq applies to octonion-split only (defaults to 1).
StructureAlgebra make_builtin(std::string_view name, const FieldSpec& f,
                              const std::optional<Scalar>& v_sq = std::nullopt);

/// Re-signs the B(4,2) presentation (e21 <-> -e21, e12 <-> -e12, m2 <-> -m2)
/// to match the earlier literature's odd-product signs.
StructureAlgebra b42_legacy_presentation(const StructureAlgebra& b42);

/// Symplectic involution (a b; c d)* = (d -b; -c a) on an element supported
/// on an identified M2 block (basis labels e11, e12, e21, e22).
AlgebraElement symplectic_involution(const AlgebraElement& a);

struct M2Decomposition {
    Mat va_basis;  // associative part: associators with the M2 block vanish
    Mat vc_basis;  // Cayley part: a*v = v*abar against the M2 block
    bool complementary = false;
};

/// Splits a unital algebra with an embedded M2 (four coefficient vectors for
/// e11, e12, e21, e22) into the associative and Cayley parts. Verifies the
/// matrix-unit relations and e11 + e22 = unit before decomposing, and reports
/// whether the two parts are complementary.
M2Decomposition decompose_m2_bimodule(const StructureAlgebra& alg, const std::array<Vec, 4>& units);

}  // namespace gammalg
