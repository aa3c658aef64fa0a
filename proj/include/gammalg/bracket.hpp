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

/// The coordinatization data (D, V, <,>): an associative unital algebra D, a
/// commutative D-bimodule V annihilated by [D,D], and a skew D-bilinear form
/// V x V -> Z(D) satisfying the cyclic relation
/// <u,v>w + <v,w>u + <w,u>v = 0.
class BracketModule {
public:
    /// action[i] is the matrix of left multiplication by the i-th D basis
    /// vector on V (column-convention: a_i * v_c = sum_r action[i][r][c] v_r);
    /// bracket[u][v] holds D-coordinates of <v_u, v_v>.
    BracketModule(StructureAlgebra D, std::vector<std::string> vlabels, std::vector<Mat> action,
                  std::vector<std::vector<Vec>> bracket);

    const StructureAlgebra& D() const { return D_; }
    const FieldSpec& field() const { return D_.field(); }
    std::size_t vdim() const { return vlabels_.size(); }
    const std::string& vlabel(std::size_t i) const { return vlabels_[i]; }

    /// d (D-coords) acting on v (V-coords).
    Vec act(const Vec& d, const Vec& v) const;
    /// <u, v> as D-coords for u, v V-coords.
    Vec bracket(const Vec& u, const Vec& v) const;
    Vec dmul(const Vec& a, const Vec& b) const;

    /// Checks every axiom exhaustively on basis tuples; empty string = valid.
    std::string validate() const;

private:
    StructureAlgebra D_;
    std::vector<std::string> vlabels_;
    std::vector<Mat> action_;
    std::vector<std::vector<Vec>> bracket_;
};

/// Element of M2(D) + V^2: a 2x2 matrix over D plus a pair from V.
struct M2DElement {
    std::array<Vec, 4> mat;  // d11, d12, d21, d22 as D-coordinates
    Vec x, y;                // the pair, as V-coordinates

    static M2DElement zero(const BracketModule& m);
};

/// The coordinatized product
///   XY = X_a Y_a + (-<x,t> -<y,t>; <x,z> <y,z>) + (z,t)X_a + (x,y)(Y_a)*,
/// with (z,t)M the row action (z m11 + t m21, z m12 + t m22) and
/// M* = (d -b; -c a).
M2DElement m2d_multiply(const BracketModule& m, const M2DElement& X, const M2DElement& Y);

/// The same algebra as an explicit structure-constant table on the basis
/// e_ij(d-basis) and m_k(v-basis), graded with V^2 odd.
StructureAlgebra m2d_structure_algebra(const BracketModule& m);

}  // namespace gammalg
