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

#include "gammalg/identities.hpp"

namespace gammalg {

/// Exhaustive verification of the four defining conditions:
///   (i)   the even part is unital associative, commutes with the odd part,
///         and associates with everything ((even, -, -) = 0),
///   (ii)  products of odd elements are central in the even part,
///   (iii) xy + yx = 0 for odd x, y,
///   (iv)  (xy)z + (yz)x + (zx)y = 0 for odd x, y, z.
IdentityReport verify_gamma_conditions(const StructureAlgebra& g);

/// A Z2-graded algebra bundled with its cached condition report.
class GammaAlgebra {
public:
    static GammaAlgebra analyze(StructureAlgebra carrier);

    const StructureAlgebra& carrier() const { return *carrier_; }
    const std::shared_ptr<const StructureAlgebra>& carrier_ptr() const { return carrier_; }
    const IdentityReport& report() const { return report_; }
    bool passes() const { return report_.pass(); }

    const std::vector<std::size_t>& even() const { return even_; }
    const std::vector<std::size_t>& odd() const { return odd_; }

    /// Throws CheckError with the first failing condition when unverified.
    void require_verified() const;

private:
    GammaAlgebra() = default;
    std::shared_ptr<const StructureAlgebra> carrier_;  // stable address for elements
    std::vector<std::size_t> even_, odd_;
    IdentityReport report_;
};

/// F[s]/(s^k): handy commutative associative input for the constructions.
StructureAlgebra make_truncated_poly_algebra(const FieldSpec& f, unsigned k,
                                             const std::string& var = "s");

/// The construction Gamma(A) = A + A^2 for commutative associative unital A:
/// even part A, odd part pairs with a(b,c) = (ab,ac) and (a,b)(c,d) = ad - bc.
/// The result always passes the condition verifier.
GammaAlgebra gamma_of_commutative(const StructureAlgebra& A);

/// Grassmann envelope G0 x S0 + G1 x S1 with the Koszul sign
/// (g x s)(h x t) = (-1)^{|s||h|} gh x st; returns a plain (trivially graded)
/// algebra on the product basis.
StructureAlgebra grassmann_envelope(const StructureAlgebra& G, const StructureAlgebra& S);

/// Supercommutativity plus the Jordan super-identity, swept exhaustively on
/// homogeneous basis tuples; in characteristic 3 the super-alternativity
/// sweeps run as well. Requires a commutative even part.
IdentityReport check_jordan_super(const GammaAlgebra& g);

}  // namespace gammalg
