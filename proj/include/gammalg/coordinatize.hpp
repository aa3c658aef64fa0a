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

#include <memory>

#include "gammalg/bracket.hpp"
#include "gammalg/gamma.hpp"

namespace gammalg {

/// Linear map between structure algebras, as a cod.dim x dom.dim matrix.
struct AlgebraMorphism {
    std::shared_ptr<const StructureAlgebra> dom;
    std::shared_ptr<const StructureAlgebra> cod;
    Mat matrix;

    AlgebraElement apply(const AlgebraElement& a) const;
    Vec apply_coords(const Vec& v) const;

    /// Empty string when f(ab) = f(a)f(b) on all basis pairs and units map
    /// to units.
    std::string check_homomorphism() const;
    bool respects_grading() const;
    bool is_bijective() const;

    bool operator==(const AlgebraMorphism& o) const { return matrix == o.matrix; }
};

AlgebraMorphism make_morphism(std::shared_ptr<const StructureAlgebra> dom,
                              std::shared_ptr<const StructureAlgebra> cod, Mat matrix);

/// The Theorem-2 algebra induced by a verified Gamma: D = even part,
/// V = odd part, <u,v> = uv.
struct CoordinatizedM2 {
    BracketModule module;
    std::shared_ptr<const StructureAlgebra> alg;  // M2(Gamma0) + Gamma1^2
};
CoordinatizedM2 gamma_to_m2(const GammaAlgebra& g);

/// The Gamma-envelope Gamma0 x M2 + Gamma1 x Cay, with basis gamma x e_ij,
/// delta x m_k and product (gamma x b)(delta x c) = gamma delta x bc.
struct B42Envelope {
    std::shared_ptr<const StructureAlgebra> alg;
    std::vector<std::pair<std::size_t, std::size_t>> desc;  // (gamma index, B(4,2) index)
    std::size_t position(std::size_t gamma_index, std::size_t b42_index) const;
};
B42Envelope envelope_b42(const GammaAlgebra& g);

/// The Theorem-3 map X + (x,y) -> X + x⊗m1 + y⊗m2 between gamma_to_m2(g) and
/// envelope_b42(g); verified bijective and multiplicative on all basis pairs.
AlgebraMorphism phi_iso(const GammaAlgebra& g, const CoordinatizedM2& coord,
                        const B42Envelope& env);

/// F(psi)(gamma x b) = psi(gamma) x b for a graded homomorphism psi; the
/// result is verified to be an algebra homomorphism of the envelopes.
AlgebraMorphism transport_morphism(const GammaAlgebra& g, const GammaAlgebra& h,
                                   const AlgebraMorphism& psi, const B42Envelope& env_g,
                                   const B42Envelope& env_h);

/// Reads psi back from an envelope morphism Phi that fixes every 1 x e_ij:
/// psi0 from the (1,1) matrix coordinate, psi1 from Phi(gamma x m1) = alpha x m1
/// (a nonzero m2 component is rejected with the beta = 0 forcing diagnostic);
/// verifies psi is a graded homomorphism with F(psi) = Phi.
AlgebraMorphism recover_morphism(const GammaAlgebra& g, const GammaAlgebra& h,
                                 const B42Envelope& env_g, const B42Envelope& env_h,
                                 const AlgebraMorphism& Phi);

}  // namespace gammalg
