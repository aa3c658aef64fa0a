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

#include "gammalg/coordinatize.hpp"

#include <map>

#include "gammalg/builtins.hpp"

namespace gammalg {

AlgebraElement AlgebraMorphism::apply(const AlgebraElement& a) const {
    return cod->element(apply_coords(a.coords()));
}

Vec AlgebraMorphism::apply_coords(const Vec& v) const {
    return mat_apply(matrix, v, cod->field());
}

std::string AlgebraMorphism::check_homomorphism() const {
    if (!(dom->field() == cod->field())) return "domain and codomain fields differ";
    for (std::size_t i = 0; i < dom->dim(); ++i)
        for (std::size_t j = 0; j < dom->dim(); ++j) {
            AlgebraElement lhs = cod->element(apply_coords(dom->table(i, j)));
            AlgebraElement rhs =
                apply(dom->basis_element(i)) * apply(dom->basis_element(j));
            if (!(lhs == rhs))
                return "f(" + dom->basis(i).label + "*" + dom->basis(j).label +
                       ") != f(" + dom->basis(i).label + ")*f(" + dom->basis(j).label + ")";
        }
    if (dom->has_unit() && cod->has_unit()) {
        if (!(apply(dom->unit()) == cod->unit())) return "unit does not map to unit";
    }
    return {};
}

bool AlgebraMorphism::respects_grading() const {
    for (std::size_t j = 0; j < dom->dim(); ++j) {
        const int p = dom->basis(j).parity;
        for (std::size_t i = 0; i < cod->dim(); ++i)
            if (!matrix[i][j].is_zero() && cod->basis(i).parity != p) return false;
    }
    return true;
}

bool AlgebraMorphism::is_bijective() const {
    if (dom->dim() != cod->dim()) return false;
    return matrix_rank(matrix, cod->field()) == dom->dim();
}

AlgebraMorphism make_morphism(std::shared_ptr<const StructureAlgebra> dom,
                              std::shared_ptr<const StructureAlgebra> cod, Mat matrix) {
    if (matrix.size() != cod->dim()) throw MismatchError("morphism matrix must have cod.dim rows");
    for (const auto& row : matrix)
        if (row.size() != dom->dim()) throw MismatchError("morphism matrix must have dom.dim columns");
    return AlgebraMorphism{std::move(dom), std::move(cod), std::move(matrix)};
}

CoordinatizedM2 gamma_to_m2(const GammaAlgebra& g) {
    g.require_verified();
    const StructureAlgebra& A = g.carrier();
    const FieldSpec& f = A.field();
    const auto& even = g.even();
    const auto& odd = g.odd();
    const std::size_t d0 = even.size(), d1 = odd.size();

    // D = Gamma0 as its own structure algebra.
    std::vector<BasisVector> dbasis;
    for (std::size_t e : even) dbasis.push_back({A.basis(e).label, 0});
    std::vector<std::vector<Vec>> dtable(d0, std::vector<Vec>(d0, Vec(d0, Scalar::zero(f))));
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d0; ++j) {
            const Vec& prod = A.table(even[i], even[j]);
            for (std::size_t k = 0; k < d0; ++k) dtable[i][j][k] = prod[even[k]];
        }
    Vec dunit(d0, Scalar::zero(f));
    for (std::size_t k = 0; k < d0; ++k) dunit[k] = (*A.unit_coords())[even[k]];
    StructureAlgebra D(f, std::move(dbasis), std::move(dtable), std::move(dunit));

    // V = Gamma1 with action and bracket read off the carrier table.
    std::vector<std::string> vlabels;
    for (std::size_t o : odd) vlabels.push_back(A.basis(o).label);
    std::vector<Mat> action(d0, Mat(d1, Vec(d1, Scalar::zero(f))));
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t c = 0; c < d1; ++c) {
            const Vec& prod = A.table(even[i], odd[c]);
            for (std::size_t r = 0; r < d1; ++r) action[i][r][c] = prod[odd[r]];
        }
    std::vector<std::vector<Vec>> bracket(d1, std::vector<Vec>(d1, Vec(d0, Scalar::zero(f))));
    for (std::size_t u = 0; u < d1; ++u)
        for (std::size_t v = 0; v < d1; ++v) {
            const Vec& prod = A.table(odd[u], odd[v]);
            for (std::size_t k = 0; k < d0; ++k) bracket[u][v][k] = prod[even[k]];
        }

    BracketModule module(std::move(D), std::move(vlabels), std::move(action), std::move(bracket));
    std::string why = module.validate();
    if (!why.empty()) throw CheckError("induced bracket module invalid: " + why);
    CoordinatizedM2 out{std::move(module), nullptr};
    out.alg = std::make_shared<const StructureAlgebra>(m2d_structure_algebra(out.module));
    return out;
}

std::size_t B42Envelope::position(std::size_t gamma_index, std::size_t b42_index) const {
    for (std::size_t i = 0; i < desc.size(); ++i)
        if (desc[i] == std::make_pair(gamma_index, b42_index)) return i;
    throw CheckError("basis vector not present in the envelope");
}

B42Envelope envelope_b42(const GammaAlgebra& g) {
    g.require_verified();
    const StructureAlgebra& A = g.carrier();
    const FieldSpec& f = A.field();
    const char* b42_labels[6] = {"e11", "e12", "e21", "e22", "m1", "m2"};

    B42Envelope env;
    for (std::size_t e : g.even())
        for (std::size_t s = 0; s < 4; ++s) env.desc.emplace_back(e, s);
    for (std::size_t o : g.odd())
        for (std::size_t s = 4; s < 6; ++s) env.desc.emplace_back(o, s);
    const std::size_t dim = env.desc.size();

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        const auto [gi, s] = env.desc[i];
        pos[env.desc[i]] = i;
        basis.push_back({A.basis(gi).label + "⊗" + b42_labels[s], s < 4 ? 0 : 1});
    }

    // Products come from the B(4,2) table with plain tensor coefficients.
    const StructureAlgebra b42 = make_b42(f);
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, Scalar::zero(f))));
    for (std::size_t a = 0; a < dim; ++a) {
        const auto [gi, s] = env.desc[a];
        for (std::size_t b = 0; b < dim; ++b) {
            const auto [gj, t] = env.desc[b];
            const Vec& gprod = A.table(gi, gj);
            const Vec& bprod = b42.table(s, t);
            for (std::size_t gk = 0; gk < A.dim(); ++gk) {
                if (gprod[gk].is_zero()) continue;
                for (std::size_t u = 0; u < 6; ++u) {
                    if (bprod[u].is_zero()) continue;
                    auto it = pos.find({gk, u});
                    if (it == pos.end())
                        throw CheckError("envelope product left the basis (grading broken)");
                    table[a][b][it->second] += gprod[gk] * bprod[u];
                }
            }
        }
    }
    Vec unit(dim, Scalar::zero(f));
    const Vec& gu = *A.unit_coords();
    for (std::size_t i = 0; i < dim; ++i) {
        const auto [gi, s] = env.desc[i];
        if (s == 0 || s == 3) unit[i] = gu[gi];
    }
    env.alg =
        std::make_shared<const StructureAlgebra>(StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit)));
    return env;
}

AlgebraMorphism phi_iso(const GammaAlgebra& g, const CoordinatizedM2& coord,
                        const B42Envelope& env) {
    g.require_verified();
    const FieldSpec& f = g.carrier().field();
    const std::size_t d0 = g.even().size(), d1 = g.odd().size();
    const std::size_t dim = 4 * d0 + 2 * d1;
    if (coord.alg->dim() != dim || env.alg->dim() != dim)
        throw MismatchError("coordinatization and envelope have different dimensions");
    // m2d basis: e11-block (d0), e12, e21, e22, then m1-slot (d1), m2-slot.
    Mat matrix(dim, Vec(dim, Scalar::zero(f)));
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t k = 0; k < d0; ++k)
            matrix[env.position(g.even()[k], s)][s * d0 + k] = Scalar::one(f);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t k = 0; k < d1; ++k)
            matrix[env.position(g.odd()[k], 4 + s)][4 * d0 + s * d1 + k] = Scalar::one(f);
    AlgebraMorphism phi = make_morphism(coord.alg, env.alg, std::move(matrix));
    std::string why = phi.check_homomorphism();
    if (!why.empty()) throw CheckError("phi is not multiplicative: " + why);
    if (!phi.is_bijective()) throw CheckError("phi is not bijective");
    return phi;
}

AlgebraMorphism transport_morphism(const GammaAlgebra& g, const GammaAlgebra& h,
                                   const AlgebraMorphism& psi, const B42Envelope& env_g,
                                   const B42Envelope& env_h) {
    if (psi.dom->dim() != g.carrier().dim() || psi.cod->dim() != h.carrier().dim())
        throw MismatchError("psi does not map the given gamma algebras");
    if (!psi.respects_grading()) throw CheckError("psi does not respect the grading");
    std::string why = psi.check_homomorphism();
    if (!why.empty()) throw CheckError("psi is not a homomorphism: " + why);

    const FieldSpec& f = g.carrier().field();
    const std::size_t dim_g = env_g.alg->dim(), dim_h = env_h.alg->dim();
    Mat matrix(dim_h, Vec(dim_g, Scalar::zero(f)));
    for (std::size_t c = 0; c < dim_g; ++c) {
        const auto [gi, s] = env_g.desc[c];
        for (std::size_t k = 0; k < h.carrier().dim(); ++k) {
            const Scalar& coeff = psi.matrix[k][gi];
            if (coeff.is_zero()) continue;
            matrix[env_h.position(k, s)][c] += coeff;
        }
    }
    AlgebraMorphism F = make_morphism(env_g.alg, env_h.alg, std::move(matrix));
    why = F.check_homomorphism();
    if (!why.empty()) throw CheckError("transported map is not a homomorphism: " + why);
    return F;
}

AlgebraMorphism recover_morphism(const GammaAlgebra& g, const GammaAlgebra& h,
                                 const B42Envelope& env_g, const B42Envelope& env_h,
                                 const AlgebraMorphism& Phi) {
    const FieldSpec& f = g.carrier().field();
    if (Phi.dom->dim() != env_g.alg->dim() || Phi.cod->dim() != env_h.alg->dim())
        throw MismatchError("Phi does not map the given envelopes");

    // Phi must fix every 1 x e_ij.
    const Vec& gu = *g.carrier().unit_coords();
    const Vec& hu = *h.carrier().unit_coords();
    for (std::size_t s = 0; s < 4; ++s) {
        Vec src(env_g.alg->dim(), Scalar::zero(f));
        for (std::size_t k = 0; k < g.carrier().dim(); ++k)
            if (!gu[k].is_zero()) src[env_g.position(k, s)] = gu[k];
        Vec dst(env_h.alg->dim(), Scalar::zero(f));
        for (std::size_t k = 0; k < h.carrier().dim(); ++k)
            if (!hu[k].is_zero()) dst[env_h.position(k, s)] = hu[k];
        if (!(Phi.apply_coords(src) == dst))
            throw CheckError("Phi is not identical on the M2 block");
    }

    const std::size_t dg = g.carrier().dim(), dh = h.carrier().dim();
    Mat psi_matrix(dh, Vec(dg, Scalar::zero(f)));

    // psi0: read the e11 coordinate of Phi(gamma x e11), then check all four
    // matrix slots transform consistently.
    for (std::size_t gi : g.even()) {
        Vec src(env_g.alg->dim(), Scalar::zero(f));
        src[env_g.position(gi, 0)] = Scalar::one(f);
        Vec img = Phi.apply_coords(src);
        Vec alpha(dh, Scalar::zero(f));
        for (std::size_t k : h.even()) alpha[k] = img[env_h.position(k, 0)];
        for (std::size_t s = 0; s < 4; ++s) {
            Vec src_s(env_g.alg->dim(), Scalar::zero(f));
            src_s[env_g.position(gi, s)] = Scalar::one(f);
            Vec expect(env_h.alg->dim(), Scalar::zero(f));
            for (std::size_t k : h.even())
                if (!alpha[k].is_zero()) expect[env_h.position(k, s)] = alpha[k];
            if (!(Phi.apply_coords(src_s) == expect))
                throw CheckError("Phi is not induced by a coordinate map on the matrix part");
        }
        for (std::size_t k = 0; k < dh; ++k) psi_matrix[k][gi] = alpha[k];
    }

    // psi1: Phi(gamma x m1) must be alpha x m1; a nonzero m2 component
    // contradicts (1 x e11)-invariance, which forces beta = 0.
    for (std::size_t gi : g.odd()) {
        Vec src(env_g.alg->dim(), Scalar::zero(f));
        src[env_g.position(gi, 4)] = Scalar::one(f);
        Vec img = Phi.apply_coords(src);
        Vec alpha(dh, Scalar::zero(f));
        for (std::size_t k : h.odd()) alpha[k] = img[env_h.position(k, 4)];
        for (std::size_t k : h.odd()) {
            if (!img[env_h.position(k, 5)].is_zero())
                throw CheckError(
                    "image of " + g.carrier().basis(gi).label +
                    "⊗m1 has a beta⊗m2 component; (1⊗e11)-invariance forces beta = 0, so Phi "
                    "is not an envelope morphism");
        }
        Vec expect(env_h.alg->dim(), Scalar::zero(f));
        for (std::size_t k : h.odd())
            if (!alpha[k].is_zero()) expect[env_h.position(k, 4)] = alpha[k];
        if (!(img == expect))
            throw CheckError("image of a gamma⊗m1 element leaves the odd part");
        // Phi(gamma x m2) = alpha x m2.
        Vec src2(env_g.alg->dim(), Scalar::zero(f));
        src2[env_g.position(gi, 5)] = Scalar::one(f);
        Vec expect2(env_h.alg->dim(), Scalar::zero(f));
        for (std::size_t k : h.odd())
            if (!alpha[k].is_zero()) expect2[env_h.position(k, 5)] = alpha[k];
        if (!(Phi.apply_coords(src2) == expect2))
            throw CheckError("Phi(gamma⊗m2) != alpha⊗m2 for the recovered alpha");
        for (std::size_t k = 0; k < dh; ++k) psi_matrix[k][gi] = alpha[k];
    }

    AlgebraMorphism psi = make_morphism(g.carrier_ptr(), h.carrier_ptr(), std::move(psi_matrix));
    if (!psi.respects_grading()) throw CheckError("recovered psi does not respect the grading");
    std::string why = psi.check_homomorphism();
    if (!why.empty()) throw CheckError("recovered psi is not a homomorphism: " + why);
    AlgebraMorphism F = transport_morphism(g, h, psi, env_g, env_h);
    if (!(F.matrix == Phi.matrix))
        throw CheckError("F(psi) differs from Phi (Phi is not an envelope morphism)");
    return psi;
}

}  // namespace gammalg
