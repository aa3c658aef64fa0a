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

#include "gammalg/gamma.hpp"

namespace gammalg {

namespace {

void fail(CheckResult& res, const StructureAlgebra& A, std::initializer_list<std::size_t> tuple,
          AlgebraElement value) {
    res.pass = false;
    for (auto t : tuple) res.witness.push_back(A.basis(t).label);
    res.value = std::move(value);
}

CheckResult condition_i(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "(i) even part unital associative, [even,odd]=0, (even,-,-)=0";
    const auto even = A.even_indices();
    const auto odd = A.odd_indices();
    if (!A.has_unit()) {
        res.pass = false;
        res.note = "no unit in the even part";
        return res;
    }
    {
        AlgebraElement u = A.unit();
        if (u.homogeneous_parity() != 0) {
            res.pass = false;
            res.note = "declared unit is not even";
            return res;
        }
        for (std::size_t i = 0; i < A.dim(); ++i) {
            AlgebraElement b = A.basis_element(i);
            if (!(u * b == b) || !(b * u == b)) {
                fail(res, A, {i}, u * b - b);
                res.note = "unit law fails";
                return res;
            }
        }
    }
    for (std::size_t a : even)
        for (std::size_t b : even)
            for (std::size_t c : even) {
                AlgebraElement v =
                    associator(A.basis_element(a), A.basis_element(b), A.basis_element(c));
                if (!v.is_zero()) {
                    fail(res, A, {a, b, c}, std::move(v));
                    res.note = "even part not associative";
                    return res;
                }
            }
    for (std::size_t a : even)
        for (std::size_t x : odd) {
            AlgebraElement v = A.basis_element(a) * A.basis_element(x) -
                               A.basis_element(x) * A.basis_element(a);
            if (!v.is_zero()) {
                fail(res, A, {a, x}, std::move(v));
                res.note = "[even, odd] != 0";
                return res;
            }
        }
    for (std::size_t a : even)
        for (std::size_t b = 0; b < A.dim(); ++b)
            for (std::size_t c = 0; c < A.dim(); ++c) {
                AlgebraElement v =
                    associator(A.basis_element(a), A.basis_element(b), A.basis_element(c));
                if (!v.is_zero()) {
                    fail(res, A, {a, b, c}, std::move(v));
                    res.note = "(even, -, -) != 0";
                    return res;
                }
            }
    return res;
}

CheckResult condition_ii(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "(ii) odd*odd central in the even part";
    const auto even = A.even_indices();
    const auto odd = A.odd_indices();
    for (std::size_t x : odd) {
        for (std::size_t y : odd) {
            AlgebraElement z = A.basis_element(x) * A.basis_element(y);
            if (z.is_zero()) continue;
            for (std::size_t a : even) {
                AlgebraElement v = z * A.basis_element(a) - A.basis_element(a) * z;
                if (!v.is_zero()) {
                    fail(res, A, {x, y, a}, std::move(v));
                    return res;
                }
            }
        }
    }
    return res;
}

CheckResult condition_iii(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "(iii) xy + yx = 0 on the odd part";
    const auto odd = A.odd_indices();
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i; j < odd.size(); ++j) {
            AlgebraElement v = A.basis_element(odd[i]) * A.basis_element(odd[j]) +
                               A.basis_element(odd[j]) * A.basis_element(odd[i]);
            if (!v.is_zero()) {
                fail(res, A, {odd[i], odd[j]}, std::move(v));
                return res;
            }
        }
    return res;
}

CheckResult condition_iv(const StructureAlgebra& A) {
    CheckResult res;
    res.name = "(iv) (xy)z + (yz)x + (zx)y = 0 on the odd part";
    const auto odd = A.odd_indices();
    for (std::size_t x : odd)
        for (std::size_t y : odd)
            for (std::size_t z : odd) {
                AlgebraElement bx = A.basis_element(x), by = A.basis_element(y),
                               bz = A.basis_element(z);
                AlgebraElement v = (bx * by) * bz + (by * bz) * bx + (bz * bx) * by;
                if (!v.is_zero()) {
                    fail(res, A, {x, y, z}, std::move(v));
                    return res;
                }
            }
    return res;
}

}  // namespace

IdentityReport verify_gamma_conditions(const StructureAlgebra& g) {
    IdentityReport report;
    report.checks.push_back(condition_i(g));
    report.checks.push_back(condition_ii(g));
    report.checks.push_back(condition_iii(g));
    report.checks.push_back(condition_iv(g));
    return report;
}

GammaAlgebra GammaAlgebra::analyze(StructureAlgebra carrier) {
    GammaAlgebra g;
    g.carrier_ = std::make_shared<const StructureAlgebra>(std::move(carrier));
    g.even_ = g.carrier_->even_indices();
    g.odd_ = g.carrier_->odd_indices();
    g.report_ = verify_gamma_conditions(*g.carrier_);
    return g;
}

void GammaAlgebra::require_verified() const {
    if (passes()) return;
    const CheckResult* f = report_.first_failure();
    throw CheckError("gamma conditions fail: " + f->name +
                     (f->note.empty() ? std::string{} : " (" + f->note + ")"));
}

StructureAlgebra make_truncated_poly_algebra(const FieldSpec& f, unsigned k,
                                             const std::string& var) {
    if (k == 0) throw ParseError("truncation order must be positive");
    std::vector<BasisVector> basis;
    for (unsigned i = 0; i < k; ++i) {
        std::string label = i == 0 ? "1" : (i == 1 ? var : var + std::to_string(i));
        basis.push_back({label, 0});
    }
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, Vec(k, Scalar::zero(f))));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            if (i + j < k) table[i][j][i + j] = Scalar::one(f);
    Vec unit(k, Scalar::zero(f));
    unit[0] = Scalar::one(f);
    return StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit));
}

GammaAlgebra gamma_of_commutative(const StructureAlgebra& A) {
    const FieldSpec& f = A.field();
    const std::size_t d = A.dim();
    if (A.has_odd_part()) throw CheckError("input must be a plain commutative algebra");
    if (!A.has_unit()) throw CheckError("input algebra must be unital");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (!(A.table(i, j) == A.table(j, i)))
                throw CheckError("input algebra is not commutative");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!associator(A.basis_element(i), A.basis_element(j), A.basis_element(k))
                         .is_zero())
                    throw CheckError("input algebra is not associative");

    // Basis: A, then the two odd copies ("x:" <-> first slot, "y:" <-> second).
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back({A.basis(i).label, 0});
    for (std::size_t i = 0; i < d; ++i) basis.push_back({"x:" + A.basis(i).label, 1});
    for (std::size_t i = 0; i < d; ++i) basis.push_back({"y:" + A.basis(i).label, 1});

    const std::size_t dim = 3 * d;
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, Scalar::zero(f))));
    auto put = [&](std::size_t i, std::size_t j, std::size_t slot_offset, const Vec& acoords,
                   const Scalar& sign) {
        for (std::size_t k = 0; k < d; ++k)
            if (!acoords[k].is_zero()) table[i][j][slot_offset + k] += sign * acoords[k];
    };
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& ab = A.table(i, j);
            put(i, j, 0, ab, one);            // even * even
            put(i, d + j, d, ab, one);        // a * (b, 0) = (ab, 0)
            put(i, 2 * d + j, 2 * d, ab, one);
            put(d + i, j, d, ab, one);        // (a, 0) * b = (ab, 0)
            put(2 * d + i, j, 2 * d, ab, one);
            // (a,b)(c,d) = ad - bc: x-slot i times y-slot j gives +(a_i a_j),
            // y-slot i times x-slot j gives -(a_i a_j).
            put(d + i, 2 * d + j, 0, ab, one);
            put(2 * d + i, d + j, 0, ab, -one);
        }
    }
    Vec unit(dim, Scalar::zero(f));
    const Vec& u = *A.unit_coords();
    for (std::size_t k = 0; k < d; ++k) unit[k] = u[k];
    GammaAlgebra g =
        GammaAlgebra::analyze(StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit)));
    g.require_verified();
    return g;
}

StructureAlgebra grassmann_envelope(const StructureAlgebra& G, const StructureAlgebra& S) {
    if (!G.has_odd_part() && !S.has_odd_part()) {
        // fine: degenerate envelopes are allowed (grassmann(0) etc.)
    }
    const FieldSpec& f = G.field();
    if (!(f == S.field())) throw MismatchError("envelope factors over different fields");
    // G must be supercommutative and associative.
    for (std::size_t i = 0; i < G.dim(); ++i)
        for (std::size_t j = i; j < G.dim(); ++j) {
            const int sgn = G.basis(i).parity * G.basis(j).parity;
            AlgebraElement v = G.basis_element(i) * G.basis_element(j) -
                               (G.basis_element(j) * G.basis_element(i))
                                   .scaled(sgn % 2 == 0 ? Scalar::one(f) : -Scalar::one(f));
            if (!v.is_zero()) throw CheckError("envelope factor G is not supercommutative");
        }
    for (std::size_t i = 0; i < G.dim(); ++i)
        for (std::size_t j = 0; j < G.dim(); ++j)
            for (std::size_t k = 0; k < G.dim(); ++k)
                if (!associator(G.basis_element(i), G.basis_element(j), G.basis_element(k))
                         .is_zero())
                    throw CheckError("envelope factor G is not associative");

    // Product basis G_p x S_p, G-major.
    std::vector<std::pair<std::size_t, std::size_t>> desc;
    for (std::size_t g = 0; g < G.dim(); ++g)
        for (std::size_t s = 0; s < S.dim(); ++s)
            if (G.basis(g).parity == S.basis(s).parity) desc.emplace_back(g, s);
    const std::size_t dim = desc.size();
    std::vector<BasisVector> basis;
    basis.reserve(dim);
    for (auto [g, s] : desc) basis.push_back({G.basis(g).label + "⊗" + S.basis(s).label, 0});
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
    for (std::size_t i = 0; i < dim; ++i) pos[desc[i]] = i;

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, Scalar::zero(f))));
    for (std::size_t a = 0; a < dim; ++a) {
        const auto [g, s] = desc[a];
        for (std::size_t b = 0; b < dim; ++b) {
            const auto [h, t] = desc[b];
            const int sign_exp = S.basis(s).parity * G.basis(h).parity;
            const Scalar sign = sign_exp % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
            const Vec& gh = G.table(g, h);
            const Vec& st = S.table(s, t);
            for (std::size_t gk = 0; gk < G.dim(); ++gk) {
                if (gh[gk].is_zero()) continue;
                for (std::size_t sk = 0; sk < S.dim(); ++sk) {
                    if (st[sk].is_zero()) continue;
                    auto it = pos.find({gk, sk});
                    if (it == pos.end())
                        throw CheckError("envelope product left the product basis (grading broken)");
                    table[a][b][it->second] += sign * gh[gk] * st[sk];
                }
            }
        }
    }
    std::optional<Vec> unit;
    if (G.has_unit() && S.has_unit()) {
        Vec u(dim, Scalar::zero(f));
        const Vec& gu = *G.unit_coords();
        const Vec& su = *S.unit_coords();
        for (std::size_t i = 0; i < dim; ++i) {
            const auto [g, s] = desc[i];
            u[i] = gu[g] * su[s];
        }
        unit = std::move(u);
    }
    return StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit));
}

IdentityReport check_jordan_super(const GammaAlgebra& g) {
    const StructureAlgebra& A = g.carrier();
    for (std::size_t i : g.even())
        for (std::size_t j : g.even())
            if (!(A.basis_element(i) * A.basis_element(j) ==
                  A.basis_element(j) * A.basis_element(i)))
                throw CheckError("even part is not commutative");
    IdentityReport report;
    report.checks = check_identity(A, IdentityKind::SuperCommutative).checks;
    auto jordan = check_identity(A, IdentityKind::JordanSuper).checks;
    report.checks.insert(report.checks.end(), jordan.begin(), jordan.end());
    if (A.field().characteristic() == 3) {
        auto alt = check_identity(A, IdentityKind::SuperAlternative).checks;
        report.checks.insert(report.checks.end(), alt.begin(), alt.end());
    }
    return report;
}

}  // namespace gammalg
