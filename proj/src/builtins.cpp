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

#include "gammalg/builtins.hpp"

#include <bit>

namespace gammalg {

namespace {

std::vector<std::vector<Vec>> empty_table(std::size_t d, const FieldSpec& f) {
    return std::vector<std::vector<Vec>>(d, std::vector<Vec>(d, Vec(d, Scalar::zero(f))));
}

// Indices 0..3 name e11, e12, e21, e22; the matrix-unit product
// e_ij e_kl = delta_jk e_il in that flat indexing.
int m2_prod(int a, int b) {
    const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
    return j == k ? 2 * i + l : -1;
}

// Symplectic involution on the flat M2 index: returns (index, sign).
std::pair<int, int> m2_bar(int a) {
    switch (a) {
        case 0: return {3, 1};
        case 3: return {0, 1};
        default: return {a, -1};
    }
}

void fill_m2_block(std::vector<std::vector<Vec>>& table, const FieldSpec& f) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int p = m2_prod(a, b);
            if (p >= 0) table[a][b][p] = Scalar::one(f);
        }
}

Vec m2_unit(std::size_t dim, const FieldSpec& f) {
    Vec u(dim, Scalar::zero(f));
    u[0] = Scalar::one(f);
    u[3] = Scalar::one(f);
    return u;
}

// B(4,2) with or without the odd products (split null extension has Cay^2 = 0).
StructureAlgebra make_m2_cay(const FieldSpec& f, bool odd_products) {
    std::vector<BasisVector> basis = {{"e11", 0}, {"e12", 0}, {"e21", 0},
                                      {"e22", 0}, {"m1", 1},  {"m2", 1}};
    auto table = empty_table(6, f);
    fill_m2_block(table, f);
    const Scalar one = Scalar::one(f);
    // e_ij * m_k = delta_ik m_j
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                if (i == k) table[2 * i + j][4 + k][4 + j] = one;
    // m * a = abar * m
    for (int a = 0; a < 4; ++a) {
        auto [ab, sign] = m2_bar(a);
        const int i = ab / 2, j = ab % 2;
        for (int k = 0; k < 2; ++k)
            if (i == k) table[4 + k][a][4 + j] = sign > 0 ? one : -one;
    }
    if (odd_products) {
        table[4][4][2] = one;   // m1 m1 = e21
        table[5][5][1] = -one;  // m2 m2 = -e12
        table[4][5][0] = -one;  // m1 m2 = -e11
        table[5][4][3] = one;   // m2 m1 = e22
    }
    return StructureAlgebra(f, std::move(basis), std::move(table), m2_unit(6, f));
}

}  // namespace

StructureAlgebra make_m2(const FieldSpec& f) {
    std::vector<BasisVector> basis = {{"e11", 0}, {"e12", 0}, {"e21", 0}, {"e22", 0}};
    auto table = empty_table(4, f);
    fill_m2_block(table, f);
    return StructureAlgebra(f, std::move(basis), std::move(table), m2_unit(4, f));
}

StructureAlgebra make_b42(const FieldSpec& f) { return make_m2_cay(f, true); }

StructureAlgebra make_split_null(const FieldSpec& f) { return make_m2_cay(f, false); }

StructureAlgebra make_b12(const FieldSpec& f) {
    std::vector<BasisVector> basis = {{"1", 0}, {"x", 1}, {"y", 1}};
    auto table = empty_table(3, f);
    const Scalar one = Scalar::one(f);
    for (int i = 0; i < 3; ++i) {
        table[0][i][i] = one;
        table[i][0][i] = one;
    }
    table[1][2][0] = one;   // xy = 1
    table[2][1][0] = -one;  // yx = -1
    Vec unit(3, Scalar::zero(f));
    unit[0] = one;
    return StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit));
}

StructureAlgebra make_split_octonions(const FieldSpec& f, const Scalar& v_sq) {
    if (v_sq.is_zero()) throw ParseError("octonion doubling needs v^2 != 0");
    if (!(v_sq.field() == f)) throw MismatchError("v^2 lies in the wrong field");
    std::vector<BasisVector> basis;
    for (const char* l : {"e11", "e12", "e21", "e22"}) basis.push_back({l, 0});
    for (const char* l : {"ve11", "ve12", "ve21", "ve22"}) basis.push_back({l, 1});
    auto table = empty_table(8, f);
    fill_m2_block(table, f);
    const Scalar one = Scalar::one(f);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            // a * vb = v(abar b)
            auto [abar, s1] = m2_bar(a);
            int p = m2_prod(abar, b);
            if (p >= 0) table[a][4 + b][4 + p] = s1 > 0 ? one : -one;
            // vb * a = v(ab)
            p = m2_prod(a, b);
            if (p >= 0) table[4 + b][a][4 + p] = one;
            // va * vb = (b abar) v^2
            p = m2_prod(b, abar);
            if (p >= 0) table[4 + a][4 + b][p] = s1 > 0 ? v_sq : -v_sq;
        }
    }
    return StructureAlgebra(f, std::move(basis), std::move(table), m2_unit(8, f));
}

StructureAlgebra make_grassmann(const FieldSpec& f, unsigned k) {
    if (k > 12) throw ParseError("grassmann(k) supported for k <= 12");
    const std::size_t d = std::size_t{1} << k;
    std::vector<BasisVector> basis;
    for (std::size_t mask = 0; mask < d; ++mask) {
        std::string label;
        for (unsigned g = 0; g < k; ++g)
            if (mask & (std::size_t{1} << g)) label += "g" + std::to_string(g + 1);
        if (label.empty()) label = "1";
        basis.push_back({label, std::popcount(mask) % 2});
    }
    auto table = empty_table(d, f);
    for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
            if (s & t) continue;  // repeated generator
            int inversions = 0;
            for (unsigned gs = 0; gs < k; ++gs) {
                if (!(s & (std::size_t{1} << gs))) continue;
                for (unsigned gt = 0; gt < k; ++gt)
                    if ((t & (std::size_t{1} << gt)) && gt < gs) ++inversions;
            }
            table[s][t][s | t] =
                inversions % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
        }
    }
    Vec unit(d, Scalar::zero(f));
    unit[0] = Scalar::one(f);
    return StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit));
}

StructureAlgebra make_builtin(std::string_view name, const FieldSpec& f,
                              const std::optional<Scalar>& v_sq) {
    if (name == "M2") return make_m2(f);
    if (name == "B42") return make_b42(f);
    if (name == "B12") return make_b12(f);
    if (name == "Cay-split-null") return make_split_null(f);
    if (name == "octonion-split") return make_split_octonions(f, v_sq.value_or(Scalar::one(f)));
    if (name.rfind("grassmann(", 0) == 0 && name.back() == ')') {
        auto body = name.substr(10, name.size() - 11);
        unsigned k = 0;
        for (char c : body) {
            if (c < '0' || c > '9') throw ParseError("bad grassmann parameter");
            k = k * 10 + static_cast<unsigned>(c - '0');
        }
        return make_grassmann(f, k);
    }
    throw ParseError("unknown builtin algebra '" + std::string(name) + "'");
}

StructureAlgebra b42_legacy_presentation(const StructureAlgebra& b42) {
    const FieldSpec& f = b42.field();
    Vec signs(b42.dim(), Scalar::one(f));
    for (std::string_view flip : {"e12", "e21", "m2"}) {
        auto idx = b42.index_of(flip);
        if (!idx) throw CheckError("not a B(4,2)-shaped presentation");
        signs[*idx] = -Scalar::one(f);
    }
    // b'_i = s_i b_i, so c'_{ij}^k = s_i s_j / s_k * c_{ij}^k.
    const std::size_t d = b42.dim();
    std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d, Scalar::zero(f))));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                table[i][j][k] = signs[i] * signs[j] / signs[k] * b42.table(i, j)[k];
    std::optional<Vec> unit;
    if (b42.has_unit()) {
        Vec u = *b42.unit_coords();
        for (std::size_t k = 0; k < d; ++k) u[k] /= signs[k];
        unit = std::move(u);
    }
    return StructureAlgebra(f, b42.basis_vectors(), std::move(table), std::move(unit));
}

AlgebraElement symplectic_involution(const AlgebraElement& a) {
    const StructureAlgebra& A = a.algebra();
    std::size_t idx[4];
    const char* labels[4] = {"e11", "e12", "e21", "e22"};
    for (int k = 0; k < 4; ++k) {
        auto found = A.index_of(labels[k]);
        if (!found) throw CheckError("no identified M2 block (missing basis label e11..e22)");
        idx[k] = *found;
    }
    Vec out(A.dim(), Scalar::zero(A.field()));
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (a[i].is_zero()) continue;
        if (i == idx[0])
            out[idx[3]] += a[i];
        else if (i == idx[3])
            out[idx[0]] += a[i];
        else if (i == idx[1] || i == idx[2])
            out[i] -= a[i];
        else
            throw CheckError("element outside the identified M2 block");
    }
    return A.element(std::move(out));
}

namespace {

Mat left_mult_matrix(const StructureAlgebra& A, const Vec& a) {
    const std::size_t d = A.dim();
    Mat L(d, Vec(d, Scalar::zero(A.field())));
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t c = 0; c < d; ++c) {
            const Vec& prod = A.table(i, c);
            for (std::size_t r = 0; r < d; ++r)
                if (!prod[r].is_zero()) L[r][c] += a[i] * prod[r];
        }
    }
    return L;
}

Mat right_mult_matrix(const StructureAlgebra& A, const Vec& a) {
    const std::size_t d = A.dim();
    Mat R(d, Vec(d, Scalar::zero(A.field())));
    for (std::size_t j = 0; j < d; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t c = 0; c < d; ++c) {
            const Vec& prod = A.table(c, j);
            for (std::size_t r = 0; r < d; ++r)
                if (!prod[r].is_zero()) R[r][c] += a[j] * prod[r];
        }
    }
    return R;
}

Mat mat_mul(const Mat& a, const Mat& b, const FieldSpec& f) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat out(n, Vec(m, Scalar::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Mat mat_sub(Mat a, const Mat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
    return a;
}

}  // namespace

M2Decomposition decompose_m2_bimodule(const StructureAlgebra& alg,
                                      const std::array<Vec, 4>& units) {
    const FieldSpec& f = alg.field();
    const std::size_t d = alg.dim();
    for (const auto& u : units)
        if (u.size() != d) throw MismatchError("embedding vectors have wrong length");
    auto as_elt = [&](const Vec& v) { return alg.element(v); };
    // Matrix-unit relations and e11 + e22 = unit.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            AlgebraElement prod = as_elt(units[a]) * as_elt(units[b]);
            const int p = m2_prod(a, b);
            AlgebraElement expected = p >= 0 ? as_elt(units[p]) : alg.zero();
            if (!(prod == expected)) throw CheckError("matrix-unit relations violated");
        }
    if (!alg.has_unit()) throw CheckError("algebra has no declared unit");
    if (!(as_elt(units[0]) + as_elt(units[3]) == alg.unit()))
        throw CheckError("e11 + e22 is not the unit");

    std::array<Mat, 4> L, R, Rbar;
    for (int a = 0; a < 4; ++a) {
        L[a] = left_mult_matrix(alg, units[a]);
        R[a] = right_mult_matrix(alg, units[a]);
        auto [bi, sign] = m2_bar(a);
        Vec bar = units[bi];
        if (sign < 0)
            for (auto& c : bar) c = -c;
        Rbar[a] = right_mult_matrix(alg, bar);
    }

    // V_c: a*v - v*abar = 0 for each embedded unit a.
    Mat cayley_conditions;
    for (int a = 0; a < 4; ++a) {
        Mat cond = mat_sub(L[a], Rbar[a]);
        for (auto& row : cond) cayley_conditions.push_back(std::move(row));
    }
    // V_a: (a, v, b) = 0 for all pairs of embedded units.
    Mat assoc_conditions;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Mat cond = mat_sub(mat_mul(R[b], L[a], f), mat_mul(L[a], R[b], f));
            for (auto& row : cond) assoc_conditions.push_back(std::move(row));
        }

    M2Decomposition out;
    out.vc_basis = nullspace(cayley_conditions, d, f);
    out.va_basis = nullspace(assoc_conditions, d, f);
    Mat all = out.va_basis;
    all.insert(all.end(), out.vc_basis.begin(), out.vc_basis.end());
    out.complementary = out.va_basis.size() + out.vc_basis.size() == d &&
                        matrix_rank(all, f) == d;
    return out;
}

}  // namespace gammalg
