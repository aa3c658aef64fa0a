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

#include "gammalg/bracket.hpp"

namespace gammalg {

namespace {

Vec vec_zero(std::size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

void axpy(Vec& acc, const Scalar& c, const Vec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
}

bool all_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

BracketModule::BracketModule(StructureAlgebra D, std::vector<std::string> vlabels,
                             std::vector<Mat> action, std::vector<std::vector<Vec>> bracket)
    : D_(std::move(D)), vlabels_(std::move(vlabels)), action_(std::move(action)),
      bracket_(std::move(bracket)) {
    const std::size_t dd = D_.dim(), vd = vlabels_.size();
    if (action_.size() != dd) throw ParseError("need one action matrix per D basis vector");
    for (const auto& m : action_) {
        if (m.size() != vd) throw ParseError("action matrix must be vdim x vdim");
        for (const auto& row : m)
            if (row.size() != vd) throw ParseError("action matrix must be vdim x vdim");
    }
    if (bracket_.size() != vd) throw ParseError("bracket table must be vdim x vdim");
    for (const auto& row : bracket_) {
        if (row.size() != vd) throw ParseError("bracket table must be vdim x vdim");
        for (const auto& entry : row)
            if (entry.size() != dd) throw ParseError("bracket values must be D-coordinates");
    }
}

Vec BracketModule::act(const Vec& d, const Vec& v) const {
    Vec out = vec_zero(vdim(), field());
    for (std::size_t i = 0; i < D_.dim(); ++i) {
        if (d[i].is_zero()) continue;
        for (std::size_t c = 0; c < vdim(); ++c) {
            if (v[c].is_zero()) continue;
            const Scalar coeff = d[i] * v[c];
            for (std::size_t r = 0; r < vdim(); ++r)
                if (!action_[i][r][c].is_zero()) out[r] += coeff * action_[i][r][c];
        }
    }
    return out;
}

Vec BracketModule::bracket(const Vec& u, const Vec& v) const {
    Vec out = vec_zero(D_.dim(), field());
    for (std::size_t i = 0; i < vdim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < vdim(); ++j) {
            if (v[j].is_zero()) continue;
            axpy(out, u[i] * v[j], bracket_[i][j]);
        }
    }
    return out;
}

Vec BracketModule::dmul(const Vec& a, const Vec& b) const {
    return (D_.element(a) * D_.element(b)).coords();
}

std::string BracketModule::validate() const {
    const FieldSpec& f = field();
    const std::size_t dd = D_.dim(), vd = vdim();
    if (!D_.has_unit()) return "D has no unit";
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j)
            for (std::size_t k = 0; k < dd; ++k)
                if (!associator(D_.basis_element(i), D_.basis_element(j), D_.basis_element(k))
                         .is_zero())
                    return "D is not associative";
    auto unit_vec = [&](std::size_t i) {
        Vec v = vec_zero(vd, f);
        v[i] = Scalar::one(f);
        return v;
    };
    auto dbasis = [&](std::size_t i) {
        Vec v = vec_zero(dd, f);
        v[i] = Scalar::one(f);
        return v;
    };
    for (std::size_t v = 0; v < vd; ++v)
        if (!(act(*D_.unit_coords(), unit_vec(v)) == unit_vec(v))) return "module action is not unital";
    for (std::size_t a = 0; a < dd; ++a)
        for (std::size_t b = 0; b < dd; ++b) {
            const Vec ab = dmul(dbasis(a), dbasis(b));
            const Vec ba = dmul(dbasis(b), dbasis(a));
            for (std::size_t v = 0; v < vd; ++v) {
                if (!(act(ab, unit_vec(v)) == act(dbasis(a), act(dbasis(b), unit_vec(v)))))
                    return "module action is not associative";
                Vec comm = ab;
                for (std::size_t k = 0; k < dd; ++k) comm[k] -= ba[k];
                if (!all_zero(act(comm, unit_vec(v)))) return "[D,D] does not annihilate V";
            }
        }
    for (std::size_t u = 0; u < vd; ++u)
        for (std::size_t v = u; v < vd; ++v) {
            Vec s = bracket_[u][v];
            for (std::size_t k = 0; k < dd; ++k) s[k] += bracket_[v][u][k];
            if (!all_zero(s)) return "bracket is not skew";
        }
    for (std::size_t u = 0; u < vd; ++u)
        for (std::size_t v = 0; v < vd; ++v) {
            const AlgebraElement z = D_.element(bracket_[u][v]);
            for (std::size_t a = 0; a < dd; ++a) {
                if (!(z * D_.basis_element(a) == D_.basis_element(a) * z))
                    return "bracket values are not central in D";
            }
            // D-bilinearity: <a u, v> = a <u, v>.
            for (std::size_t a = 0; a < dd; ++a) {
                const Vec au = act(dbasis(a), unit_vec(u));
                if (!(bracket(au, unit_vec(v)) == dmul(dbasis(a), bracket_[u][v])))
                    return "bracket is not D-bilinear";
            }
        }
    for (std::size_t u = 0; u < vd; ++u)
        for (std::size_t v = 0; v < vd; ++v)
            for (std::size_t w = 0; w < vd; ++w) {
                Vec s = act(bracket_[u][v], unit_vec(w));
                const Vec s2 = act(bracket_[v][w], unit_vec(u));
                const Vec s3 = act(bracket_[w][u], unit_vec(v));
                for (std::size_t k = 0; k < vd; ++k) {
                    s[k] += s2[k];
                    s[k] += s3[k];
                }
                if (!all_zero(s)) return "cyclic relation <u,v>w + <v,w>u + <w,u>v = 0 fails";
            }
    return {};
}

M2DElement M2DElement::zero(const BracketModule& m) {
    M2DElement e;
    for (auto& slot : e.mat) slot = Vec(m.D().dim(), Scalar::zero(m.field()));
    e.x = Vec(m.vdim(), Scalar::zero(m.field()));
    e.y = Vec(m.vdim(), Scalar::zero(m.field()));
    return e;
}

namespace {

void vec_add(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void vec_sub(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

// (p, q) * M for a 2x2 matrix M over D: (p m11 + q m21, p m12 + q m22),
// module elements multiplying by D from either side via the commutative
// action.
std::pair<Vec, Vec> row_action(const BracketModule& m, const Vec& p, const Vec& q,
                               const std::array<Vec, 4>& M) {
    Vec first = m.act(M[0], p);
    vec_add(first, m.act(M[2], q));
    Vec second = m.act(M[1], p);
    vec_add(second, m.act(M[3], q));
    return {std::move(first), std::move(second)};
}

std::array<Vec, 4> star(const std::array<Vec, 4>& M) {
    std::array<Vec, 4> out = {M[3], M[1], M[2], M[0]};
    for (auto& c : out[1]) c = -c;
    for (auto& c : out[2]) c = -c;
    return out;
}

}  // namespace

M2DElement m2d_multiply(const BracketModule& m, const M2DElement& X, const M2DElement& Y) {
    M2DElement out = M2DElement::zero(m);
    // X_a Y_a
    out.mat[0] = m.dmul(X.mat[0], Y.mat[0]);
    vec_add(out.mat[0], m.dmul(X.mat[1], Y.mat[2]));
    out.mat[1] = m.dmul(X.mat[0], Y.mat[1]);
    vec_add(out.mat[1], m.dmul(X.mat[1], Y.mat[3]));
    out.mat[2] = m.dmul(X.mat[2], Y.mat[0]);
    vec_add(out.mat[2], m.dmul(X.mat[3], Y.mat[2]));
    out.mat[3] = m.dmul(X.mat[2], Y.mat[1]);
    vec_add(out.mat[3], m.dmul(X.mat[3], Y.mat[3]));
    // bracket block: (-<x,t> -<y,t>; <x,z> <y,z>) with (z,t) = Y pair
    vec_sub(out.mat[0], m.bracket(X.x, Y.y));
    vec_sub(out.mat[1], m.bracket(X.y, Y.y));
    vec_add(out.mat[2], m.bracket(X.x, Y.x));
    vec_add(out.mat[3], m.bracket(X.y, Y.x));
    // (z,t) X_a + (x,y) (Y_a)*
    auto [p1, q1] = row_action(m, Y.x, Y.y, X.mat);
    auto [p2, q2] = row_action(m, X.x, X.y, star(Y.mat));
    out.x = std::move(p1);
    vec_add(out.x, p2);
    out.y = std::move(q1);
    vec_add(out.y, q2);
    return out;
}

StructureAlgebra m2d_structure_algebra(const BracketModule& m) {
    const FieldSpec& f = m.field();
    const std::size_t dd = m.D().dim(), vd = m.vdim();
    const std::size_t dim = 4 * dd + 2 * vd;
    const char* slots[4] = {"e11", "e12", "e21", "e22"};
    std::vector<BasisVector> basis;
    for (int s = 0; s < 4; ++s)
        for (std::size_t k = 0; k < dd; ++k)
            basis.push_back({std::string(slots[s]) + "(" + m.D().basis(k).label + ")", 0});
    for (int s = 0; s < 2; ++s)
        for (std::size_t k = 0; k < vd; ++k)
            basis.push_back({"m" + std::to_string(s + 1) + "(" + m.vlabel(k) + ")", 1});

    auto basis_m2d = [&](std::size_t idx) {
        M2DElement e = M2DElement::zero(m);
        if (idx < 4 * dd)
            e.mat[idx / dd][idx % dd] = Scalar::one(f);
        else if (idx < 4 * dd + vd)
            e.x[idx - 4 * dd] = Scalar::one(f);
        else
            e.y[idx - 4 * dd - vd] = Scalar::one(f);
        return e;
    };
    auto flatten = [&](const M2DElement& e) {
        Vec v(dim, Scalar::zero(f));
        for (int s = 0; s < 4; ++s)
            for (std::size_t k = 0; k < dd; ++k) v[s * dd + k] = e.mat[s][k];
        for (std::size_t k = 0; k < vd; ++k) v[4 * dd + k] = e.x[k];
        for (std::size_t k = 0; k < vd; ++k) v[4 * dd + vd + k] = e.y[k];
        return v;
    };

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            table[i][j] = flatten(m2d_multiply(m, basis_m2d(i), basis_m2d(j)));

    M2DElement unit = M2DElement::zero(m);
    unit.mat[0] = *m.D().unit_coords();
    unit.mat[3] = *m.D().unit_coords();
    return StructureAlgebra(f, std::move(basis), std::move(table), flatten(unit));
}

}  // namespace gammalg
