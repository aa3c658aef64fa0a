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

#include "gammalg/algebra.hpp"

namespace gammalg {

StructureAlgebra::StructureAlgebra(FieldSpec field, std::vector<BasisVector> basis,
                                   std::vector<std::vector<Vec>> table, std::optional<Vec> unit)
    : field_(field), basis_(std::move(basis)), table_(std::move(table)), unit_(std::move(unit)) {
    const std::size_t d = basis_.size();
    if (table_.size() != d) throw ParseError("structure table must have dim rows");
    for (const auto& row : table_) {
        if (row.size() != d) throw ParseError("structure table must be dim x dim");
        for (const auto& entry : row)
            if (entry.size() != d) throw ParseError("structure table entries must have dim coordinates");
    }
    if (unit_ && unit_->size() != d) throw ParseError("unit vector must have dim coordinates");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (basis_[i].label == basis_[j].label)
                throw ParseError("duplicate basis label '" + basis_[i].label + "'");
}

std::optional<std::size_t> StructureAlgebra::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

std::vector<std::size_t> StructureAlgebra::even_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].parity == 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> StructureAlgebra::odd_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].parity == 1) out.push_back(i);
    return out;
}

bool StructureAlgebra::has_odd_part() const {
    for (const auto& b : basis_)
        if (b.parity == 1) return true;
    return false;
}

AlgebraElement StructureAlgebra::element(Vec coords) const {
    if (coords.size() != dim()) throw MismatchError("coordinate vector has wrong length");
    return AlgebraElement(this, std::move(coords));
}

AlgebraElement StructureAlgebra::basis_element(std::size_t i) const {
    Vec v(dim(), Scalar::zero(field_));
    v[i] = Scalar::one(field_);
    return AlgebraElement(this, std::move(v));
}

AlgebraElement StructureAlgebra::zero() const {
    return AlgebraElement(this, Vec(dim(), Scalar::zero(field_)));
}

AlgebraElement StructureAlgebra::unit() const {
    if (!unit_) throw CheckError("algebra has no declared unit");
    return AlgebraElement(this, *unit_);
}

std::string StructureAlgebra::validate() const {
    const std::size_t d = dim();
    if (unit_) {
        for (std::size_t i = 0; i < d; ++i) {
            AlgebraElement b = basis_element(i);
            if (!(unit() * b == b)) return "unit fails unit*" + basis_[i].label;
            if (!(b * unit() == b)) return "unit fails " + basis_[i].label + "*unit";
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const int target = (basis_[i].parity + basis_[j].parity) % 2;
            for (std::size_t k = 0; k < d; ++k) {
                if (!table_[i][j][k].is_zero() && basis_[k].parity != target)
                    return "grading violated by " + basis_[i].label + "*" + basis_[j].label +
                           " (component " + basis_[k].label + ")";
            }
        }
    }
    return {};
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

int AlgebraElement::homogeneous_parity() const {
    int parity = -1;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        const int p = alg_->basis(i).parity;
        if (parity == -1)
            parity = p;
        else if (parity != p)
            return -1;
    }
    return parity;
}

void AlgebraElement::check_same_algebra(const AlgebraElement& o) const {
    if (alg_ != o.alg_) throw MismatchError("elements of different algebras");
}

AlgebraElement AlgebraElement::operator-() const {
    Vec v = coords_;
    for (auto& c : v) c = -c;
    return AlgebraElement(alg_, std::move(v));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check_same_algebra(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    check_same_algebra(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same_algebra(b);
    const StructureAlgebra& A = *a.alg_;
    Vec out(A.dim(), Scalar::zero(A.field()));
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < A.dim(); ++j) {
            if (b.coords_[j].is_zero()) continue;
            const Scalar c = a.coords_[i] * b.coords_[j];
            const Vec& prod = A.table(i, j);
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (!prod[k].is_zero()) out[k] += c * prod[k];
        }
    }
    return AlgebraElement(a.alg_, std::move(out));
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    Vec v = coords_;
    for (auto& x : v) x *= c;
    return AlgebraElement(alg_, std::move(v));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_same_algebra(o);
    return coords_ == o.coords_;
}

std::string AlgebraElement::str() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        std::string cs = coords_[i].str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        out += (cs == "1") ? alg_->basis(i).label : cs + "*" + alg_->basis(i).label;
    }
    return first ? "0" : out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c, bool super) {
    if (super) {
        if (a.homogeneous_parity() < 0 || b.homogeneous_parity() < 0 || c.homogeneous_parity() < 0)
            throw CheckError("super associator needs parity-homogeneous inputs");
    }
    return (a * b) * c - a * (b * c);
}

}  // namespace gammalg
