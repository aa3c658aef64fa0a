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

#include <optional>
#include <string>
#include <vector>

#include "gammalg/linalg.hpp"

namespace gammalg {

struct BasisVector {
    std::string label;
    int parity = 0;  // 0 even, 1 odd
};

class AlgebraElement;

/// Finite-dimensional Z2-graded algebra given by structure constants.
/// Immutable after construction; elements are coefficient vectors against
/// the declared basis.
class StructureAlgebra {
public:
    StructureAlgebra(FieldSpec field, std::vector<BasisVector> basis,
                     std::vector<std::vector<Vec>> table, std::optional<Vec> unit);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    const BasisVector& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisVector>& basis_vectors() const { return basis_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Coordinates of basis_i * basis_j.
    const Vec& table(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const std::vector<std::vector<Vec>>& full_table() const { return table_; }

    bool has_unit() const { return unit_.has_value(); }
    const std::optional<Vec>& unit_coords() const { return unit_; }

    std::vector<std::size_t> even_indices() const;
    std::vector<std::size_t> odd_indices() const;
    bool has_odd_part() const;

    AlgebraElement element(Vec coords) const;
    AlgebraElement basis_element(std::size_t i) const;
    AlgebraElement zero() const;
    AlgebraElement unit() const;

    /// Structural diagnostics: unit laws from the table, grading closure.
    /// Returns an empty string when well-formed.
    std::string validate() const;

private:
    FieldSpec field_;
    std::vector<BasisVector> basis_;
    std::vector<std::vector<Vec>> table_;
    std::optional<Vec> unit_;
};

/// Coefficient vector in a StructureAlgebra. Elements must not outlive the
/// algebra they reference.
class AlgebraElement {
public:
    AlgebraElement(const StructureAlgebra* alg, Vec coords)
        : alg_(alg), coords_(std::move(coords)) {}

    const StructureAlgebra& algebra() const { return *alg_; }
    const Vec& coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;

    /// Parity if the element is homogeneous (-1 when zero or mixed).
    int homogeneous_parity() const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scaled(const Scalar& c) const;

    bool operator==(const AlgebraElement& o) const;

    std::string str() const;

private:
    void check_same_algebra(const AlgebraElement& o) const;

    const StructureAlgebra* alg_;
    Vec coords_;
};

/// Bilinear extension of the structure table.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// (ab)c - a(bc). With super=true the inputs must be parity-homogeneous so
/// callers can attach Koszul signs per identity.
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c, bool super = false);

}  // namespace gammalg
