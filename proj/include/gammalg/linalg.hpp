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

#include <vector>

#include "gammalg/poly.hpp"

namespace gammalg {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

/// Incremental exact row-echelon span. Rows are reduced against stored
/// pivot rows; pivot rows are kept normalized (pivot coefficient 1).
class SpanBasis {
public:
    explicit SpanBasis(FieldSpec field) : field_(field) {}

    /// Reduces v against the basis; returns the residual.
    Vec reduce(Vec v) const;

    /// Inserts v if independent; returns true when the rank grew.
    bool insert(Vec v);

    bool contains(const Vec& v) const;
    std::size_t rank() const { return rows_.size(); }
    const Mat& rows() const { return rows_; }

private:
    FieldSpec field_;
    Mat rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a row matrix by exact Gaussian elimination.
std::size_t matrix_rank(Mat rows, const FieldSpec& field);

/// Basis of { x : rows * x = 0 } (each row one linear condition on x).
Mat nullspace(const Mat& rows, std::size_t ncols, const FieldSpec& field);

/// Matrix-vector product.
Vec mat_apply(const Mat& m, const Vec& x, const FieldSpec& field);

/// Dimension of the linear span of polynomials, via exact elimination over
/// the union of their monomial supports.
std::size_t rank_of_span(const std::vector<Polynomial>& polys);

/// Same for tuples of polynomials (coefficient vectors are concatenated
/// componentwise); all tuples must have equal length.
std::size_t rank_of_span_tuples(const std::vector<std::vector<Polynomial>>& tuples);

/// Coefficient rows of a family of polynomial tuples over the union support
/// (shared helper for the rank and span-membership checks).
Mat coefficient_rows(const std::vector<std::vector<Polynomial>>& tuples);

}  // namespace gammalg
