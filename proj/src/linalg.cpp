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

#include "gammalg/linalg.hpp"

#include <set>

namespace gammalg {

namespace {

std::size_t first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

}  // namespace

Vec SpanBasis::reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (p >= v.size()) continue;
        if (v[p].is_zero()) continue;
        const Scalar factor = v[p];
        for (std::size_t k = p; k < v.size(); ++k) v[k] -= factor * rows_[r][k];
    }
    return v;
}

bool SpanBasis::insert(Vec v) {
    v = reduce(std::move(v));
    const std::size_t p = first_nonzero(v);
    if (p == v.size()) return false;
    const Scalar inv = v[p].inverse();
    for (std::size_t k = p; k < v.size(); ++k) v[k] *= inv;
    // keep rows sorted by pivot for determinism
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

bool SpanBasis::contains(const Vec& v) const {
    Vec r = reduce(v);
    return first_nonzero(r) == r.size();
}

std::size_t matrix_rank(Mat rows, const FieldSpec& field) {
    SpanBasis span(field);
    std::size_t rank = 0;
    for (auto& row : rows)
        if (span.insert(std::move(row))) ++rank;
    return rank;
}

Mat nullspace(const Mat& rows, std::size_t ncols, const FieldSpec& field) {
    // Reduced row echelon form of the condition matrix.
    SpanBasis span(field);
    for (const auto& row : rows) {
        if (row.size() != ncols) throw MismatchError("nullspace: ragged condition matrix");
        span.insert(row);
    }
    // Back-substitute to full reduction.
    Mat rref = span.rows();
    std::vector<std::size_t> pivots;
    for (const auto& r : rref) pivots.push_back(first_nonzero(r));
    for (std::size_t i = rref.size(); i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j) {
            const Scalar f = rref[j][pivots[i]];
            if (f.is_zero()) continue;
            for (std::size_t k = 0; k < ncols; ++k) rref[j][k] -= f * rref[i][k];
        }
    }
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    Mat kernel;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (pivot_set.count(free_col)) continue;
        Vec v(ncols, Scalar::zero(field));
        v[free_col] = Scalar::one(field);
        for (std::size_t r = 0; r < rref.size(); ++r) v[pivots[r]] = -rref[r][free_col];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

Vec mat_apply(const Mat& m, const Vec& x, const FieldSpec& field) {
    Vec out(m.size(), Scalar::zero(field));
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != x.size()) throw MismatchError("mat_apply: dimension mismatch");
        for (std::size_t c = 0; c < x.size(); ++c)
            if (!m[r][c].is_zero() && !x[c].is_zero()) out[r] += m[r][c] * x[c];
    }
    return out;
}

Mat coefficient_rows(const std::vector<std::vector<Polynomial>>& tuples) {
    if (tuples.empty()) return {};
    const std::size_t width = tuples.front().size();
    const FieldSpec field = tuples.front().front().field();
    // Union support per component.
    std::vector<std::set<Exponents>> support(width);
    for (const auto& tup : tuples) {
        if (tup.size() != width) throw MismatchError("rank_of_span: ragged tuples");
        for (std::size_t c = 0; c < width; ++c)
            for (const auto& [e, coeff] : tup[c].terms()) support[c].insert(e);
    }
    std::vector<std::size_t> offsets(width + 1, 0);
    for (std::size_t c = 0; c < width; ++c) offsets[c + 1] = offsets[c] + support[c].size();
    Mat rows;
    rows.reserve(tuples.size());
    for (const auto& tup : tuples) {
        Vec row(offsets[width], Scalar::zero(field));
        for (std::size_t c = 0; c < width; ++c) {
            std::size_t k = 0;
            for (const auto& e : support[c]) {
                auto it = tup[c].terms().find(e);
                if (it != tup[c].terms().end()) row[offsets[c] + k] = it->second;
                ++k;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t rank_of_span(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return 0;
    std::vector<std::vector<Polynomial>> tuples;
    tuples.reserve(polys.size());
    for (const auto& p : polys) tuples.push_back({p});
    return rank_of_span_tuples(tuples);
}

std::size_t rank_of_span_tuples(const std::vector<std::vector<Polynomial>>& tuples) {
    if (tuples.empty()) return 0;
    return matrix_rank(coefficient_rows(tuples), tuples.front().front().field());
}

}  // namespace gammalg
