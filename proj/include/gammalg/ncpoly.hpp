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

#include <map>
#include <string>
#include <vector>

#include "gammalg/poly.hpp"

namespace gammalg {

/// A word over the generator alphabet (sequence of generator indices).
using Word = std::vector<std::uint32_t>;

/// Sparse element of the free associative algebra F<U>. Words never commute.
class NcPolynomial {
public:
    NcPolynomial(FieldSpec field, VarsPtr alphabet)
        : field_(field), alphabet_(std::move(alphabet)) {}

    static NcPolynomial zero(FieldSpec f, VarsPtr a) { return NcPolynomial(f, std::move(a)); }
    static NcPolynomial constant(FieldSpec f, VarsPtr a, const Scalar& c);
    static NcPolynomial generator(FieldSpec f, VarsPtr a, std::size_t index);

    const FieldSpec& field() const { return field_; }
    const VarsPtr& alphabet() const { return alphabet_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);

    NcPolynomial operator-() const;
    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
    NcPolynomial scaled(const Scalar& c) const;

    bool operator==(const NcPolynomial& o) const;

    std::string str() const;

private:
    void check_compatible(const NcPolynomial& o) const;

    FieldSpec field_;
    VarsPtr alphabet_;
    std::map<Word, Scalar> terms_;
};

/// Image under the natural epimorphism F<U> -> F[U]: each word maps to the
/// commutative monomial of its letter multiset. The generator alphabet must
/// map bijectively (by position) onto target_vars.
Polynomial abelianize(const NcPolynomial& f, const VarsPtr& target_vars);

}  // namespace gammalg
